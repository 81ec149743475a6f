#include <catch2/catch_amalgamated.hpp>

#include "icw/field.hpp"

using namespace icw;

static const int kPrimes[] = {2, 3, 5, 7, 11, 13};

TEST_CASE("construction accepts exactly the supported primes") {
    for (int p : kPrimes) CHECK(FieldSpec(p).characteristic() == p);
    for (int bad : {0, 1, 4, 6, 8, 9, 10, 12, 14, 17}) CHECK_THROWS_AS(FieldSpec(bad), Error);
}

TEST_CASE("pinned scalar examples") {
    FieldSpec f3(3), f2(2);
    CHECK(f3.add(2, 2) == 1);
    CHECK(f2.mul(1, 1) == 1);
    // brute-force oracle: the unique c with 2c = 1 mod 3
    int inv2 = -1;
    for (int c = 1; c < 3; ++c)
        if (2 * c % 3 == 1) inv2 = c;
    CHECK(f3.inv(2) == inv2);
    CHECK(inv2 == 2);
}

TEST_CASE("field axioms hold exhaustively for every supported p") {
    for (int p : kPrimes) {
        FieldSpec f(p);
        for (int a = 0; a < p; ++a) {
            Scalar sa = Scalar(a);
            CHECK(f.add(sa, 0) == sa);
            CHECK(f.mul(sa, 1) == sa);
            CHECK(f.add(sa, f.neg(sa)) == 0);
            if (a != 0) CHECK(f.mul(sa, f.inv(sa)) == 1);
            for (int b = 0; b < p; ++b) {
                Scalar sb = Scalar(b);
                CHECK(f.add(sa, sb) == f.add(sb, sa));
                CHECK(f.mul(sa, sb) == f.mul(sb, sa));
                CHECK(f.sub(f.add(sa, sb), sb) == sa);
                for (int c = 0; c < p; ++c) {
                    Scalar sc = Scalar(c);
                    CHECK(f.add(f.add(sa, sb), sc) == f.add(sa, f.add(sb, sc)));
                    CHECK(f.mul(f.mul(sa, sb), sc) == f.mul(sa, f.mul(sb, sc)));
                    CHECK(f.mul(sa, f.add(sb, sc)) == f.add(f.mul(sa, sb), f.mul(sa, sc)));
                }
            }
        }
    }
}

TEST_CASE("checked arithmetic dispatcher") {
    FieldSpec f5(5);
    CHECK(field_arith(f5, FieldOp::Add, 4, 3) == 2);
    CHECK(field_arith(f5, FieldOp::Inv, 0, 3) == 2);  // a ignored for inv
    CHECK_THROWS_MATCHES(field_arith(f5, FieldOp::Inv, 0, 0), Error,
                         Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("InversionOfZero")));
    CHECK_THROWS_MATCHES(field_arith(f5, FieldOp::Add, 5, 0), Error,
                         Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("NotInField")));
}
