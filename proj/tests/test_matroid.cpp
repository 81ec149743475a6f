#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "icw/fixtures.hpp"
#include "icw/matroid.hpp"

using namespace icw;

namespace {

BlockMatrix leading_slab(const BlockMatrix& h, int n) {
    std::vector<int> lead;
    for (int i = 1; i <= n; ++i) lead.push_back(i);
    return BlockMatrix(h.select(lead), n, h.t());
}

GfMatrix random_invertible(std::mt19937& rng, FieldSpec f, int n) {
    while (true) {
        GfMatrix m(f, n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) m.set(r, c, static_cast<Scalar>(rng() % f.p()));
        if (m.rank() == n) return m;
    }
}

}  // namespace

TEST_CASE("representation verification on the shipped data") {
    CHECK(verify_representation(fixtures::matroid("N1"), leading_slab(fixtures::matrix("H_fig1", 3), 9)).valid);
    CHECK(verify_representation(fixtures::matroid("N2"), leading_slab(fixtures::matrix("H_fig1", 2), 9)).valid);
    CHECK(verify_representation(fixtures::matroid("N3"), leading_slab(fixtures::matrix("H_fig2", 2), 18)).valid);

    SECTION("violations are reported per constraint") {
        // over GF(2) the slab {5,6,7,8} has full rank, so N1's last circuit breaks
        auto rep = verify_representation(fixtures::matroid("N1"), leading_slab(fixtures::matrix("H_fig1", 2), 9));
        CHECK_FALSE(rep.valid);
        bool found = false;
        for (const auto& v : rep.violations)
            if (v.kind == "circuit" && v.set == std::vector<int>{5, 6, 7, 8}) found = true;
        CHECK(found);
        // and symmetrically N2's second basis breaks over GF(3)
        auto rep3 = verify_representation(fixtures::matroid("N2"), leading_slab(fixtures::matrix("H_fig1", 3), 9));
        CHECK_FALSE(rep3.valid);
        CHECK(rep3.violations.size() == 1);
        CHECK(rep3.violations[0].kind == "basis");
    }
    SECTION("dimension guard") {
        CHECK_THROWS_AS(verify_representation(fixtures::matroid("N1"), fixtures::matrix("H_fig1", 3)), Error);
    }
}

TEST_CASE("scalar representation search across characteristics") {
    MatroidSpec n1 = fixtures::matroid("N1");
    MatroidSpec n2 = fixtures::matroid("N2");

    SECTION("N1 is representable exactly over characteristic three") {
        CHECK(search_scalar_representation(n1, 3).status == SearchStatus::Found);
        CHECK(search_scalar_representation(n1, 2).status == SearchStatus::ExhaustedNone);
        CHECK(search_scalar_representation(n1, 5).status == SearchStatus::ExhaustedNone);
    }
    SECTION("N2 is representable exactly away from characteristic three") {
        CHECK(search_scalar_representation(n2, 2).status == SearchStatus::Found);
        CHECK(search_scalar_representation(n2, 5).status == SearchStatus::Found);
        CHECK(search_scalar_representation(n2, 3).status == SearchStatus::ExhaustedNone);
    }
    SECTION("found witnesses re-verify") {
        for (auto [spec, p] : {std::pair{&n1, 3}, std::pair{&n2, 2}, std::pair{&n2, 5}}) {
            auto out = search_scalar_representation(*spec, p);
            REQUIRE(out.status == SearchStatus::Found);
            REQUIRE(out.witness.has_value());
            CHECK(verify_representation(*spec, *out.witness).valid);
        }
    }
    SECTION("the GF(2) witness for N2 is the shipped matrix slab") {
        auto out = search_scalar_representation(n2, 2);
        REQUIRE(out.witness.has_value());
        CHECK(out.witness->inner() == leading_slab(fixtures::matrix("H_fig1", 2), 9).inner());
    }
    SECTION("deterministic outcome and node count") {
        auto a = search_scalar_representation(n1, 3);
        auto b = search_scalar_representation(n1, 3);
        CHECK(a.nodes_explored == b.nodes_explored);
        REQUIRE(a.witness.has_value());
        REQUIRE(b.witness.has_value());
        CHECK(a.witness->inner() == b.witness->inner());
    }
    SECTION("budget exhaustion is a status") {
        Budget tiny;
        tiny.max_nodes = 10;
        CHECK(search_scalar_representation(n1, 7, tiny).status == SearchStatus::Budget);
    }
    SECTION("preconditions") {
        MatroidSpec wide = n1;
        wide.t = 2;
        CHECK_THROWS_AS(search_scalar_representation(wide, 3), Error);
        MatroidSpec no_basis = n1;
        no_basis.basis_sets.clear();
        CHECK_THROWS_AS(search_scalar_representation(no_basis, 3), Error);
    }
}

TEST_CASE("normalization soundness: denormalized witnesses still verify") {
    MatroidSpec n1 = fixtures::matroid("N1");
    auto out = search_scalar_representation(n1, 3);
    REQUIRE(out.status == SearchStatus::Found);
    std::mt19937 rng(61);
    FieldSpec f3(3);
    for (int trial = 0; trial < 20; ++trial) {
        GfMatrix a = random_invertible(rng, f3, 4);
        GfMatrix m = mat_mul(a, out.witness->inner());
        for (int c = 0; c < m.cols(); ++c) {
            Scalar lambda = static_cast<Scalar>(1 + rng() % 2);
            for (int r = 0; r < m.rows(); ++r) m.set(r, c, f3.mul(m.at(r, c), lambda));
        }
        CHECK(verify_representation(n1, BlockMatrix(m, 9, 1)).valid);
    }
}

TEST_CASE("circuit coefficients of a found witness are all nonzero") {
    MatroidSpec n1 = fixtures::matroid("N1");
    auto out = search_scalar_representation(n1, 3);
    REQUIRE(out.witness.has_value());
    for (const auto& c : n1.circuit_sets) {
        for (int j : c) {
            auto coef = circuit_coefficients(*out.witness, c, j);
            REQUIRE(coef.has_value());
            for (Scalar v : *coef) CHECK(v != 0);
        }
    }
}

TEST_CASE("characteristic-three obstruction for N3") {
    MatroidSpec n3 = fixtures::matroid("N3");
    SECTION("sampled consistent candidates are always rank-deficient on columns 9..16") {
        std::mt19937 rng(0xC0FFEE);
        for (int k = 0; k < 40; ++k) {
            GfMatrix h = sample_n3_consistent_gf3(rng);
            auto v = check_char3_obstruction_n3(n3, h);
            CHECK(v.obstructed);
            CHECK(v.rank_9_16 <= 6);
            CHECK(v.violated_constraint == "rank_at_least({9..16}) >= 7");
        }
    }
    SECTION("the shipped matrix reduced mod 3 exhibits the same violation") {
        BlockMatrix slab = leading_slab(fixtures::matrix("H_fig2", 3), 18);
        auto v = check_char3_obstruction_n3(n3, slab.inner());
        CHECK(v.obstructed);
        CHECK(v.rank_9_16 == 6);
    }
    SECTION("precondition violations are rejected") {
        GfMatrix junk(FieldSpec(3), 8, 18);  // all zero: basis fails
        CHECK_THROWS_AS(check_char3_obstruction_n3(n3, junk), Error);
        GfMatrix wrong_field = leading_slab(fixtures::matrix("H_fig2", 2), 18).inner();
        CHECK_THROWS_AS(check_char3_obstruction_n3(n3, wrong_field), Error);
        CHECK_THROWS_AS(check_char3_obstruction_n3(n3, GfMatrix(FieldSpec(3), 8, 17)), Error);
    }
}

TEST_CASE("matroid spec validation") {
    MatroidSpec bad = fixtures::matroid("N1");
    bad.basis_sets.push_back({1, 2, 3});  // wrong size
    CHECK_THROWS_AS(bad.validate(), Error);
    MatroidSpec dup = fixtures::matroid("N3");
    dup.quasi_circuit_sets.push_back({1, 2, 3});  // not a pair union
    CHECK_THROWS_AS(dup.validate(), Error);
}
