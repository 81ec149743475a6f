#include <catch2/catch_amalgamated.hpp>
#include <algorithm>
#include <random>

#include "icw/fixtures.hpp"
#include "icw/nlcode.hpp"

using namespace icw;

namespace {

G3Message from_flat(const std::vector<Trit>& flat) {
    G3Message m{};
    std::copy(flat.begin(), flat.end(), m.begin());
    return m;
}

std::vector<Trit> random_message(std::mt19937& rng) {
    std::vector<Trit> x(58);
    for (auto& v : x) v = static_cast<Trit>(rng() % 3);
    return x;
}

SideInfo side_for(const Instance& i3, int user, const std::vector<Trit>& flat) {
    return SideInfo(58, i3.side_info(user), flat);
}

/// Literal transcription of the four auxiliary sums used in the recovery
/// identity, straight from raw variables; the production path must agree.
Trit identity_oracle_total(int xi, int xj, int xl, int xv, int xw) {
    auto g = [](int a, int b, int c, int d) { return g_eval(Trit(a), Trit(b), Trit(c), Trit(d)); };
    int a1 = g(xi, xj, xl, xw) + g(xi, xj, xv, xw) + g(xi, xl, xv, xw) + g(xj, xl, xv, xw);
    int a2 = (xi + xj + xl) * (xi + xj + xv) * (xi + xl + xv);
    int a3 = 2 * (xi + xj + xl) * (xi + xj + xl) * (2 * xi + xj + xl + 2 * xv) +
             2 * (xi + xj + xv) * (xi + xj + xv) * (2 * xi + xj + xv + 2 * xl) +
             2 * (xi + xl + xv) * (xi + xl + xv) * (2 * xi + xl + xv + 2 * xj);
    int a4 = 2 * ((xi + xj + xl) * (xi + xj + xl) + (xi + xj + xv) * (xi + xj + xv) +
                  (xi + xl + xv) * (xi + xl + xv) + (xj + xl + xv) * (xj + xl + xv));
    return g3::reduce(a1 + a2 + a3 + a4 * (1 + 2 * xw));
}

}  // namespace

TEST_CASE("g evaluation") {
    CHECK(g_eval(0, 0, 0, 0) == 0);
    CHECK(g_eval(1, 1, 1, 1) == 1);
    SECTION("fully symmetric in its four arguments") {
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                for (int c = 0; c < 3; ++c)
                    for (int d = 0; d < 3; ++d) {
                        std::array<int, 4> t{a, b, c, d};
                        std::sort(t.begin(), t.end());
                        Trit want = g_eval(Trit(t[0]), Trit(t[1]), Trit(t[2]), Trit(t[3]));
                        do {
                            CHECK(g_eval(Trit(t[0]), Trit(t[1]), Trit(t[2]), Trit(t[3])) == want);
                        } while (std::next_permutation(t.begin(), t.end()));
                    }
    }
}

TEST_CASE("recovery identity matches the raw-variable oracle on all 243 tuples") {
    for (int xi = 0; xi < 3; ++xi)
        for (int xj = 0; xj < 3; ++xj)
            for (int xl = 0; xl < 3; ++xl)
                for (int xv = 0; xv < 3; ++xv)
                    for (int xw = 0; xw < 3; ++xw) {
                        Trit want = g3::reduce(xi + xj + xl + xv);
                        REQUIRE(identity_oracle_total(xi, xj, xl, xv, xw) == want);
                        Trit a1 = g3::reduce(g_eval(Trit(xi), Trit(xj), Trit(xl), Trit(xw)) +
                                             g_eval(Trit(xi), Trit(xj), Trit(xv), Trit(xw)) +
                                             g_eval(Trit(xi), Trit(xl), Trit(xv), Trit(xw)) +
                                             g_eval(Trit(xj), Trit(xl), Trit(xv), Trit(xw)));
                        REQUIRE(quadruple_total(a1, g3::reduce(xi + xj + xl), g3::reduce(xi + xj + xv),
                                                g3::reduce(xi + xl + xv), g3::reduce(xj + xl + xv),
                                                Trit(xw)) == want);
                    }
}

TEST_CASE("quadruple recovery") {
    SECTION("all-zero inputs") {
        std::array<Trit, 4> z{0, 0, 0, 0};
        CHECK(recover_quadruple(0, z, z) == std::array<Trit, 4>{0, 0, 0, 0});
    }
    SECTION("exhaustive round-trip over all 243 tuples") {
        for (int xi = 0; xi < 3; ++xi)
            for (int xj = 0; xj < 3; ++xj)
                for (int xl = 0; xl < 3; ++xl)
                    for (int xv = 0; xv < 3; ++xv)
                        for (int xw = 0; xw < 3; ++xw) {
                            Trit i = Trit(xi), j = Trit(xj), l = Trit(xl), v = Trit(xv), w = Trit(xw);
                            std::array<Trit, 4> gs{g_eval(i, j, l, w), g_eval(i, j, v, w),
                                                   g_eval(i, l, v, w), g_eval(j, l, v, w)};
                            std::array<Trit, 4> ss{g3::reduce(xi + xj + xl), g3::reduce(xi + xj + xv),
                                                   g3::reduce(xi + xl + xv), g3::reduce(xj + xl + xv)};
                            REQUIRE(recover_quadruple(w, gs, ss) == std::array<Trit, 4>{i, j, l, v});
                        }
    }
    SECTION("pinned case") {
        Trit i = 1, j = 2, l = 0, v = 1, w = 2;
        std::array<Trit, 4> gs{g_eval(i, j, l, w), g_eval(i, j, v, w), g_eval(i, l, v, w),
                               g_eval(j, l, v, w)};
        std::array<Trit, 4> ss{g3::reduce(1 + 2 + 0), g3::reduce(1 + 2 + 1), g3::reduce(1 + 0 + 1),
                               g3::reduce(2 + 0 + 1)};
        CHECK(recover_quadruple(w, gs, ss) == std::array<Trit, 4>{1, 2, 0, 1});
    }
    SECTION("inputs matching no tuple are rejected") {
        std::array<Trit, 4> gs{1, 0, 0, 0};
        std::array<Trit, 4> ss{0, 0, 0, 0};
        CHECK_THROWS_AS(recover_quadruple(0, gs, ss), Error);
    }
}

TEST_CASE("partial-sum combination") {
    CHECK(combo_from_partial(0, 0, 0, 0) == 0);
    SECTION("well-defined in xv + xw and equal to the direct combination") {
        for (int xi = 0; xi < 3; ++xi)
            for (int xj = 0; xj < 3; ++xj)
                for (int xl = 0; xl < 3; ++xl)
                    for (int xv = 0; xv < 3; ++xv)
                        for (int xw = 0; xw < 3; ++xw) {
                            Trit direct = g3::reduce(g_eval(Trit(xi), Trit(xj), Trit(xv), Trit(xw)) +
                                                     2 * g_eval(Trit(xi), Trit(xl), Trit(xv), Trit(xw)));
                            REQUIRE(combo_from_partial(Trit(xi), Trit(xj), Trit(xl),
                                                       g3::reduce(xv + xw)) == direct);
                        }
    }
}

TEST_CASE("encoder") {
    SECTION("zero to zero") { CHECK(encode_i3(G3Message{}) == NonlinearCodeword{}); }
    SECTION("unit messages") {
        G3Message e1{};
        e1[0] = 1;
        CHECK(encode_i3(e1) == NonlinearCodeword{1, 0, 0, 0, 0, 0, 0, 0});
        G3Message e9{};
        e9[8] = 1;
        CHECK(encode_i3(e9) == NonlinearCodeword{1, 0, 1, 0, 1, 0, 0, 0});
    }
    SECTION("rate is eight symbols for 58 messages") {
        CHECK(std::tuple_size<NonlinearCodeword>::value == 8);
        CHECK(std::tuple_size<G3Message>::value == 58);
    }
    SECTION("entries validated") {
        G3Message bad{};
        bad[0] = 3;
        CHECK_THROWS_AS(encode_i3(bad), Error);
    }
}

TEST_CASE("conditional linearity outside the g-arguments") {
    // messages agreeing on coordinates {9,11,13,15,17} differ by the fixed
    // linear map given by the shipped 8 x 58 matrix read over GF(3)
    BlockMatrix l = fixtures::matrix("H_fig2", 3);
    std::mt19937 rng(67);
    for (int trial = 0; trial < 300; ++trial) {
        auto xa = random_message(rng);
        auto xb = random_message(rng);
        for (int j : {9, 11, 13, 15, 17}) xb[j - 1] = xa[j - 1];
        auto za = encode_i3(from_flat(xa));
        auto zb = encode_i3(from_flat(xb));
        std::vector<Scalar> diff(58);
        for (int j = 0; j < 58; ++j) diff[j] = g3::sub(xa[j], xb[j]);
        auto ldiff = mat_vec(l.inner(), diff);
        for (int k = 0; k < 8; ++k) REQUIRE(g3::sub(za[k], zb[k]) == ldiff[k]);
    }
}

TEST_CASE("decoder round-trips") {
    Instance i3 = fixtures::instance("I3");
    SECTION("all-zero message") {
        std::vector<Trit> zero(58, 0);
        auto z = encode_i3(G3Message{});
        for (int u = 1; u <= 58; ++u) CHECK(decode_i3(u, z, side_for(i3, u, zero)) == 0);
    }
    SECTION("seeded random round-trips for every user") {
        std::mt19937 rng(0xC0FFEE);
        for (int trial = 0; trial < 10000; ++trial) {
            auto flat = random_message(rng);
            auto z = encode_i3(from_flat(flat));
            for (int u = 1; u <= 58; ++u) {
                if (decode_i3(u, z, side_for(i3, u, flat)) != flat[u - 1])
                    FAIL("user " << u << " failed at trial " << trial);
            }
        }
        SUCCEED("10000 trials x 58 users");
    }
    SECTION("nonlinear-core sweep sample") {
        // the full 3^10 sweep runs in the acceptance suite; spot-check a slice
        for (int v9 = 0; v9 < 3; ++v9)
            for (int v11 = 0; v11 < 3; ++v11)
                for (int v13 = 0; v13 < 3; ++v13)
                    for (int v15 = 0; v15 < 3; ++v15)
                        for (int v17 = 0; v17 < 3; ++v17) {
                            std::vector<Trit> flat(58, 0);
                            flat[8] = Trit(v9);
                            flat[10] = Trit(v11);
                            flat[12] = Trit(v13);
                            flat[14] = Trit(v15);
                            flat[16] = Trit(v17);
                            auto z = encode_i3(from_flat(flat));
                            for (int u = 9; u <= 16; ++u)
                                REQUIRE(decode_i3(u, z, side_for(i3, u, flat)) == flat[u - 1]);
                        }
    }
}

TEST_CASE("decoders read only their side information") {
    Instance i3 = fixtures::instance("I3");
    std::mt19937 rng(71);
    auto flat = random_message(rng);
    auto z = encode_i3(from_flat(flat));
    for (int u = 1; u <= 58; ++u) {
        SideInfo side = side_for(i3, u, flat);
        (void)decode_i3(u, z, side);
        auto a = i3.side_info(u);
        for (int j : side.accessed()) CHECK(std::count(a.begin(), a.end(), j) == 1);
    }
    SECTION("withholding a needed coordinate raises") {
        // user 10 needs x_11 (a g argument it cannot reconstruct)
        std::vector<int> partial = i3.side_info(10);
        partial.erase(std::remove(partial.begin(), partial.end(), 11), partial.end());
        SideInfo crippled(58, partial, flat);
        CHECK_THROWS_AS(decode_i3(10, encode_i3(from_flat(flat)), crippled), Error);
    }
    SECTION("user index validation") {
        CHECK_THROWS_AS(decode_i3(0, z, side_for(i3, 1, flat)), Error);
        CHECK_THROWS_AS(decode_i3(59, z, side_for(i3, 1, flat)), Error);
    }
}
