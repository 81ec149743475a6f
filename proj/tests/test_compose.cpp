#include <catch2/catch_amalgamated.hpp>
#include <functional>
#include <random>

#include "icw/compose.hpp"
#include "icw/fixtures.hpp"

using namespace icw;

namespace {

bool decodes_every_user(const GfMatrix& h, const Instance& inst) {
    BlockMatrix b(h, inst.m(), 1);
    for (int i = 1; i <= inst.m(); ++i) {
        std::vector<int> bi = inst.interfering(i);
        int rank_b = b.select(bi).rank();
        bi.push_back(i);
        if (b.select(bi).rank() != rank_b + 1) return false;
    }
    return true;
}

/// Exhaustive feasibility of a rate-r scalar linear code over GF(p).
/// Decodability depends only on the row space of H, so enumerating reduced
/// row echelon forms covers every candidate code.
bool scalar_rate_feasible(const Instance& inst, int p, int r) {
    const int m = inst.m();
    if (r >= m) return true;  // uncoded transmission
    FieldSpec f(p);
    bool feasible = false;
    std::vector<int> pivots(r);
    std::function<void(int, int)> choose = [&](int idx, int from) {
        if (feasible) return;
        if (idx == r) {
            // free entries: row i, column c > pivots[i] with c not a pivot
            std::vector<std::pair<int, int>> free_cells;
            for (int i = 0; i < r; ++i)
                for (int c = pivots[i] + 1; c < m; ++c)
                    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
                        free_cells.emplace_back(i, c);
            long long total = 1;
            for (size_t k = 0; k < free_cells.size(); ++k) total *= p;
            for (long long v = 0; v < total && !feasible; ++v) {
                GfMatrix h(f, r, m);
                for (int i = 0; i < r; ++i) h.set(i, pivots[i], 1);
                long long rem = v;
                for (auto [i, c] : free_cells) {
                    h.set(i, c, static_cast<Scalar>(rem % p));
                    rem /= p;
                }
                if (decodes_every_user(h, inst)) feasible = true;
            }
            return;
        }
        for (int c = from; c < m; ++c) {
            pivots[idx] = c;
            choose(idx + 1, c + 1);
        }
    };
    choose(0, 0);
    return feasible;
}

/// rate == r certified by feasibility at r and exhaustive infeasibility at r-1.
void check_scalar_rate_is(const Instance& inst, int p, int r) {
    INFO("expected rate " << r << " over GF(" << p << ")");
    CHECK(scalar_rate_feasible(inst, p, r));
    CHECK_FALSE(scalar_rate_feasible(inst, p, r - 1));
}

Instance cycle3() { return Instance(3, {{2}, {3}, {1}}); }
Instance independent_n(int n) {
    std::vector<std::vector<int>> b(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (j != i) b[i - 1].push_back(j);
    return Instance(n, std::move(b));
}

}  // namespace

TEST_CASE("no-way connection") {
    Instance i1 = fixtures::instance("I1");
    Instance i3 = fixtures::instance("I3");
    Instance c = no_way(i1, i3);
    CHECK(c.m() == 87);
    SECTION("part-1 users gain the whole second part as interference") {
        for (int j = 30; j <= 87; ++j) CHECK(c.interferes(1, j));
        // and keep their own interference
        for (int j : i1.interfering(1)) CHECK(c.interferes(1, j));
        CHECK(c.knows(1, 9));  // original side information survives
    }
    SECTION("second-part users are shifted and gain the first part") {
        for (int j = 1; j <= 29; ++j) CHECK(c.interferes(30, j));
        CHECK(c.interferes(30 + 16, 30 + 17));  // B_17 = {18} shifted by 29
    }
    SECTION("empty left operand is the identity") {
        Instance empty(0, {});
        Instance d = no_way(empty, i1);
        CHECK(d.m() == 29);
        for (int i = 1; i <= 29; ++i) CHECK(d.interfering(i) == i1.interfering(i));
    }
}

TEST_CASE("two-way connection") {
    Instance i1 = fixtures::instance("I1");
    Instance ia = fixtures::instance("Ia");
    Instance i3 = fixtures::instance("I3");
    Instance inner = no_way(i1, ia);
    Instance c = two_way(inner, i3);
    CHECK(c.m() == 91);
    SECTION("interfering sets are unchanged up to the shift") {
        for (int i = 1; i <= 33; ++i) CHECK(c.interfering(i) == inner.interfering(i));
        for (int i = 1; i <= 58; ++i) {
            std::vector<int> want;
            for (int j : i3.interfering(i)) want.push_back(j + 33);
            CHECK(c.interfering(33 + i) == want);
        }
    }
    SECTION("the inner no-way junction persists: user 30 interferes with all of part 1") {
        for (int j = 1; j <= 29; ++j) CHECK(c.interferes(30, j));
    }
    SECTION("size additivity") {
        CHECK(two_way(i1, ia).m() == 33);
        CHECK(no_way(ia, ia).m() == 8);
    }
}

TEST_CASE("linear rates add under no-way and max under two-way (brute force)") {
    Instance c3 = cycle3();
    Instance ind3 = independent_n(3);
    for (int p : {2, 3}) {
        INFO("p = " << p);
        check_scalar_rate_is(c3, p, 2);
        check_scalar_rate_is(ind3, p, 3);
        check_scalar_rate_is(no_way(c3, c3), p, 2 + 2);
        check_scalar_rate_is(no_way(c3, ind3), p, 2 + 3);
        check_scalar_rate_is(two_way(c3, ind3), p, std::max(2, 3));
        check_scalar_rate_is(two_way(c3, c3), p, std::max(2, 2));
    }
}

TEST_CASE("combined 87-user code") {
    LinearCode code{fixtures::matrix("H_fig1", 3)};
    CombinedCodec87 codec(code, fixtures::instance("I1"), fixtures::instance("I3"));
    CHECK(codec.composed().m() == 87);

    SECTION("zero maps to twelve zero symbols") {
        std::vector<Trit> x(87, 0);
        auto s = codec.encode(x);
        CHECK(s == std::vector<Trit>(12, 0));
        for (int u = 1; u <= 87; ++u) CHECK(codec.decode_user(u, s, x) == 0);
    }
    SECTION("random round-trips") {
        std::mt19937 rng(73);
        for (int trial = 0; trial < 500; ++trial) {
            std::vector<Trit> x(87);
            for (auto& v : x) v = static_cast<Trit>(rng() % 3);
            auto s = codec.encode(x);
            REQUIRE(s.size() == 12);
            for (int u = 1; u <= 87; ++u) REQUIRE(codec.decode_user(u, s, x) == x[u - 1]);
        }
    }
    SECTION("input validation") {
        CHECK_THROWS_AS(codec.encode(std::vector<Trit>(86, 0)), Error);
        CHECK_THROWS_AS(codec.decode_user(88, std::vector<Trit>(12, 0), std::vector<Trit>(87, 0)), Error);
    }
}

TEST_CASE("combined 91-user code") {
    LinearCode code{fixtures::matrix("H_fig1", 3)};
    CombinedCodec91 codec(code, fixtures::instance("I1"), fixtures::instance("Ia"),
                          fixtures::instance("I3"));
    CHECK(codec.composed().m() == 91);

    SECTION("zero maps to eight zero symbols") {
        std::vector<Trit> x(91, 0);
        auto s = codec.encode(x);
        CHECK(s == std::vector<Trit>(8, 0));
        for (int u = 1; u <= 91; ++u) CHECK(codec.decode_user(u, s, x) == 0);
    }
    SECTION("random round-trips") {
        std::mt19937 rng(79);
        for (int trial = 0; trial < 500; ++trial) {
            std::vector<Trit> x(91);
            for (auto& v : x) v = static_cast<Trit>(rng() % 3);
            auto s = codec.encode(x);
            REQUIRE(s.size() == 8);
            for (int u = 1; u <= 91; ++u) REQUIRE(codec.decode_user(u, s, x) == x[u - 1]);
        }
    }
}
