#pragma once

#include <chrono>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "icw/compose.hpp"
#include "icw/fixtures.hpp"
#include "icw/matroid.hpp"

namespace icw {

/// The verification matrix reproduced by `paper-suite`: every desk-scale
/// claim with its expected outcome and a wall-clock limit. All finite-field
/// checks are exact.
struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    double limit_seconds = 0.0;
    std::string note;
};

struct SuiteResult {
    bool pass = true;
    std::uint64_t seed = 0;
    std::vector<CriterionResult> criteria;
    std::string limitations;
};

namespace suite_detail {

inline std::vector<int> iota1(int lo, int hi) {
    std::vector<int> v;
    for (int i = lo; i <= hi; ++i) v.push_back(i);
    return v;
}

inline std::string join_ints(const std::vector<int>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

inline bool fails_exactly(const DecodabilityReport& rep, const std::vector<int>& users) {
    return rep.failing_users() == users;
}

inline std::vector<Trit> random_trits(std::mt19937& rng, int n) {
    std::vector<Trit> x(n);
    for (auto& v : x) v = static_cast<Trit>(rng() % 3);
    return x;
}

inline Instance random_instance(std::mt19937& rng, int max_m) {
    int m = 2 + static_cast<int>(rng() % (max_m - 1));
    std::vector<std::vector<int>> b(m);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            if (j != i && rng() % 2 == 0) b[i - 1].push_back(j);
    return Instance(m, std::move(b));
}

inline int brute_force_mais(const Instance& inst) {
    const int m = inst.m();
    int best = 0;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) s.push_back(i + 1);
        if (static_cast<int>(s.size()) > best && is_acyclic_set(inst, s)) best = static_cast<int>(s.size());
    }
    return best;
}

}  // namespace suite_detail

inline SuiteResult run_paper_suite(std::uint64_t seed = 0xC0FFEE, int trials = 10000) {
    using namespace suite_detail;
    SuiteResult suite;
    suite.seed = seed;
    suite.limitations =
        "The converse claims lambda(I) > 12 and lambda(I') > 8 quantify over all fields and all vector "
        "dimensions t and are not reproducible at desk scale; this suite substitutes the characteristic "
        "obstructions they reduce to (criteria 5-7: representation searches, representation verification, "
        "and the GF(3) rank obstruction).";

    auto run = [&](int id, const std::string& name, double limit, auto&& body) {
        CriterionResult c;
        c.id = id;
        c.name = name;
        c.limit_seconds = limit;
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.pass = body(c);
        } catch (const std::exception& e) {
            c.pass = false;
            c.note = std::string("error: ") + e.what();
        }
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.seconds >= limit) {
            c.pass = false;
            if (!c.note.empty()) c.note += "; ";
            c.note += "over time limit";
        }
        suite.pass = suite.pass && c.pass;
        suite.criteria.push_back(c);
    };

    run(1, "fig1 over GF(3) decodes I1 for all 29 users", 1.0, [&](CriterionResult& c) {
        auto rep = check_decodable({fixtures::matrix("H_fig1", 3)}, fixtures::instance("I1"));
        c.note = "failing users: [" + join_ints(rep.failing_users()) + "]";
        return rep.pass;
    });

    run(2, "fig1 over GF(2) and GF(5) fails I1 exactly at user 9", 1.0, [&](CriterionResult& c) {
        auto rep2 = check_decodable({fixtures::matrix("H_fig1", 2)}, fixtures::instance("I1"));
        auto rep5 = check_decodable({fixtures::matrix("H_fig1", 5)}, fixtures::instance("I1"));
        c.note = "GF(2): [" + join_ints(rep2.failing_users()) + "], GF(5): [" + join_ints(rep5.failing_users()) + "]";
        return fails_exactly(rep2, {9}) && fails_exactly(rep5, {9});
    });

    run(3, "fig1 decodes I2 over GF(2)/GF(5); GF(3) fails exactly at users 5-8", 1.0, [&](CriterionResult& c) {
        auto rep2 = check_decodable({fixtures::matrix("H_fig1", 2)}, fixtures::instance("I2"));
        auto rep5 = check_decodable({fixtures::matrix("H_fig1", 5)}, fixtures::instance("I2"));
        auto rep3 = check_decodable({fixtures::matrix("H_fig1", 3)}, fixtures::instance("I2"));
        c.note = "GF(3) failing: [" + join_ints(rep3.failing_users()) + "]";
        return rep2.pass && rep5.pass && fails_exactly(rep3, {5, 6, 7, 8});
    });

    run(4, "fig2 over GF(2) decodes I3 for all 58 users", 1.0, [&](CriterionResult& c) {
        auto rep = check_decodable({fixtures::matrix("H_fig2", 2)}, fixtures::instance("I3"));
        c.note = "failing users: [" + join_ints(rep.failing_users()) + "]";
        return rep.pass;
    });

    run(5, "scalar representation search: N1 only over char 3, N2 never over char 3", 10.0,
        [&](CriterionResult& c) {
            auto n1 = fixtures::matroid("N1");
            auto n2 = fixtures::matroid("N2");
            bool ok = true;
            std::uint64_t nodes = 0;
            auto expect = [&](const MatroidSpec& s, int p, SearchStatus want) {
                auto out = search_scalar_representation(s, p);
                nodes += out.nodes_explored;
                ok = ok && out.status == want;
            };
            expect(n1, 3, SearchStatus::Found);
            expect(n1, 2, SearchStatus::ExhaustedNone);
            expect(n1, 5, SearchStatus::ExhaustedNone);
            expect(n1, 7, SearchStatus::ExhaustedNone);
            expect(n2, 2, SearchStatus::Found);
            expect(n2, 5, SearchStatus::Found);
            expect(n2, 3, SearchStatus::ExhaustedNone);
            c.note = "nodes explored: " + std::to_string(nodes);
            return ok;
        });

    run(6, "fig1[1..9] represents N1 over GF(3) and N2 over GF(2); fig2[1..18] represents N3 over GF(2)",
        1.0, [&](CriterionResult&) {
            auto slab = [](const BlockMatrix& h, int k) {
                return BlockMatrix(h.select(iota1(1, k)), k, h.t());
            };
            bool a = verify_representation(fixtures::matroid("N1"), slab(fixtures::matrix("H_fig1", 3), 9)).valid;
            bool b = verify_representation(fixtures::matroid("N2"), slab(fixtures::matrix("H_fig1", 2), 9)).valid;
            bool d = verify_representation(fixtures::matroid("N3"), slab(fixtures::matrix("H_fig2", 2), 18)).valid;
            return a && b && d;
        });

    run(7, "GF(3) obstruction: 100 consistent N3 candidates all have rank(H^{9..16}) <= 6", 5.0,
        [&](CriterionResult& c) {
            auto n3 = fixtures::matroid("N3");
            std::mt19937 rng(static_cast<std::uint32_t>(seed));
            int worst = 0;
            for (int k = 0; k < 100; ++k) {
                GfMatrix h = sample_n3_consistent_gf3(rng);
                auto verdict = check_char3_obstruction_n3(n3, h);
                worst = std::max(worst, verdict.rank_9_16);
                if (!verdict.obstructed) return false;
            }
            c.note = "max rank over candidates: " + std::to_string(worst);
            return true;
        });

    run(8, "quadruple-recovery and combination identities hold on all 243 tuples", 1.0, [&](CriterionResult&) {
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
                            if (recover_quadruple(w, gs, ss) != std::array<Trit, 4>{i, j, l, v}) return false;
                            Trit want = g3::reduce(g_eval(i, j, v, w) + 2 * g_eval(i, l, v, w));
                            if (combo_from_partial(i, j, l, g3::reduce(xv + xw)) != want) return false;
                        }
        return true;
    });

    run(9, "nonlinear codec: exhaustive core sweep (users 9-16) plus randomized full round-trips", 30.0,
        [&](CriterionResult& c) {
            Instance i3 = fixtures::instance("I3");
            std::vector<std::vector<int>> side_sets;
            for (int u = 1; u <= 58; ++u) side_sets.push_back(i3.side_info(u));
            // 3^10 settings of x_9..x_18, everything else zero
            G3Message x{};
            for (long long v = 0; v < 59049; ++v) {
                long long rem = v;
                for (int k = 0; k < 10; ++k) {
                    x[8 + k] = static_cast<Trit>(rem % 3);
                    rem /= 3;
                }
                NonlinearCodeword z = encode_i3(x);
                std::vector<Trit> flat(x.begin(), x.end());
                for (int u = 9; u <= 16; ++u) {
                    SideInfo side(58, side_sets[u - 1], flat);
                    if (decode_i3(u, z, side) != x[u - 1]) return false;
                }
            }
            std::mt19937 rng(static_cast<std::uint32_t>(seed));
            for (int trial = 0; trial < trials; ++trial) {
                std::vector<Trit> flat = random_trits(rng, 58);
                G3Message msg{};
                std::copy(flat.begin(), flat.end(), msg.begin());
                NonlinearCodeword z = encode_i3(msg);
                for (int u = 1; u <= 58; ++u) {
                    SideInfo side(58, side_sets[u - 1], flat);
                    if (decode_i3(u, z, side) != flat[u - 1]) {
                        c.note = "first failure: trial " + std::to_string(trial) + ", user " + std::to_string(u);
                        return false;
                    }
                }
            }
            c.note = "59049 sweep settings + " + std::to_string(trials) + " random round-trips";
            return true;
        });

    run(10, "MAIS: Example1 exact 3; witnesses [4]/[8] for I1/I3; brute force agrees on 200 random instances",
        60.0, [&](CriterionResult& c) {
            auto ex = mais(fixtures::instance("Example1"));
            if (ex.status != MaisStatus::Exact || ex.lo != 3) return false;
            auto w1 = mais_check_witness(fixtures::instance("I1"), iota1(1, 4));
            auto w3 = mais_check_witness(fixtures::instance("I3"), iota1(1, 8));
            if (w1.lo != 4 || w3.lo != 8) return false;
            std::mt19937 rng(static_cast<std::uint32_t>(seed) ^ 0x5eedu);
            for (int k = 0; k < 200; ++k) {
                Instance inst = random_instance(rng, 12);
                auto bb = mais(inst);
                if (bb.status != MaisStatus::Exact || bb.lo != brute_force_mais(inst)) return false;
            }
            c.note = "beta_MAIS(I1) >= 4 and beta_MAIS(I3) >= 8 witnessed; rates 4 and 8 achieved per criteria 1/9";
            return true;
        });

    run(11, "composed 87-user (12 symbols) and 91-user (8 symbols) codes round-trip", 60.0,
        [&](CriterionResult& c) {
            LinearCode code{fixtures::matrix("H_fig1", 3)};
            Instance i1 = fixtures::instance("I1");
            Instance ia = fixtures::instance("Ia");
            Instance i3 = fixtures::instance("I3");
            CombinedCodec87 c87(code, i1, i3);
            CombinedCodec91 c91(code, i1, ia, i3);
            if (c87.composed().m() != 87 || c91.composed().m() != 91) return false;
            std::mt19937 rng(static_cast<std::uint32_t>(seed) ^ 0xC0DEu);
            for (int trial = 0; trial < trials; ++trial) {
                std::vector<Trit> x87 = random_trits(rng, 87);
                auto s87 = c87.encode(x87);
                if (s87.size() != 12) return false;
                for (int u = 1; u <= 87; ++u)
                    if (c87.decode_user(u, s87, x87) != x87[u - 1]) {
                        c.note = "87-code failure: trial " + std::to_string(trial) + ", user " + std::to_string(u);
                        return false;
                    }
                std::vector<Trit> x91 = random_trits(rng, 91);
                auto s91 = c91.encode(x91);
                if (s91.size() != 8) return false;
                for (int u = 1; u <= 91; ++u)
                    if (c91.decode_user(u, s91, x91) != x91[u - 1]) {
                        c.note = "91-code failure: trial " + std::to_string(trial) + ", user " + std::to_string(u);
                        return false;
                    }
            }
            c.note = std::to_string(trials) + " round-trips each at rates 12 = 4+8 and 8 = max{4+4, 8}";
            return true;
        });

    run(12, "converse claims beyond desk scale are documented and substituted by criteria 5-7", 1.0,
        [&](CriterionResult& c) {
            c.note = suite.limitations;
            return !suite.limitations.empty();
        });

    return suite;
}

}  // namespace icw
