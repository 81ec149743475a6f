#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "icw/block.hpp"
#include "icw/budget.hpp"

namespace icw {

/// Constraint bundle describing a matroid instance: declared basis, circuit
/// and quasi-circuit sets plus rank lower bounds. The declared constraints
/// (together with rank(H^{i}) = t for all i) form the representation
/// contract checked by verify_representation.
struct MatroidSpec {
    int n = 0;     // ground size
    int f = 0;     // rank
    int t = 1;     // representation width
    std::vector<std::vector<int>> basis_sets;
    std::vector<std::vector<int>> circuit_sets;
    std::vector<std::vector<int>> quasi_circuit_sets;              // unions of pairs {2j-1,2j}
    std::vector<std::pair<std::vector<int>, int>> rank_at_least;   // (set, min rank)

    void validate() const {
        auto in_ground = [&](const std::vector<int>& s, const char* what) {
            std::set<int> seen;
            for (int x : s) {
                if (x < 1 || x > n) fail(ErrorKind::IndexOutOfRange, std::string(what));
                if (!seen.insert(x).second) fail(ErrorKind::DuplicateIndex, std::string(what));
            }
        };
        if (n < 0 || f < 0 || t < 1) fail(ErrorKind::DimensionMismatch, "bad matroid dimensions");
        for (const auto& b : basis_sets) {
            in_ground(b, "basis set");
            if (static_cast<int>(b.size()) != f)
                fail(ErrorKind::DimensionMismatch, "basis set size must equal rank");
        }
        for (const auto& c : circuit_sets) {
            in_ground(c, "circuit set");
            if (static_cast<int>(c.size()) > f + 1)
                fail(ErrorKind::DimensionMismatch, "circuit set larger than rank+1");
        }
        for (const auto& q : quasi_circuit_sets) {
            in_ground(q, "quasi-circuit set");
            global_pairs(q);  // throws OddPairSet unless a union of pairs
        }
        for (const auto& [s, mn] : rank_at_least) {
            in_ground(s, "rank_at_least set");
            if (mn < 0 || mn > f) fail(ErrorKind::DimensionMismatch, "rank_at_least bound out of range");
        }
    }
};

struct Violation {
    std::string kind;      // column_rank | basis | circuit | quasi_circuit | rank_at_least
    std::vector<int> set;
    std::string detail;
};

struct VerifyReport {
    bool valid = true;
    std::vector<Violation> violations;
};

/// Checks every declared constraint of `spec` against H and reports all
/// violations. H must be f·t x n·t with block width spec.t.
inline VerifyReport verify_representation(const MatroidSpec& spec, const BlockMatrix& h) {
    spec.validate();
    if (h.r() != spec.f * spec.t || h.m() != spec.n || h.t() != spec.t)
        fail(ErrorKind::DimensionMismatch, "representation must be (f*t) x (n*t) with block width t");
    VerifyReport rep;
    auto violate = [&](std::string kind, std::vector<int> set, std::string detail) {
        rep.valid = false;
        rep.violations.push_back({std::move(kind), std::move(set), std::move(detail)});
    };
    for (int i = 1; i <= spec.n; ++i) {
        int rk = h.select({i}).rank();
        if (rk != spec.t)
            violate("column_rank", {i}, "rank " + std::to_string(rk) + " != t");
    }
    for (const auto& b : spec.basis_sets) {
        int rk = h.select(b).rank();
        if (rk != spec.f * spec.t)
            violate("basis", b, "rank " + std::to_string(rk) + " != f*t");
    }
    for (const auto& c : spec.circuit_sets)
        if (!is_circuit(h, c)) violate("circuit", c, "circuit condition fails");
    for (const auto& q : spec.quasi_circuit_sets)
        if (!is_quasi_circuit(h, q)) violate("quasi_circuit", q, "quasi-circuit condition fails");
    for (const auto& [s, mn] : spec.rank_at_least) {
        int rk = h.select(s).rank();
        if (rk < mn * spec.t)
            violate("rank_at_least", s, "rank " + std::to_string(rk) + " < " + std::to_string(mn * spec.t));
    }
    return rep;
}

/// Combination coefficients of circuit member `j`: solves
/// H^{j} = sum_{i in N\{j}} H^{i} M_{j,i}. For t = 1 each coefficient of a
/// true circuit is a nonzero scalar.
inline std::optional<std::vector<Scalar>> circuit_coefficients(const BlockMatrix& h, const std::vector<int>& n,
                                                               int j) {
    if (h.t() != 1) fail(ErrorKind::UnsupportedWidth, "coefficient extraction is scalar-only");
    std::vector<int> rest;
    for (int x : n)
        if (x != j) rest.push_back(x);
    auto sol = solve(h.select(rest), h.select({j}));
    if (!sol) return std::nullopt;
    std::vector<Scalar> coef;
    for (int r = 0; r < sol->rows(); ++r) coef.push_back(sol->at(r, 0));
    return coef;
}

enum class SearchStatus { Found, ExhaustedNone, Budget };

inline const char* search_status_name(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "Found";
        case SearchStatus::ExhaustedNone: return "ExhaustedNone";
        case SearchStatus::Budget: return "Budget";
    }
    return "?";
}

struct SearchOutcome {
    SearchStatus status = SearchStatus::Budget;
    std::optional<BlockMatrix> witness;
    std::uint64_t nodes_explored = 0;
};

namespace detail {

/// Column workspace for the scalar search: small fixed-capacity elimination,
/// no heap traffic on the hot path.
struct ScalarRank {
    int p;
    explicit ScalarRank(int p) : p(p) {}

    int inv(int a) const {
        for (int c = 1; c < p; ++c)
            if ((a * c) % p == 1) return c;
        return 0;
    }

    // columns: vector of column vectors, all height f (f <= 13 in practice)
    int rank(const std::vector<const std::vector<Scalar>*>& cols, int f) const {
        int w[16][24];
        int nc = static_cast<int>(cols.size());
        for (int c = 0; c < nc; ++c)
            for (int r = 0; r < f; ++r) w[r][c] = (*cols[c])[r];
        int rk = 0;
        for (int c = 0; c < nc && rk < f; ++c) {
            int pr = -1;
            for (int i = rk; i < f; ++i)
                if (w[i][c]) { pr = i; break; }
            if (pr < 0) continue;
            if (pr != rk)
                for (int j = c; j < nc; ++j) std::swap(w[rk][j], w[pr][j]);
            int piv_inv = inv(w[rk][c]);
            for (int j = c; j < nc; ++j) w[rk][j] = (w[rk][j] * piv_inv) % p;
            for (int i = rk + 1; i < f; ++i) {
                int fac = w[i][c];
                if (!fac) continue;
                for (int j = c; j < nc; ++j) w[i][j] = (w[i][j] + (p - fac) * w[rk][j] % p) % p;
            }
            ++rk;
        }
        return rk;
    }
};

struct ScalarSearch {
    const MatroidSpec& spec;
    int p;
    ScalarRank rk;
    BudgetClock clock;
    std::vector<std::vector<Scalar>> col;   // 1-based ground element -> column (height f)
    std::vector<char> assigned;             // 1-based
    std::vector<std::vector<int>> check_at; // plan level -> constraint ids becoming complete
    // plan: one entry per non-basis column in assignment order
    struct PlanStep {
        int column;
        std::vector<int> members;  // circuit members driving the column (empty = free column)
    };
    std::vector<PlanStep> plan;
    std::optional<std::vector<std::vector<Scalar>>> found;
    bool budget_hit = false;

    ScalarSearch(const MatroidSpec& s, int prime, Budget b)
        : spec(s), p(prime), rk(prime), clock(b) {}

    int rank_of(const std::vector<int>& ground) {
        std::vector<const std::vector<Scalar>*> cs;
        cs.reserve(ground.size());
        for (int g : ground) cs.push_back(&col[g]);
        return rk.rank(cs, spec.f);
    }

    bool circuit_holds(const std::vector<int>& c) {
        const int target = static_cast<int>(c.size()) - 1;
        if (rank_of(c) != target) return false;
        for (int j : c) {
            std::vector<int> del;
            for (int x : c)
                if (x != j) del.push_back(x);
            if (rank_of(del) != target) return false;
        }
        return true;
    }

    bool quasi_holds(const std::vector<int>& q) {
        auto pairs = global_pairs(q);
        int rq = rank_of(q);
        if (rq != static_cast<int>(q.size()) - 2) return false;
        for (auto [a, b] : pairs) {
            if (rank_of({a, b}) != 2) return false;
            std::vector<int> del;
            for (int x : q)
                if (x != a && x != b) del.push_back(x);
            if (rank_of(del) != rq) return false;
        }
        return true;
    }

    // Constraint ids: 0..B-1 basis, B..B+C-1 circuits, then quasi, then rank_at_least.
    bool constraint_holds(int id) {
        size_t b = spec.basis_sets.size(), c = spec.circuit_sets.size(), q = spec.quasi_circuit_sets.size();
        if (id < static_cast<int>(b)) return rank_of(spec.basis_sets[id]) == spec.f;
        id -= static_cast<int>(b);
        if (id < static_cast<int>(c)) return circuit_holds(spec.circuit_sets[id]);
        id -= static_cast<int>(c);
        if (id < static_cast<int>(q)) return quasi_holds(spec.quasi_circuit_sets[id]);
        id -= static_cast<int>(q);
        return rank_of(spec.rank_at_least[id].first) >= spec.rank_at_least[id].second;
    }

    const std::vector<int>& constraint_set(int id) const {
        size_t b = spec.basis_sets.size(), c = spec.circuit_sets.size(), q = spec.quasi_circuit_sets.size();
        if (id < static_cast<int>(b)) return spec.basis_sets[id];
        id -= static_cast<int>(b);
        if (id < static_cast<int>(c)) return spec.circuit_sets[id];
        id -= static_cast<int>(c);
        if (id < static_cast<int>(q)) return spec.quasi_circuit_sets[id];
        id -= static_cast<int>(q);
        return spec.rank_at_least[id].first;
    }

    /// First basis pinned to the identity; remaining columns ordered by
    /// circuit propagation (a column whose circuit has all other members
    /// assigned), falling back to free projective enumeration. Each
    /// constraint is scheduled at the level where its support completes.
    void build_plan() {
        const auto& base = spec.basis_sets.front();
        col.assign(spec.n + 1, {});
        assigned.assign(spec.n + 1, 0);
        for (size_t k = 0; k < base.size(); ++k) {
            std::vector<Scalar> e(spec.f, 0);
            e[k] = 1;
            col[base[k]] = e;
            assigned[base[k]] = 1;
        }
        std::vector<char> planned = assigned;
        while (true) {
            int pick = -1;
            std::vector<int> members;
            for (int j = 1; j <= spec.n && pick < 0; ++j) {
                if (planned[j]) continue;
                for (const auto& c : spec.circuit_sets) {
                    if (std::find(c.begin(), c.end(), j) == c.end()) continue;
                    bool rest_ready = true;
                    for (int x : c)
                        if (x != j && !planned[x]) rest_ready = false;
                    if (rest_ready) {
                        pick = j;
                        for (int x : c)
                            if (x != j) members.push_back(x);
                        break;
                    }
                }
            }
            if (pick < 0) {
                for (int j = 1; j <= spec.n; ++j)
                    if (!planned[j]) { pick = j; break; }
                if (pick < 0) break;
                members.clear();
            }
            std::sort(members.begin(), members.end());
            plan.push_back({pick, members});
            planned[pick] = 1;
        }
        // schedule constraint checks at the level completing their support
        size_t n_constraints = spec.basis_sets.size() + spec.circuit_sets.size() +
                               spec.quasi_circuit_sets.size() + spec.rank_at_least.size();
        check_at.assign(plan.size() + 1, {});
        std::vector<int> level_of(spec.n + 1, 0);  // 0 = base level
        for (size_t lvl = 0; lvl < plan.size(); ++lvl) level_of[plan[lvl].column] = static_cast<int>(lvl) + 1;
        for (size_t id = 0; id < n_constraints; ++id) {
            int lvl = 0;
            for (int x : constraint_set(static_cast<int>(id))) lvl = std::max(lvl, level_of[x]);
            check_at[lvl].push_back(static_cast<int>(id));
        }
    }

    bool checks_pass(size_t level_1based, int just_column) {
        for (int id : check_at[level_1based]) {
            // the circuit driving `just_column` holds by construction
            if (level_1based > 0 && !plan[level_1based - 1].members.empty()) {
                size_t b = spec.basis_sets.size();
                if (id >= static_cast<int>(b) && id < static_cast<int>(b + spec.circuit_sets.size())) {
                    const auto& c = spec.circuit_sets[id - b];
                    std::vector<int> others = plan[level_1based - 1].members;
                    others.push_back(just_column);
                    std::sort(others.begin(), others.end());
                    std::vector<int> cs = c;
                    std::sort(cs.begin(), cs.end());
                    if (cs == others) continue;
                }
            }
            if (!constraint_holds(id)) return false;
        }
        return true;
    }

    bool leaf_valid() {
        for (int j = 1; j <= spec.n; ++j) {
            bool nonzero = false;
            for (Scalar v : col[j]) nonzero |= (v != 0);
            if (!nonzero) return false;
        }
        size_t n_constraints = spec.basis_sets.size() + spec.circuit_sets.size() +
                               spec.quasi_circuit_sets.size() + spec.rank_at_least.size();
        for (size_t id = 0; id < n_constraints; ++id)
            if (!constraint_holds(static_cast<int>(id))) return false;
        return true;
    }

    void dfs(size_t level) {
        if (found || budget_hit) return;
        if (level == plan.size()) {
            if (leaf_valid()) found = std::vector<std::vector<Scalar>>(col.begin() + 1, col.end());
            return;
        }
        const PlanStep& step = plan[level];
        if (!step.members.empty()) {
            // all-nonzero combination of the circuit members; the first
            // coefficient is pinned to 1 (per-column scaling freedom)
            std::vector<int> coef(step.members.size(), 1);
            while (true) {
                if (!clock.tick()) { budget_hit = true; return; }
                std::vector<Scalar> v(spec.f, 0);
                for (size_t k = 0; k < step.members.size(); ++k)
                    for (int r = 0; r < spec.f; ++r)
                        v[r] = static_cast<Scalar>((v[r] + coef[k] * col[step.members[k]][r]) % p);
                col[step.column] = v;
                assigned[step.column] = 1;
                if (checks_pass(level + 1, step.column)) dfs(level + 1);
                assigned[step.column] = 0;
                if (found || budget_hit) return;
                // next coefficient tuple (first stays 1)
                size_t k = step.members.size();
                while (k > 1) {
                    --k;
                    if (++coef[k] < p) break;
                    coef[k] = 1;
                    if (k == 1) return;  // exhausted
                }
                if (step.members.size() == 1) return;  // single member: only (1)
            }
        } else {
            // free column: projective representatives (first nonzero = 1)
            std::vector<Scalar> v(spec.f, 0);
            while (true) {
                // next vector in lex order
                int k = spec.f;
                while (k > 0) {
                    --k;
                    if (++v[k] < p) break;
                    v[k] = 0;
                    if (k == 0) return;  // wrapped: exhausted
                }
                bool is_rep = false;
                for (int r = 0; r < spec.f; ++r) {
                    if (v[r] == 0) continue;
                    is_rep = (v[r] == 1);
                    break;
                }
                if (!is_rep) continue;
                if (!clock.tick()) { budget_hit = true; return; }
                col[step.column] = v;
                assigned[step.column] = 1;
                if (checks_pass(level + 1, step.column)) dfs(level + 1);
                assigned[step.column] = 0;
                if (found || budget_hit) return;
            }
        }
    }
};

}  // namespace detail

/// Exhaustive scalar (t = 1) representation search over GF(p), normalized by
/// pinning the first declared basis to the identity and the scale of every
/// remaining column (first circuit coefficient, or first nonzero entry for
/// free columns, equal to 1). Exhausting the normalized space without a
/// valid leaf certifies non-representability.
inline SearchOutcome search_scalar_representation(const MatroidSpec& spec, int p, Budget budget = {}) {
    spec.validate();
    if (spec.t != 1) fail(ErrorKind::UnsupportedWidth, "search supports t = 1 only");
    if (spec.basis_sets.empty()) fail(ErrorKind::PreconditionFailed, "search needs a declared basis set");
    FieldSpec field(p);

    detail::ScalarSearch s(spec, p, budget);
    s.build_plan();
    s.dfs(0);

    SearchOutcome out;
    out.nodes_explored = s.clock.nodes();
    if (s.found) {
        GfMatrix m(field, spec.f, spec.n);
        for (int c = 0; c < spec.n; ++c)
            for (int r = 0; r < spec.f; ++r) m.set(r, c, (*s.found)[c][r]);
        BlockMatrix witness(m, spec.n, 1);
        // leaf safety: a Found witness always re-verifies
        if (!verify_representation(spec, witness).valid)
            fail(ErrorKind::PreconditionFailed, "internal: witness failed re-verification");
        out.status = SearchStatus::Found;
        out.witness = witness;
    } else if (s.budget_hit) {
        out.status = SearchStatus::Budget;
    } else {
        out.status = SearchStatus::ExhaustedNone;
    }
    return out;
}

struct ObstructionVerdict {
    int rank_9_16 = 0;
    bool obstructed = false;        // rank(H^{9..16}) <= 6
    std::string violated_constraint;
};

/// The concrete characteristic-3 contradiction for N3: any GF(3) matrix
/// satisfying the basis [8] and quasi-circuit constraints has
/// rank(H^{9..16}) <= 6, violating the declared f({9..16}) >= 7.
inline ObstructionVerdict check_char3_obstruction_n3(const MatroidSpec& n3, const GfMatrix& h) {
    if (h.field().p() != 3) fail(ErrorKind::PreconditionFailed, "obstruction check is a GF(3) statement");
    if (h.rows() != 8 || h.cols() != 18) fail(ErrorKind::DimensionMismatch, "H must be 8 x 18");
    BlockMatrix hb(h, 18, 1);
    MatroidSpec pre = n3;
    pre.rank_at_least.clear();  // precondition excludes the bound under test
    auto rep = verify_representation(pre, hb);
    if (!rep.valid)
        fail(ErrorKind::PreconditionFailed,
             "input does not satisfy the basis/quasi-circuit constraints (" +
                 std::to_string(rep.violations.size()) + " violations)");
    ObstructionVerdict v;
    std::vector<int> n9;
    for (int i = 9; i <= 16; ++i) n9.push_back(i);
    v.rank_9_16 = hb.select(n9).rank();
    v.obstructed = v.rank_9_16 <= 6;
    if (v.obstructed) v.violated_constraint = "rank_at_least({9..16}) >= 7";
    return v;
}

/// Seeded generator of GF(3) matrices satisfying N3's basis and all eight
/// quasi-circuit constraints. Columns 9..16 are built from invertible 2x2
/// blocks T_i S_j^{-1} and the pair (17,18) from the T_i directly, which
/// makes the four decompositions of H^{17,18} consistent simultaneously.
inline GfMatrix sample_n3_consistent_gf3(std::mt19937& rng) {
    FieldSpec f3(3);
    using M2 = std::array<std::array<int, 2>, 2>;
    auto det = [](const M2& m) { return ((m[0][0] * m[1][1] - m[0][1] * m[1][0]) % 3 + 3) % 3; };
    auto rand_gl2 = [&]() {
        while (true) {
            M2 m;
            for (auto& row : m)
                for (auto& v : row) v = static_cast<int>(rng() % 3);
            if (det(m) != 0) return m;
        }
    };
    auto minv = [&](const M2& m) {
        int di = det(m) == 1 ? 1 : 2;  // inverse of det in GF(3)
        M2 r{{{(m[1][1] * di) % 3, ((3 - m[0][1]) * di) % 3},
              {((3 - m[1][0]) * di) % 3, (m[0][0] * di) % 3}}};
        return r;
    };
    auto mmul = [](const M2& a, const M2& b) {
        M2 r{};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r[i][j] = (a[i][0] * b[0][j] + a[i][1] * b[1][j]) % 3;
        return r;
    };

    std::array<M2, 4> t, s;
    for (auto& m : t) m = rand_gl2();
    for (auto& m : s) m = rand_gl2();

    GfMatrix h(f3, 8, 18);
    for (int i = 0; i < 8; ++i) h.set(i, i, 1);
    auto put = [&](int pair_index, int block_row, const M2& m) {  // pair_index 5..9
        int c0 = 8 + 2 * (pair_index - 5);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) h.set(2 * block_row + r, c0 + c, static_cast<Scalar>(m[r][c]));
    };
    const int rows_of[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    for (int k = 0; k < 4; ++k) {
        M2 si = minv(s[k]);
        for (int br : rows_of[k]) put(5 + k, br, mmul(t[br], si));
    }
    for (int br = 0; br < 4; ++br) put(9, br, t[br]);
    return h;
}

}  // namespace icw
