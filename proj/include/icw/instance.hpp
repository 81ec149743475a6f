#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "icw/budget.hpp"
#include "icw/errors.hpp"

namespace icw {

/// An index coding instance {B_i, i in [m]}: user i wants message i, has the
/// messages outside B_i ∪ {i} as side information. Indices are 1-based.
class Instance {
public:
    Instance(int m, std::vector<std::vector<int>> interfering) : m_(m), b_(std::move(interfering)) {
        if (m < 0 || static_cast<int>(b_.size()) != m)
            fail(ErrorKind::DimensionMismatch, "need exactly m interfering sets");
        mask_.assign(static_cast<size_t>(m) * (m + 1), 0);
        for (int i = 1; i <= m_; ++i) {
            std::set<int> seen;
            for (int j : b_[i - 1]) {
                if (j < 1 || j > m_) fail(ErrorKind::IndexOutOfRange, "B_" + std::to_string(i));
                if (j == i) fail(ErrorKind::IndexOutOfRange, "i in B_i for i = " + std::to_string(i));
                if (!seen.insert(j).second) fail(ErrorKind::DuplicateIndex, "B_" + std::to_string(i));
                mask_[static_cast<size_t>(i - 1) * (m_ + 1) + j] = 1;
            }
            std::sort(b_[i - 1].begin(), b_[i - 1].end());
        }
    }

    int m() const { return m_; }
    const std::vector<int>& interfering(int i) const { return b_[check(i) - 1]; }
    bool interferes(int i, int j) const { return mask_[static_cast<size_t>(check(i) - 1) * (m_ + 1) + check(j)] != 0; }
    bool knows(int i, int j) const { return i != j && !interferes(i, j); }

    std::vector<int> side_info(int i) const {
        std::vector<int> a;
        for (int j = 1; j <= m_; ++j)
            if (knows(i, j)) a.push_back(j);
        return a;
    }

private:
    int check(int i) const {
        if (i < 1 || i > m_) fail(ErrorKind::IndexOutOfRange, "user " + std::to_string(i));
        return i;
    }

    int m_;
    std::vector<std::vector<int>> b_;
    std::vector<char> mask_;
};

namespace detail {
inline std::vector<int> checked_set(const Instance& inst, const std::vector<int>& m_set) {
    std::set<int> s;
    for (int i : m_set) {
        if (i < 1 || i > inst.m()) fail(ErrorKind::IndexOutOfRange, "index " + std::to_string(i));
        if (!s.insert(i).second) fail(ErrorKind::DuplicateIndex, "index " + std::to_string(i));
    }
    return {s.begin(), s.end()};
}
}  // namespace detail

/// All subset predicates read the defining equalities as restrictions to M,
/// i.e. B_i ∩ M = ...; the instance may be much larger than M.

inline bool is_independent_set(const Instance& inst, const std::vector<int>& m_set) {
    auto ms = detail::checked_set(inst, m_set);
    for (int i : ms)
        for (int j : ms)
            if (i != j && !inst.interferes(i, j)) return false;
    return true;
}

/// Strict check of the given cyclic order: B_{i_j} ∩ M = M \ {i_j, i_{j+1}}.
inline bool is_minimal_cyclic_ordered(const Instance& inst, const std::vector<int>& order) {
    auto ms = detail::checked_set(inst, order);  // validates range/duplicates
    if (order.size() < 2) return false;
    const size_t k = order.size();
    for (size_t j = 0; j < k; ++j) {
        int cur = order[j];
        int succ = order[(j + 1) % k];
        for (int x : order) {
            bool should_interfere = (x != cur && x != succ);
            if (inst.interferes(cur, x) != should_interfere) return false;
        }
    }
    return true;
}

/// Set-level variant: true iff some cyclic order of M realizes the pattern.
/// Found by successor-chasing: each i must know exactly one element of M,
/// and the successor map must be a single cycle.
inline bool is_minimal_cyclic(const Instance& inst, const std::vector<int>& m_set) {
    auto ms = detail::checked_set(inst, m_set);
    if (ms.size() < 2) return false;
    std::vector<int> succ(ms.size(), -1);
    for (size_t a = 0; a < ms.size(); ++a) {
        int cnt = 0;
        for (size_t b = 0; b < ms.size(); ++b) {
            if (a == b) continue;
            if (inst.knows(ms[a], ms[b])) {
                ++cnt;
                succ[a] = static_cast<int>(b);
            }
        }
        if (cnt != 1) return false;
    }
    std::vector<char> visited(ms.size(), 0);
    int at = 0;
    for (size_t step = 0; step < ms.size(); ++step) {
        if (visited[at]) return false;
        visited[at] = 1;
        at = succ[at];
    }
    return at == 0;
}

/// Quasi analogue on explicit pairs: both members of a pair must know exactly
/// the successor pair (and nothing else in M), and the pair-successor map
/// must be a single cycle through all pairs.
inline bool is_quasi_minimal_cyclic(const Instance& inst, const std::vector<std::pair<int, int>>& pairs) {
    if (pairs.size() < 2) return false;
    std::vector<int> flat;
    for (auto [a, b] : pairs) {
        flat.push_back(a);
        flat.push_back(b);
    }
    auto ms = detail::checked_set(inst, flat);  // validates disjointness/range
    if (flat.size() % 2 != 0) fail(ErrorKind::OddPairSet, "odd element count");

    auto known_in_m = [&](int i) {
        std::set<int> known;
        for (int j : flat)
            if (j != i && inst.knows(i, j)) known.insert(j);
        return known;
    };

    std::vector<int> succ(pairs.size(), -1);
    for (size_t pi = 0; pi < pairs.size(); ++pi) {
        auto ka = known_in_m(pairs[pi].first);
        auto kb = known_in_m(pairs[pi].second);
        if (ka != kb || ka.size() != 2) return false;
        int target = -1;
        for (size_t qi = 0; qi < pairs.size(); ++qi) {
            if (qi == pi) continue;
            if (ka.count(pairs[qi].first) && ka.count(pairs[qi].second)) target = static_cast<int>(qi);
        }
        if (target < 0) return false;
        succ[pi] = target;
    }
    std::vector<char> visited(pairs.size(), 0);
    int at = 0;
    for (size_t step = 0; step < pairs.size(); ++step) {
        if (visited[at]) return false;
        visited[at] = 1;
        at = succ[at];
    }
    return at == 0;
}

/// Peel order per the knowledge structure: repeatedly remove the lowest
/// l with (M \ {l}) ⊆ B_l. Returns the order when M peels to empty.
inline std::optional<std::vector<int>> peel_order(const Instance& inst, const std::vector<int>& m_set) {
    auto rem = detail::checked_set(inst, m_set);
    std::vector<int> order;
    while (!rem.empty()) {
        int pick = -1;
        for (size_t a = 0; a < rem.size(); ++a) {
            bool all_interfere = true;
            for (size_t b = 0; b < rem.size(); ++b)
                if (a != b && !inst.interferes(rem[a], rem[b])) {
                    all_interfere = false;
                    break;
                }
            if (all_interfere) {
                pick = static_cast<int>(a);
                break;
            }
        }
        if (pick < 0) return std::nullopt;
        order.push_back(rem[pick]);
        rem.erase(rem.begin() + pick);
    }
    return order;
}

inline bool is_acyclic_set(const Instance& inst, const std::vector<int>& m_set) {
    return peel_order(inst, m_set).has_value();
}

enum class MaisStatus { Exact, Bounded, Budget };

inline const char* mais_status_name(MaisStatus s) {
    switch (s) {
        case MaisStatus::Exact: return "Exact";
        case MaisStatus::Bounded: return "Bounded";
        case MaisStatus::Budget: return "Budget";
    }
    return "?";
}

struct MaisResult {
    int lo = 0;
    int hi = 0;
    MaisStatus status = MaisStatus::Exact;
    std::vector<int> witness;  // acyclic set achieving lo
};

/// Verifies a user-supplied acyclic set instead of searching.
/// Throws PreconditionFailed when the witness is not acyclic.
inline MaisResult mais_check_witness(const Instance& inst, const std::vector<int>& witness) {
    auto ms = detail::checked_set(inst, witness);
    if (!is_acyclic_set(inst, ms))
        fail(ErrorKind::PreconditionFailed, "supplied witness is not an acyclic set");
    MaisResult r;
    r.lo = static_cast<int>(ms.size());
    r.hi = inst.m();
    r.status = (r.lo == r.hi) ? MaisStatus::Exact : MaisStatus::Bounded;
    r.witness = ms;
    return r;
}

namespace detail {

struct MaisSearch {
    const Instance& inst;
    BudgetClock clock;
    bool exhausted = true;
    int best = 0;
    std::vector<int> best_set;
    std::vector<int> chosen;

    MaisSearch(const Instance& i, Budget b) : inst(i), clock(b) {}

    bool acyclic_with(int v) {
        std::vector<int> trial = chosen;
        trial.push_back(v);
        return is_acyclic_set(inst, trial);
    }

    void update_best() {
        int sz = static_cast<int>(chosen.size());
        if (sz > best || (sz == best && chosen < best_set)) {
            best = sz;
            best_set = chosen;
        }
    }

    void run(int next) {
        if (!clock.tick()) {
            exhausted = false;
            return;
        }
        const int m = inst.m();
        if (static_cast<int>(chosen.size()) + (m - next + 1) <= best) return;  // bound
        if (next > m) {
            update_best();
            return;
        }
        if (acyclic_with(next)) {
            chosen.push_back(next);
            run(next + 1);
            chosen.pop_back();
        }
        run(next + 1);
    }
};

}  // namespace detail

/// Branch-and-bound over vertex inclusion with peeling feasibility.
/// Exact is guaranteed within budget; Budget status reports the best
/// interval found so far.
inline MaisResult mais(const Instance& inst, Budget budget = {}) {
    detail::MaisSearch s(inst, budget);
    // greedy seed: lowest-index-first insertion
    for (int v = 1; v <= inst.m(); ++v)
        if (s.acyclic_with(v)) s.chosen.push_back(v);
    s.best = static_cast<int>(s.chosen.size());
    s.best_set = s.chosen;
    s.chosen.clear();
    s.run(1);
    MaisResult r;
    r.lo = s.best;
    r.witness = s.best_set;
    if (s.exhausted) {
        r.hi = s.best;
        r.status = MaisStatus::Exact;
    } else {
        r.hi = inst.m();
        r.status = MaisStatus::Budget;
    }
    return r;
}

}  // namespace icw
