#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "icw/matrix.hpp"

namespace icw {

/// Encoding matrix H in GF(p)^{r x mt} carved into m column slabs of width t.
/// Block (and user/ground) indices are 1-based to match the JSON formats and
/// the reports; storage is 0-based.
class BlockMatrix {
public:
    BlockMatrix(GfMatrix inner, int m, int t) : inner_(std::move(inner)), m_(m), t_(t) {
        if (m < 0 || t <= 0 || inner_.cols() != m * t)
            fail(ErrorKind::DimensionMismatch,
                 "inner.cols = " + std::to_string(inner_.cols()) + " but m*t = " + std::to_string(m * t));
    }

    const GfMatrix& inner() const { return inner_; }
    const FieldSpec& field() const { return inner_.field(); }
    int m() const { return m_; }
    int t() const { return t_; }
    int r() const { return inner_.rows(); }

    /// H^L: slabs of L concatenated in ascending index order. Empty L gives r x 0.
    GfMatrix select(const std::vector<int>& blocks1) const {
        std::set<int> sorted(blocks1.begin(), blocks1.end());
        std::vector<int> cols0;
        cols0.reserve(sorted.size() * t_);
        for (int b : sorted) {
            if (b < 1 || b > m_) fail(ErrorKind::IndexOutOfRange, "block " + std::to_string(b));
            for (int j = 0; j < t_; ++j) cols0.push_back((b - 1) * t_ + j);
        }
        return inner_.select_cols(cols0);
    }

private:
    GfMatrix inner_;
    int m_, t_;
};

inline GfMatrix block_select(const BlockMatrix& h, const std::vector<int>& blocks1) {
    return h.select(blocks1);
}

inline bool is_independent(const BlockMatrix& h, const std::vector<int>& n) {
    return h.select(n).rank() == static_cast<int>(std::set<int>(n.begin(), n.end()).size()) * h.t();
}

/// N is a circuit of H when rank(H^N) = (|N|-1)t and every single-element
/// deletion still has rank (|N|-1)t.
inline bool is_circuit(const BlockMatrix& h, const std::vector<int>& n) {
    std::set<int> s(n.begin(), n.end());
    if (s.empty()) return false;
    const int target = (static_cast<int>(s.size()) - 1) * h.t();
    std::vector<int> all(s.begin(), s.end());
    if (h.select(all).rank() != target) return false;
    for (int j : all) {
        std::vector<int> del;
        for (int x : all)
            if (x != j) del.push_back(x);
        if (h.select(del).rank() != target) return false;
    }
    return true;
}

/// Splits N into the global pairs {2j-1, 2j}; errors unless N is exactly a
/// union of such pairs.
inline std::vector<std::pair<int, int>> global_pairs(const std::vector<int>& n) {
    std::set<int> s(n.begin(), n.end());
    if (s.size() != n.size()) fail(ErrorKind::DuplicateIndex, "pair set has duplicates");
    std::vector<std::pair<int, int>> pairs;
    while (!s.empty()) {
        int a = *s.begin();
        int lo = (a % 2 == 1) ? a : a - 1;
        if (!s.count(lo) || !s.count(lo + 1))
            fail(ErrorKind::OddPairSet, "set is not a union of pairs {2j-1,2j}");
        pairs.emplace_back(lo, lo + 1);
        s.erase(lo);
        s.erase(lo + 1);
    }
    return pairs;
}

/// Quasi-circuit: every pair has rank 2t, and deleting any one pair leaves
/// rank (|N|-2)t = rank(H^N).
inline bool is_quasi_circuit(const BlockMatrix& h, const std::vector<int>& n) {
    auto pairs = global_pairs(n);
    if (pairs.empty()) return false;
    const int t = h.t();
    std::vector<int> all(n.begin(), n.end());
    const int rank_n = h.select(all).rank();
    if (rank_n != (static_cast<int>(all.size()) - 2) * t) return false;
    for (auto [a, b] : pairs) {
        if (h.select({a, b}).rank() != 2 * t) return false;
        std::vector<int> del;
        for (int x : all)
            if (x != a && x != b) del.push_back(x);
        if (h.select(del).rank() != rank_n) return false;
    }
    return true;
}

}  // namespace icw
