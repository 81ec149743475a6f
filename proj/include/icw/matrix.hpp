#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "icw/field.hpp"

namespace icw {

/// Dense row-major matrix over GF(p). Everything here is small (at most
/// 8 x 116 in this codebase), so no attempt is made at sparsity.
class GfMatrix {
public:
    GfMatrix(FieldSpec field, int rows, int cols)
        : field_(field), rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, 0) {
        if (rows < 0 || cols < 0) fail(ErrorKind::DimensionMismatch, "negative dimension");
    }

    GfMatrix(FieldSpec field, int rows, int cols, std::vector<Scalar> entries)
        : field_(field), rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (e_.size() != static_cast<size_t>(rows) * cols)
            fail(ErrorKind::DimensionMismatch, "entry count does not match dimensions");
        for (Scalar v : e_)
            if (!field_.in_field(v)) fail(ErrorKind::NotInField, "entry " + std::to_string(v));
    }

    static GfMatrix identity(FieldSpec f, int n) {
        GfMatrix m(f, n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }

    const FieldSpec& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }
    void set(int r, int c, Scalar v) { e_[static_cast<size_t>(r) * cols_ + c] = v; }
    const std::vector<Scalar>& entries() const { return e_; }

    bool operator==(const GfMatrix& o) const {
        return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    /// Columns selected by 0-based indices, in the given order.
    GfMatrix select_cols(const std::vector<int>& cols0) const {
        GfMatrix out(field_, rows_, static_cast<int>(cols0.size()));
        for (size_t k = 0; k < cols0.size(); ++k) {
            int c = cols0[k];
            if (c < 0 || c >= cols_) fail(ErrorKind::IndexOutOfRange, "column " + std::to_string(c));
            for (int r = 0; r < rows_; ++r) out.set(r, static_cast<int>(k), at(r, c));
        }
        return out;
    }

    GfMatrix transpose() const {
        GfMatrix out(field_, cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) out.set(c, r, at(r, c));
        return out;
    }

    friend GfMatrix hconcat(const GfMatrix& a, const GfMatrix& b) {
        if (a.rows_ != b.rows_ || a.field_ != b.field_)
            fail(ErrorKind::DimensionMismatch, "hconcat row/field mismatch");
        GfMatrix out(a.field_, a.rows_, a.cols_ + b.cols_);
        for (int r = 0; r < a.rows_; ++r) {
            for (int c = 0; c < a.cols_; ++c) out.set(r, c, a.at(r, c));
            for (int c = 0; c < b.cols_; ++c) out.set(r, a.cols_ + c, b.at(r, c));
        }
        return out;
    }

    friend GfMatrix mat_mul(const GfMatrix& a, const GfMatrix& b) {
        if (a.cols_ != b.rows_ || a.field_ != b.field_)
            fail(ErrorKind::DimensionMismatch, "mat_mul inner dimension mismatch");
        GfMatrix out(a.field_, a.rows_, b.cols_);
        for (int r = 0; r < a.rows_; ++r)
            for (int c = 0; c < b.cols_; ++c) {
                int acc = 0;
                for (int k = 0; k < a.cols_; ++k) acc += a.at(r, k) * b.at(k, c);
                out.set(r, c, a.field_.reduce(acc));
            }
        return out;
    }

    friend std::vector<Scalar> mat_vec(const GfMatrix& a, const std::vector<Scalar>& x) {
        if (static_cast<int>(x.size()) != a.cols_)
            fail(ErrorKind::DimensionMismatch, "mat_vec length mismatch");
        std::vector<Scalar> y(a.rows_, 0);
        for (int r = 0; r < a.rows_; ++r) {
            int acc = 0;
            for (int c = 0; c < a.cols_; ++c) acc += a.at(r, c) * x[c];
            y[r] = a.field_.reduce(acc);
        }
        return y;
    }

    /// Modular Gaussian elimination with first-nonzero pivoting; deterministic.
    int rank() const {
        if (rows_ == 0 || cols_ == 0) return 0;
        std::vector<Scalar> w = e_;
        const int p = field_.p();
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int pr = -1;
            for (int i = r; i < rows_; ++i)
                if (w[static_cast<size_t>(i) * cols_ + c] != 0) { pr = i; break; }
            if (pr < 0) continue;
            if (pr != r)
                for (int j = c; j < cols_; ++j)
                    std::swap(w[static_cast<size_t>(r) * cols_ + j], w[static_cast<size_t>(pr) * cols_ + j]);
            Scalar piv_inv = field_.inv(w[static_cast<size_t>(r) * cols_ + c]);
            for (int j = c; j < cols_; ++j) {
                size_t idx = static_cast<size_t>(r) * cols_ + j;
                w[idx] = static_cast<Scalar>((w[idx] * piv_inv) % p);
            }
            for (int i = r + 1; i < rows_; ++i) {
                Scalar f = w[static_cast<size_t>(i) * cols_ + c];
                if (f == 0) continue;
                for (int j = c; j < cols_; ++j) {
                    size_t idx = static_cast<size_t>(i) * cols_ + j;
                    w[idx] = field_.sub(w[idx], field_.mul(f, w[static_cast<size_t>(r) * cols_ + j]));
                }
            }
            ++r;
        }
        return r;
    }

private:
    FieldSpec field_;
    int rows_, cols_;
    std::vector<Scalar> e_;
};

/// True iff every column of b lies in the column space of a,
/// i.e. rank([a|b]) == rank(a).
inline bool col_space_contains(const GfMatrix& a, const GfMatrix& b) {
    if (a.rows() != b.rows() || a.field() != b.field())
        fail(ErrorKind::DimensionMismatch, "col_space_contains row/field mismatch");
    if (b.cols() == 0) return true;
    return hconcat(a, b).rank() == a.rank();
}

inline bool col_space_equal(const GfMatrix& a, const GfMatrix& b) {
    return col_space_contains(a, b) && col_space_contains(b, a);
}

/// Solve a * x = rhs for all columns of rhs at once. Returns one solution
/// (free variables set to 0) or nullopt when the system is inconsistent.
inline std::optional<GfMatrix> solve(const GfMatrix& a, const GfMatrix& rhs) {
    if (a.rows() != rhs.rows() || a.field() != rhs.field())
        fail(ErrorKind::DimensionMismatch, "solve row/field mismatch");
    const FieldSpec& f = a.field();
    const int n = a.rows(), m = a.cols(), k = rhs.cols();
    GfMatrix aug = hconcat(a, rhs);
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < m && r < n; ++c) {
        int pr = -1;
        for (int i = r; i < n; ++i)
            if (aug.at(i, c) != 0) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < m + k; ++j) {
                Scalar t = aug.at(r, j);
                aug.set(r, j, aug.at(pr, j));
                aug.set(pr, j, t);
            }
        Scalar piv_inv = f.inv(aug.at(r, c));
        for (int j = 0; j < m + k; ++j) aug.set(r, j, f.mul(aug.at(r, j), piv_inv));
        for (int i = 0; i < n; ++i) {
            if (i == r) continue;
            Scalar fac = aug.at(i, c);
            if (fac == 0) continue;
            for (int j = 0; j < m + k; ++j)
                aug.set(i, j, f.sub(aug.at(i, j), f.mul(fac, aug.at(r, j))));
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (int i = r; i < n; ++i)
        for (int j = 0; j < k; ++j)
            if (aug.at(i, m + j) != 0) return std::nullopt;
    GfMatrix x(f, m, k);
    for (int pi = 0; pi < r; ++pi)
        for (int j = 0; j < k; ++j) x.set(pivot_col[pi], j, aug.at(pi, m + j));
    return x;
}

}  // namespace icw
