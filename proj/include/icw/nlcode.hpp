#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "icw/errors.hpp"

namespace icw {

/// Scalar nonlinear GF(3) code for the 58-user instance: eight coded
/// symbols, four of them carrying a cubic correction term g(.).
using Trit = std::uint8_t;
using G3Message = std::array<Trit, 58>;        // x_1..x_58, 1-based via index-1
using NonlinearCodeword = std::array<Trit, 8>; // z_1..z_8

namespace g3 {
inline Trit reduce(int v) { return static_cast<Trit>(((v % 3) + 3) % 3); }
inline Trit add(int a, int b) { return reduce(a + b); }
inline Trit sub(int a, int b) { return reduce(a - b); }
}  // namespace g3

/// The degree-3 symmetric polynomial over GF(3)^4:
/// 2*sum_a a^2(sum of others) + 2*sum of pairwise products + sum of triples.
inline Trit g_eval(Trit a, Trit b, Trit c, Trit d) {
    int s = 0;
    s += 2 * a * a * (b + c + d) + 2 * b * b * (a + c + d) + 2 * c * c * (a + b + d) + 2 * d * d * (a + b + c);
    s += 2 * (a * b + a * c + a * d + b * c + b * d + c * d);
    s += a * b * c + a * b * d + a * c * d + b * c * d;
    return g3::reduce(s);
}

/// Sum-of-quadruple identity: given xw, the sum a1 of the four g-values of
/// Lemma-8 shape and the four triple sums s1..s4 (s1 = xi+xj+xl,
/// s2 = xi+xj+xv, s3 = xi+xl+xv, s4 = xj+xl+xv),
///   xi+xj+xl+xv = a1 + a2 + a3 + a4(1 + 2 xw),
/// with a2 = s1 s2 s3, a3 = 2[s1^2(2s1-s4) + s2^2(2s2-s4) + s3^2(2s3-s4)],
/// a4 = 2(s1^2 + s2^2 + s3^2 + s4^2). The a3 factors fold the raw-variable
/// expressions through xi - xv = s1 - s4 etc.
inline Trit quadruple_total(Trit a1, Trit s1, Trit s2, Trit s3, Trit s4, Trit xw) {
    int a2 = s1 * s2 * s3;
    int a3 = 2 * s1 * s1 * g3::sub(2 * s1, s4) + 2 * s2 * s2 * g3::sub(2 * s2, s4) +
             2 * s3 * s3 * g3::sub(2 * s3, s4);
    int a4 = 2 * (s1 * s1 + s2 * s2 + s3 * s3 + s4 * s4);
    return g3::reduce(a1 + a2 + a3 + a4 * (1 + 2 * xw));
}

/// Recovers (xi, xj, xl, xv) from xw, the four g-values
/// g(xi,xj,xl,xw), g(xi,xj,xv,xw), g(xi,xl,xv,xw), g(xj,xl,xv,xw) and the
/// four triple sums. Inputs that re-encode to different values raise
/// InconsistentInputs.
inline std::array<Trit, 4> recover_quadruple(Trit xw, const std::array<Trit, 4>& g_vals,
                                             const std::array<Trit, 4>& sums) {
    Trit a1 = g3::reduce(g_vals[0] + g_vals[1] + g_vals[2] + g_vals[3]);
    Trit total = quadruple_total(a1, sums[0], sums[1], sums[2], sums[3], xw);
    std::array<Trit, 4> x{g3::sub(total, sums[3]), g3::sub(total, sums[2]), g3::sub(total, sums[1]),
                          g3::sub(total, sums[0])};
    std::array<Trit, 4> g_check{g_eval(x[0], x[1], x[2], xw), g_eval(x[0], x[1], x[3], xw),
                                g_eval(x[0], x[2], x[3], xw), g_eval(x[1], x[2], x[3], xw)};
    std::array<Trit, 4> s_check{g3::reduce(x[0] + x[1] + x[2]), g3::reduce(x[0] + x[1] + x[3]),
                                g3::reduce(x[0] + x[2] + x[3]), g3::reduce(x[1] + x[2] + x[3])};
    if (g_check != g_vals || s_check != sums)
        fail(ErrorKind::InconsistentInputs, "inputs correspond to no quadruple");
    return x;
}

/// g(xi,xj,xv,xw) + 2 g(xi,xl,xv,xw) depends on (xv,xw) only through
/// s = xv + xw: the lone mixed term 2(xv^2 xw + xw^2 xv + xv xw) cancels in
/// the combination. Evaluated at the representative split (s, 0).
inline Trit combo_from_partial(Trit xi, Trit xj, Trit xl, Trit s) {
    return g3::reduce(g_eval(xi, xj, s, 0) + 2 * g_eval(xi, xl, s, 0));
}

namespace i3 {

/// Linear participants of each coded symbol z_k.
inline const std::array<std::array<int, 10>, 8>& z_terms() {
    static const std::array<std::array<int, 10>, 8> t{{
        {1, 9, 11, 13, 17, 19, 27, 35, 43, 53},
        {2, 10, 12, 14, 18, 20, 28, 36, 44, 54},
        {3, 9, 11, 15, 17, 21, 29, 37, 45, 51},
        {4, 10, 12, 16, 18, 22, 30, 38, 46, 52},
        {5, 9, 13, 15, 17, 23, 31, 39, 47, 57},
        {6, 10, 14, 16, 18, 24, 32, 40, 48, 58},
        {7, 11, 13, 15, 17, 25, 33, 41, 49, 55},
        {8, 12, 14, 16, 18, 26, 34, 42, 50, 56},
    }};
    return t;
}

/// g-arguments of the even symbols z_2, z_4, z_6, z_8 (zero-length otherwise).
inline const std::array<std::array<int, 4>, 8>& g_args() {
    static const std::array<std::array<int, 4>, 8> a{{
        {0, 0, 0, 0},
        {9, 11, 13, 17},
        {0, 0, 0, 0},
        {9, 11, 15, 17},
        {0, 0, 0, 0},
        {9, 13, 15, 17},
        {0, 0, 0, 0},
        {11, 13, 15, 17},
    }};
    return a;
}

}  // namespace i3

inline NonlinearCodeword encode_i3(const G3Message& x) {
    for (Trit v : x)
        if (v > 2) fail(ErrorKind::NotInField, "message entries must be trits");
    auto at = [&](int j) { return x[j - 1]; };
    NonlinearCodeword z{};
    for (int k = 1; k <= 8; ++k) {
        int acc = 0;
        for (int j : i3::z_terms()[k - 1]) acc += at(j);
        if (k % 2 == 0) {
            const auto& a = i3::g_args()[k - 1];
            acc += g_eval(at(a[0]), at(a[1]), at(a[2]), at(a[3]));
        }
        z[k - 1] = g3::reduce(acc);
    }
    return z;
}

/// Side information view: values at an explicit set of available 1-based
/// coordinates. Reads outside the set throw MissingSideInformation; every
/// read is recorded, which lets tests pin down exactly what a decoder
/// touched.
class SideInfo {
public:
    SideInfo(int m, const std::vector<int>& available, const std::vector<Trit>& full_x) : vals_(m + 1, 0), avail_(m + 1, 0), accessed_(m + 1, 0) {
        if (static_cast<int>(full_x.size()) != m) fail(ErrorKind::DimensionMismatch, "bad x length");
        for (int j : available) {
            if (j < 1 || j > m) fail(ErrorKind::IndexOutOfRange, "side index " + std::to_string(j));
            avail_[j] = 1;
            vals_[j] = full_x[j - 1];
        }
    }

    bool has(int j) const { return j >= 1 && j < static_cast<int>(avail_.size()) && avail_[j] != 0; }

    Trit get(int j) const {
        if (!has(j)) fail(ErrorKind::MissingSideInformation, "coordinate " + std::to_string(j));
        accessed_[j] = 1;
        return vals_[j];
    }

    std::vector<int> accessed() const {
        std::vector<int> out;
        for (size_t j = 1; j < accessed_.size(); ++j)
            if (accessed_[j]) out.push_back(static_cast<int>(j));
        return out;
    }

private:
    std::vector<Trit> vals_;
    std::vector<char> avail_;
    mutable std::vector<char> accessed_;
};

/// Per-user decoder for the 58-user code. `side` must expose exactly the
/// user's side information A_i; the decoder reads nothing else.
inline Trit decode_i3(int user, const NonlinearCodeword& z, const SideInfo& side) {
    using g3::reduce;
    using g3::sub;
    if (user < 1 || user > 58) fail(ErrorKind::IndexOutOfRange, "user " + std::to_string(user));
    auto s = [&](int j) { return side.get(j); };
    // z_k minus every side-known linear participant
    auto lin = [&](int k) {
        int acc = z[k - 1];
        for (int j : i3::z_terms()[k - 1])
            if (side.has(j)) acc += 3 - s(j);
        return reduce(acc);
    };
    auto g = [](Trit a, Trit b, Trit c, Trit d) { return g_eval(a, b, c, d); };

    // users 1..8: z_i is fully known apart from x_i (and a computable g term)
    if (user <= 8) {
        Trit v = lin(user);
        if (user % 2 == 0) {
            const auto& a = i3::g_args()[user - 1];
            v = sub(v, g(s(a[0]), s(a[1]), s(a[2]), s(a[3])));
        }
        return v;
    }

    switch (user) {
        // the nonlinear core: quadruple recovery for (x9, x11, x13, x15)
        // with x17 known; the even residuals sum to the four g-values since
        // each of x10, x12, x14, x16 appears three times across them
        case 9:
        case 11:
        case 13:
        case 15: {
            Trit s1 = lin(1), s2 = lin(3), s3 = lin(5), s4 = lin(7);
            Trit a1 = reduce(lin(2) + lin(4) + lin(6) + lin(8));
            Trit total = quadruple_total(a1, s1, s2, s3, s4, s(17));
            switch (user) {
                case 9: return sub(total, s4);
                case 11: return sub(total, s3);
                case 13: return sub(total, s2);
                default: return sub(total, s1);
            }
        }
        case 10: {
            Trit x9 = lin(1);
            Trit pair = sub(lin(8), g(s(11), s(13), s(15), s(17)));  // x12 + x14
            return sub(sub(lin(2), pair), g(x9, s(11), s(13), s(17)));
        }
        case 12: {
            Trit x11 = lin(3);
            Trit pair = sub(lin(6), g(s(9), s(13), s(15), s(17)));  // x14 + x16
            return sub(sub(lin(8), pair), g(x11, s(13), s(15), s(17)));
        }
        case 14: {
            Trit x13 = lin(5);
            Trit pair = sub(lin(4), g(s(9), s(11), s(15), s(17)));  // x10 + x16
            return sub(sub(lin(6), pair), g(s(9), x13, s(15), s(17)));
        }
        case 16: {
            Trit x15 = lin(7);
            Trit pair = sub(lin(2), g(s(9), s(11), s(13), s(17)));  // x10 + x12
            return sub(sub(lin(4), pair), g(s(9), s(11), x15, s(17)));
        }
        case 17: return lin(1);
        case 18: {
            Trit x17 = lin(1);
            return sub(lin(2), g(s(9), s(11), s(13), x17));
        }
        case 19: return sub(lin(1), lin(5));                        // x9 from z5
        case 20: {
            Trit x9 = lin(5);
            Trit x10 = sub(lin(6), g(x9, s(13), s(15), s(17)));
            return sub(sub(lin(2), x10), g(x9, s(11), s(13), s(17)));
        }
        case 21: return sub(lin(3), lin(1));                        // x9 from z1
        case 22: {
            Trit x9 = lin(1);
            Trit x10 = sub(lin(2), g(x9, s(11), s(13), s(17)));
            return sub(sub(lin(4), x10), g(x9, s(11), s(15), s(17)));
        }
        case 23: return sub(lin(5), lin(3));                        // x9 from z3
        case 24: {
            Trit x9 = lin(3);
            Trit x10 = sub(lin(4), g(x9, s(11), s(15), s(17)));
            return sub(sub(lin(6), x10), g(x9, s(13), s(15), s(17)));
        }
        case 25: return sub(lin(7), lin(3));                        // x15+x17 from z3
        case 26: {
            Trit pair = lin(3);                                     // x15 + x17
            Trit rhs = reduce(lin(6) + 2 * lin(8));                 // g6 + 2 g8 + 2 x26
            Trit c = combo_from_partial(s(13), s(9), s(11), pair);  // g6 + 2 g8
            return reduce(2 * sub(rhs, c));
        }
        case 27: return sub(lin(1), lin(7));                        // x11 from z7
        case 28: {
            Trit x11 = lin(7);
            Trit x12 = sub(lin(8), g(x11, s(13), s(15), s(17)));
            return sub(sub(lin(2), x12), g(s(9), x11, s(13), s(17)));
        }
        case 29: return sub(lin(3), lin(1));                        // x11 from z1
        case 30: {
            Trit x11 = lin(1);
            Trit x12 = sub(lin(2), g(s(9), x11, s(13), s(17)));
            return sub(sub(lin(4), x12), g(s(9), x11, s(15), s(17)));
        }
        case 31: return sub(lin(5), lin(1));                        // x9+x17 from z1
        case 32: {
            Trit pair = lin(1);                                     // x9 + x17
            Trit rhs = reduce(lin(4) + 2 * lin(6));                 // g4 + 2 g6 + 2 x32
            Trit c = combo_from_partial(s(15), s(11), s(13), pair);
            return reduce(2 * sub(rhs, c));
        }
        case 33: return sub(lin(7), lin(3));                        // x11 from z3
        case 34: {
            Trit x11 = lin(3);
            Trit x12 = sub(lin(4), g(s(9), x11, s(15), s(17)));
            return sub(sub(lin(8), x12), g(x11, s(13), s(15), s(17)));
        }
        case 35: return sub(lin(1), lin(7));                        // x13 from z7
        case 36: {
            Trit x13 = lin(7);
            Trit x14 = sub(lin(8), g(s(11), x13, s(15), s(17)));
            return sub(sub(lin(2), x14), g(s(9), s(11), x13, s(17)));
        }
        case 37: return sub(lin(3), lin(7));                        // x11+x17 from z7
        case 38: {
            Trit pair = lin(7);                                     // x11 + x17
            Trit rhs = reduce(lin(2) + 2 * lin(4));                 // g2 + 2 g4 + 2 x38
            Trit c = combo_from_partial(s(9), s(13), s(15), pair);
            return reduce(2 * sub(rhs, c));
        }
        case 39: return sub(lin(5), lin(1));                        // x13 from z1
        case 40: {
            Trit x13 = lin(1);
            Trit x14 = sub(lin(2), g(s(9), s(11), x13, s(17)));
            return sub(sub(lin(6), x14), g(s(9), x13, s(15), s(17)));
        }
        case 41: return sub(lin(7), lin(5));                        // x13 from z5
        case 42: {
            Trit x13 = lin(5);
            Trit x14 = sub(lin(6), g(s(9), x13, s(15), s(17)));
            return sub(sub(lin(8), x14), g(s(11), x13, s(15), s(17)));
        }
        case 43: return sub(lin(1), lin(5));                        // x13+x17 from z5
        case 44: {
            Trit pair = lin(5);                                     // x13 + x17
            Trit rhs = reduce(lin(6) + 2 * lin(2));                 // g6 + 2 g2 + 2 x44
            Trit c = combo_from_partial(s(9), s(15), s(11), pair);
            return reduce(2 * sub(rhs, c));
        }
        case 45: return sub(lin(3), lin(7));                        // x15 from z7
        case 46: {
            Trit x15 = lin(7);
            Trit x16 = sub(lin(8), g(s(11), s(13), x15, s(17)));
            return sub(sub(lin(4), x16), g(s(9), s(11), x15, s(17)));
        }
        case 47: return sub(lin(5), lin(3));                        // x15 from z3
        case 48: {
            Trit x15 = lin(3);
            Trit x16 = sub(lin(4), g(s(9), s(11), x15, s(17)));
            return sub(sub(lin(6), x16), g(s(9), s(13), x15, s(17)));
        }
        case 49: return sub(lin(7), lin(5));                        // x15 from z5
        case 50: {
            Trit x15 = lin(5);
            Trit x16 = sub(lin(6), g(s(9), s(13), x15, s(17)));
            return sub(sub(lin(8), x16), g(s(11), s(13), x15, s(17)));
        }
        case 51: return sub(lin(3), lin(1));                        // x9+x17 from z1
        case 52: {
            Trit pair = lin(1);                                     // x9 + x17
            Trit rhs = reduce(lin(2) + 2 * lin(4));                 // g2 + 2 g4 + 2 x52
            Trit c = combo_from_partial(s(11), s(13), s(15), pair);
            return reduce(2 * sub(rhs, c));
        }
        case 53: return sub(lin(1), lin(7));                        // x11+x17 from z7
        case 54: {
            Trit pair = lin(7);                                     // x11 + x17
            Trit rhs = reduce(lin(8) + 2 * lin(2));                 // g8 + 2 g2 + 2 x54
            Trit c = combo_from_partial(s(13), s(15), s(9), pair);
            return reduce(2 * sub(rhs, c));
        }
        case 55: return sub(lin(7), lin(5));                        // x13+x17 from z5
        case 56: {
            Trit pair = lin(5);                                     // x13 + x17
            Trit rhs = reduce(lin(6) + 2 * lin(8));                 // g6 + 2 g8 + 2 x56
            Trit c = combo_from_partial(s(15), s(9), s(11), pair);
            return reduce(2 * sub(rhs, c));
        }
        case 57: return sub(lin(5), lin(3));                        // x15+x17 from z3
        case 58: {
            Trit pair = lin(3);                                     // x15 + x17
            Trit rhs = reduce(lin(4) + 2 * lin(6));                 // g4 + 2 g6 + 2 x58
            Trit c = combo_from_partial(s(9), s(11), s(13), pair);
            return reduce(2 * sub(rhs, c));
        }
    }
    fail(ErrorKind::IndexOutOfRange, "unreachable");
}

}  // namespace icw
