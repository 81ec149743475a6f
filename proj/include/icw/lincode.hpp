#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "icw/block.hpp"
#include "icw/instance.hpp"

namespace icw {

/// A (t, r) linear index code: y = H x over GF(p).
struct LinearCode {
    BlockMatrix H;

    const FieldSpec& field() const { return H.field(); }
    int m() const { return H.m(); }
    int t() const { return H.t(); }
    int r() const { return H.r(); }
};

inline std::vector<Scalar> encode(const LinearCode& code, const std::vector<Scalar>& x) {
    return mat_vec(code.H.inner(), x);
}

struct UserVerdict {
    int user = 0;
    int rank_iB = 0;  // rank(H^{{i} ∪ B_i})
    int rank_B = 0;   // rank(H^{B_i})
    bool pass = false;
};

struct DecodabilityReport {
    bool pass = false;
    int r = 0;
    int t = 1;
    std::vector<UserVerdict> users;

    std::string rate() const { return std::to_string(r) + "/" + std::to_string(t); }
    std::vector<int> failing_users() const {
        std::vector<int> out;
        for (const auto& u : users)
            if (!u.pass) out.push_back(u.user);
        return out;
    }
};

/// Per-user rank condition: rank(H^{{i} ∪ B_i}) = rank(H^{B_i}) + t.
inline DecodabilityReport check_decodable(const LinearCode& code, const Instance& inst) {
    if (code.m() != inst.m())
        fail(ErrorKind::DimensionMismatch, "code has " + std::to_string(code.m()) + " blocks, instance has " +
                                               std::to_string(inst.m()) + " users");
    DecodabilityReport rep;
    rep.r = code.r();
    rep.t = code.t();
    rep.pass = true;
    for (int i = 1; i <= inst.m(); ++i) {
        UserVerdict v;
        v.user = i;
        std::vector<int> bi = inst.interfering(i);
        v.rank_B = code.H.select(bi).rank();
        bi.push_back(i);
        v.rank_iB = code.H.select(bi).rank();
        v.pass = (v.rank_iB == v.rank_B + code.t());
        rep.pass = rep.pass && v.pass;
        rep.users.push_back(v);
    }
    return rep;
}

/// Decoder matrix D (t x r) with D H^{B_i} = 0 and D H^{i} = I_t, so that
/// x_i = D (y - H^{A_i} x_{A_i}). Solved as a linear system; exists exactly
/// when the rank condition holds.
inline GfMatrix derive_decoder(const LinearCode& code, const Instance& inst, int user) {
    const FieldSpec& f = code.field();
    const int t = code.t();
    std::vector<int> bi = inst.interfering(user);
    GfMatrix hb = code.H.select(bi);
    GfMatrix hi = code.H.select({user});
    GfMatrix lhs = hconcat(hb, hi).transpose();  // (|B|+1)t x r
    GfMatrix rhs(f, lhs.rows(), t);
    for (int k = 0; k < t; ++k) rhs.set(hb.cols() + k, k, 1);
    auto sol = solve(lhs, rhs);  // r x t
    if (!sol)
        fail(ErrorKind::NotDecodable, "user " + std::to_string(user) + " fails the rank condition");
    return sol->transpose();
}

/// All per-user decoders for one (code, instance) pair, derived once.
class LinearDecoder {
public:
    LinearDecoder(LinearCode code, Instance inst) : code_(std::move(code)), inst_(std::move(inst)) {
        for (int i = 1; i <= inst_.m(); ++i) d_.push_back(derive_decoder(code_, inst_, i));
    }

    const LinearCode& code() const { return code_; }
    const Instance& instance() const { return inst_; }

    /// x̂_i from y and the user's side information slice of x. `x` must carry
    /// valid values at the coordinates of A_i; other entries are not read.
    std::vector<Scalar> decode_user(int user, const std::vector<Scalar>& y, const std::vector<Scalar>& x) const {
        const FieldSpec& f = code_.field();
        const int t = code_.t();
        if (static_cast<int>(y.size()) != code_.r()) fail(ErrorKind::DimensionMismatch, "bad y length");
        if (static_cast<int>(x.size()) != code_.m() * t) fail(ErrorKind::DimensionMismatch, "bad x length");
        std::vector<Scalar> resid = y;
        for (int j : inst_.side_info(user)) {
            for (int r = 0; r < code_.r(); ++r) {
                int acc = 0;
                for (int k = 0; k < t; ++k) acc += code_.H.inner().at(r, (j - 1) * t + k) * x[(j - 1) * t + k];
                resid[r] = f.sub(resid[r], f.reduce(acc));
            }
        }
        return mat_vec(d_[user - 1], resid);
    }

private:
    LinearCode code_;
    Instance inst_;
    std::vector<GfMatrix> d_;
};

/// Convenience contract check: every user's estimate from (y, side info)
/// equals its slice of the true x.
inline std::vector<std::vector<Scalar>> decode_all(const LinearCode& code, const Instance& inst,
                                                   const std::vector<Scalar>& y, const std::vector<Scalar>& x) {
    LinearDecoder dec(code, inst);
    std::vector<std::vector<Scalar>> out;
    for (int i = 1; i <= inst.m(); ++i) out.push_back(dec.decode_user(i, y, x));
    return out;
}

}  // namespace icw
