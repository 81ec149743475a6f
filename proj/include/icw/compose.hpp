#pragma once

#include <vector>

#include "icw/instance.hpp"
#include "icw/lincode.hpp"
#include "icw/nlcode.hpp"

namespace icw {

/// Concatenation where each side has the whole other part in its
/// interfering set: linear rates add.
inline Instance no_way(const Instance& a, const Instance& b) {
    const int ma = a.m(), mb = b.m();
    std::vector<std::vector<int>> bsets;
    for (int i = 1; i <= ma; ++i) {
        std::vector<int> s = a.interfering(i);
        for (int j = ma + 1; j <= ma + mb; ++j) s.push_back(j);
        bsets.push_back(std::move(s));
    }
    for (int i = 1; i <= mb; ++i) {
        std::vector<int> s;
        for (int j = 1; j <= ma; ++j) s.push_back(j);
        for (int j : b.interfering(i)) s.push_back(j + ma);
        bsets.push_back(std::move(s));
    }
    return Instance(ma + mb, std::move(bsets));
}

/// Concatenation where each side has the whole other part as side
/// information: linear rates max.
inline Instance two_way(const Instance& a, const Instance& b) {
    const int ma = a.m();
    std::vector<std::vector<int>> bsets;
    for (int i = 1; i <= ma; ++i) bsets.push_back(a.interfering(i));
    for (int i = 1; i <= b.m(); ++i) {
        std::vector<int> s;
        for (int j : b.interfering(i)) s.push_back(j + ma);
        bsets.push_back(std::move(s));
    }
    return Instance(ma + b.m(), std::move(bsets));
}

/// 87-user code for (29-user linear part) ↮ (58-user nonlinear part):
/// y_1..y_4 = H x[1..29] over GF(3) next to z_1..z_8 = encode_i3(x[30..87]).
/// Every user decodes inside its own part; the other part is pure
/// interference under the no-way junction and its symbols are ignored.
class CombinedCodec87 {
public:
    CombinedCodec87(LinearCode part1_code, Instance part1, const Instance& part3)
        : composed_(no_way(part1, part3)), dec1_(std::move(part1_code), std::move(part1)) {
        if (dec1_.code().field().p() != 3 || dec1_.code().m() != 29 || dec1_.code().r() != 4 ||
            dec1_.code().t() != 1)
            fail(ErrorKind::PreconditionFailed, "part 1 must be the 4 x 29 scalar GF(3) code");
        if (part3.m() != 58) fail(ErrorKind::DimensionMismatch, "part 3 must have 58 users");
    }

    const Instance& composed() const { return composed_; }

    std::vector<Trit> encode(const std::vector<Trit>& x) const {
        if (x.size() != 87) fail(ErrorKind::DimensionMismatch, "need 87 message trits");
        std::vector<Scalar> head(x.begin(), x.begin() + 29);
        std::vector<Scalar> y = icw::encode(dec1_.code(), head);
        G3Message tail{};
        std::copy(x.begin() + 29, x.end(), tail.begin());
        NonlinearCodeword z = encode_i3(tail);
        std::vector<Trit> out(y.begin(), y.end());
        out.insert(out.end(), z.begin(), z.end());
        return out;
    }

    Trit decode_user(int user, const std::vector<Trit>& symbols, const std::vector<Trit>& x_full) const {
        if (symbols.size() != 12) fail(ErrorKind::DimensionMismatch, "need 12 coded symbols");
        if (x_full.size() != 87) fail(ErrorKind::DimensionMismatch, "need the 87-entry message view");
        if (user >= 1 && user <= 29) {
            std::vector<Scalar> y(symbols.begin(), symbols.begin() + 4);
            std::vector<Scalar> head(x_full.begin(), x_full.begin() + 29);
            return dec1_.decode_user(user, y, head)[0];
        }
        if (user <= 87) {
            NonlinearCodeword z{};
            std::copy(symbols.begin() + 4, symbols.end(), z.begin());
            std::vector<Trit> tail(x_full.begin() + 29, x_full.end());
            std::vector<int> avail;
            for (int j : composed_.side_info(user))
                avail.push_back(j - 29);  // no-way: side info stays within the part
            SideInfo side(58, avail, tail);
            return decode_i3(user - 29, z, side);
        }
        fail(ErrorKind::IndexOutOfRange, "user " + std::to_string(user));
    }

private:
    Instance composed_;
    LinearDecoder dec1_;
};

/// 91-user code for ((29-user part ↮ 4-user acyclic part) ↔ 58-user part):
/// w_k = y_k + z_k over GF(3), with y_5..y_8 the uncoded acyclic-part
/// messages. Each side knows the other side's messages entirely (two-way),
/// recomputes its contribution and subtracts.
class CombinedCodec91 {
public:
    CombinedCodec91(LinearCode part1_code, Instance part1, Instance part_a, Instance part3)
        : composed_(two_way(no_way(part1, part_a), part3)), dec1_(std::move(part1_code), std::move(part1)) {
        if (dec1_.code().field().p() != 3 || dec1_.code().m() != 29 || dec1_.code().r() != 4 ||
            dec1_.code().t() != 1)
            fail(ErrorKind::PreconditionFailed, "part 1 must be the 4 x 29 scalar GF(3) code");
        if (part_a.m() != 4 || part3.m() != 58)
            fail(ErrorKind::DimensionMismatch, "parts must have sizes 29 + 4 + 58");
    }

    const Instance& composed() const { return composed_; }

    std::vector<Trit> encode(const std::vector<Trit>& x) const {
        if (x.size() != 91) fail(ErrorKind::DimensionMismatch, "need 91 message trits");
        std::vector<Trit> y = y_part(x);
        NonlinearCodeword z = z_part(x);
        std::vector<Trit> w(8);
        for (int k = 0; k < 8; ++k) w[k] = g3::add(y[k], z[k]);
        return w;
    }

    Trit decode_user(int user, const std::vector<Trit>& symbols, const std::vector<Trit>& x_full) const {
        if (symbols.size() != 8) fail(ErrorKind::DimensionMismatch, "need 8 coded symbols");
        if (x_full.size() != 91) fail(ErrorKind::DimensionMismatch, "need the 91-entry message view");
        if (user >= 1 && user <= 33) {
            // knows all of x[34..91]: strip z
            NonlinearCodeword z = z_part(x_full);
            if (user <= 29) {
                std::vector<Scalar> y(4);
                for (int k = 0; k < 4; ++k) y[k] = g3::sub(symbols[k], z[k]);
                std::vector<Scalar> head(x_full.begin(), x_full.begin() + 29);
                return dec1_.decode_user(user, y, head)[0];
            }
            return g3::sub(symbols[4 + (user - 30)], z[4 + (user - 30)]);
        }
        if (user <= 91) {
            // knows all of x[1..33]: strip y
            std::vector<Trit> y = y_part(x_full);
            NonlinearCodeword z{};
            for (int k = 0; k < 8; ++k) z[k] = g3::sub(symbols[k], y[k]);
            std::vector<Trit> tail(x_full.begin() + 33, x_full.end());
            std::vector<int> avail;
            for (int j : composed_.side_info(user))
                if (j > 33) avail.push_back(j - 33);
            SideInfo side(58, avail, tail);
            return decode_i3(user - 33, z, side);
        }
        fail(ErrorKind::IndexOutOfRange, "user " + std::to_string(user));
    }

private:
    std::vector<Trit> y_part(const std::vector<Trit>& x) const {
        std::vector<Scalar> head(x.begin(), x.begin() + 29);
        std::vector<Scalar> y4 = icw::encode(dec1_.code(), head);
        std::vector<Trit> y(y4.begin(), y4.end());
        for (int k = 0; k < 4; ++k) y.push_back(x[29 + k]);  // uncoded acyclic part
        return y;
    }

    static NonlinearCodeword z_part(const std::vector<Trit>& x) {
        G3Message tail{};
        std::copy(x.begin() + 33, x.end(), tail.begin());
        return encode_i3(tail);
    }

    Instance composed_;
    LinearDecoder dec1_;
};

}  // namespace icw
