#pragma once

#include <cstdint>
#include <string>

#include "icw/errors.hpp"

namespace icw {

using Scalar = std::uint8_t;

/// Prime field GF(p) for p in {2,3,5,7,11,13}. All scalars are stored
/// reduced, i.e. in [0, p).
class FieldSpec {
public:
    explicit FieldSpec(int p) : p_(p) {
        if (p < 2 || p > 13 || !is_prime(p))
            fail(ErrorKind::NotInField, "p must be a prime in [2,13], got " + std::to_string(p));
    }

    int p() const { return p_; }
    int characteristic() const { return p_; }

    bool operator==(const FieldSpec& o) const { return p_ == o.p_; }
    bool operator!=(const FieldSpec& o) const { return p_ != o.p_; }

    bool in_field(int a) const { return a >= 0 && a < p_; }

    Scalar reduce(long long a) const {
        long long r = a % p_;
        if (r < 0) r += p_;
        return static_cast<Scalar>(r);
    }

    Scalar add(Scalar a, Scalar b) const { return static_cast<Scalar>((a + b) % p_); }
    Scalar sub(Scalar a, Scalar b) const { return static_cast<Scalar>((a + p_ - b) % p_); }
    Scalar mul(Scalar a, Scalar b) const { return static_cast<Scalar>((a * b) % p_); }
    Scalar neg(Scalar a) const { return static_cast<Scalar>((p_ - a) % p_); }

    Scalar inv(Scalar a) const {
        if (a == 0) fail(ErrorKind::InversionOfZero, "inverse of 0 in GF(" + std::to_string(p_) + ")");
        // p is tiny; scan for the inverse.
        for (int c = 1; c < p_; ++c)
            if ((a * c) % p_ == 1) return static_cast<Scalar>(c);
        fail(ErrorKind::NotInField, "no inverse found");  // unreachable for prime p
    }

    static bool is_prime(int n) {
        if (n < 2) return false;
        for (int d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

private:
    int p_;
};

enum class FieldOp { Add, Sub, Mul, Inv };

/// Checked scalar arithmetic: operands must already lie in [0, p).
/// For Inv the operand is `b` and `a` is ignored.
inline Scalar field_arith(const FieldSpec& f, FieldOp op, int a, int b) {
    if (op != FieldOp::Inv && !f.in_field(a))
        fail(ErrorKind::NotInField, "operand a = " + std::to_string(a));
    if (!f.in_field(b)) fail(ErrorKind::NotInField, "operand b = " + std::to_string(b));
    switch (op) {
        case FieldOp::Add: return f.add(static_cast<Scalar>(a), static_cast<Scalar>(b));
        case FieldOp::Sub: return f.sub(static_cast<Scalar>(a), static_cast<Scalar>(b));
        case FieldOp::Mul: return f.mul(static_cast<Scalar>(a), static_cast<Scalar>(b));
        case FieldOp::Inv: return f.inv(static_cast<Scalar>(b));
    }
    fail(ErrorKind::NotInField, "bad op");
}

}  // namespace icw
