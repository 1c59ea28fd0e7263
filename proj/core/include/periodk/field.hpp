#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace periodk {

/// Exact scalar. Over a prime field the value is an integer in [0, p).
using Scalar = mpq_class;

/// Ground field: the rationals or a prime field F_p with 2 <= p < 2^16.
///
/// Scalars carry no field tag; every arithmetic operation goes through the
/// field so that F_p values stay reduced.
class Field {
public:
    static Field rationals() noexcept { return Field(0); }
    static Field prime(std::uint32_t p);

    bool is_rational() const noexcept { return p_ == 0; }
    std::uint32_t characteristic() const noexcept { return p_; }
    std::string name() const;

    Scalar zero() const { return Scalar(0); }
    Scalar one() const { return Scalar(1); }
    Scalar from_int(long value) const;
    Scalar normalize(const Scalar& value) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

    /// a - c*b, the elimination kernel.
    void sub_mul_inplace(Scalar& a, const Scalar& c, const Scalar& b) const;

    bool operator==(const Field&) const = default;

private:
    explicit Field(std::uint32_t p) noexcept : p_(p) {}

    std::uint32_t p_;
};

bool is_prime(std::uint32_t n) noexcept;

}  // namespace periodk
