#include "periodk/field.hpp"

#include <stdexcept>

#include "periodk/error.hpp"

namespace periodk {

namespace {

unsigned long residue(const Scalar& a) { return a.get_num().get_ui(); }

}  // namespace

bool is_prime(std::uint32_t n) noexcept {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::uint32_t p) {
    if (p < 2 || p >= (1u << 16) || !is_prime(p))
        throw Error(ErrorKind::InvalidArgument,
                    "prime field characteristic must be a prime in [2, 65536), got " + std::to_string(p));
    return Field(p);
}

std::string Field::name() const { return is_rational() ? "Q" : "F" + std::to_string(p_); }

Scalar Field::from_int(long value) const {
    if (is_rational()) return Scalar(value);
    long r = value % static_cast<long>(p_);
    if (r < 0) r += p_;
    return Scalar(static_cast<unsigned long>(r));
}

Scalar Field::normalize(const Scalar& value) const {
    if (is_rational()) {
        Scalar v = value;
        v.canonicalize();
        return v;
    }
    mpz_class num = value.get_num() % p_;
    if (num < 0) num += p_;
    mpz_class den = value.get_den() % p_;
    if (den == 0) throw Error(ErrorKind::InvalidArgument, "denominator divisible by the characteristic");
    mpz_class den_inv;
    mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), mpz_class(p_).get_mpz_t());
    mpz_class r = (num * den_inv) % p_;
    return Scalar(r);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    if (is_rational()) return a + b;
    unsigned long r = residue(a) + residue(b);
    if (r >= p_) r -= p_;
    return Scalar(r);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
    if (is_rational()) return a - b;
    unsigned long r = residue(a) + p_ - residue(b);
    if (r >= p_) r -= p_;
    return Scalar(r);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    if (is_rational()) return a * b;
    return Scalar((residue(a) * residue(b)) % p_);
}

Scalar Field::neg(const Scalar& a) const {
    if (is_rational()) return -a;
    unsigned long r = residue(a);
    return Scalar(r == 0 ? 0ul : p_ - r);
}

Scalar Field::inv(const Scalar& a) const {
    if (sgn(a) == 0) throw Error(ErrorKind::InvalidArgument, "division by zero");
    if (is_rational()) return 1 / a;
    // Fermat: a^(p-2)
    unsigned long base = residue(a), result = 1, e = p_ - 2;
    while (e > 0) {
        if (e & 1u) result = result * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    return Scalar(result);
}

void Field::sub_mul_inplace(Scalar& a, const Scalar& c, const Scalar& b) const {
    if (is_rational()) {
        if (sgn(c) == 0 || sgn(b) == 0) return;
        a -= c * b;
        return;
    }
    unsigned long prod = residue(c) * residue(b) % p_;
    unsigned long r = residue(a) + p_ - prod;
    if (r >= p_) r -= p_;
    a = r;
}

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::NoSolution: return "NoSolution";
        case ErrorKind::CyclicQuiver: return "CyclicQuiver";
        case ErrorKind::InadmissibleRelation: return "InadmissibleRelation";
        case ErrorKind::InvalidRepresentation: return "InvalidRepresentation";
        case ErrorKind::NotAModuleMap: return "NotAModuleMap";
        case ErrorKind::NotAComplex: return "NotAComplex";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::NotAChainMap: return "NotAChainMap";
        case ErrorKind::NotHereditary: return "NotHereditary";
        case ErrorKind::PeriodOne: return "PeriodOne";
        case ErrorKind::NotTypeA: return "NotTypeA";
        case ErrorKind::SearchTooLarge: return "SearchTooLarge";
        case ErrorKind::CertificateFailed: return "CertificateFailed";
        case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

}  // namespace periodk
