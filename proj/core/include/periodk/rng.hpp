#pragma once

#include <cstdint>
#include <random>

#include "periodk/field.hpp"

namespace periodk {

/// Seeded generator with platform-independent draws.
///
/// std::mt19937_64 is fully specified by the standard, the distributions are
/// not, so bounded draws are done by hand.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [lo, hi].
    long uniform(long lo, long hi);

    bool chance(unsigned numerator, unsigned denominator);

    /// Small entries for Q (in [-2, 2]); uniform in F_p.
    Scalar scalar(const Field& field);

    /// A fresh generator whose stream is a deterministic function of this one.
    Rng split() { return Rng(next()); }

private:
    std::mt19937_64 engine_;
};

}  // namespace periodk
