#include "periodk/rng.hpp"

namespace periodk {

long Rng::uniform(long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
}

bool Rng::chance(unsigned numerator, unsigned denominator) {
    return engine_() % denominator < numerator;
}

Scalar Rng::scalar(const Field& field) {
    if (field.is_rational()) return Scalar(uniform(-2, 2));
    return field.from_int(uniform(0, static_cast<long>(field.characteristic()) - 1));
}

}  // namespace periodk
