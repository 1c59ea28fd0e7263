#pragma once

#include <optional>

#include "periodk/error.hpp"
#include "periodk/quiver.hpp"

namespace testing {

/// Kind of the periodk::Error thrown by f, or nullopt if nothing was thrown.
template <class F>
std::optional<periodk::ErrorKind> kind_of(F&& f) {
    try {
        f();
    } catch (const periodk::Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

inline periodk::Field f5() { return periodk::Field::prime(5); }
inline periodk::Field q() { return periodk::Field::rationals(); }

inline periodk::AlgebraPtr one_vertex(periodk::Field f) {
    return std::make_shared<const periodk::QuiverAlgebra>(periodk::Quiver(1, {}), f);
}

}  // namespace testing
