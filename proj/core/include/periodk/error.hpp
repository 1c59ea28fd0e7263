#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace periodk {

enum class ErrorKind : std::uint8_t {
    InvalidArgument,
    NoSolution,
    CyclicQuiver,
    InadmissibleRelation,
    InvalidRepresentation,
    NotAModuleMap,
    NotAComplex,
    ShapeMismatch,
    NotAChainMap,
    NotHereditary,
    PeriodOne,
    NotTypeA,
    SearchTooLarge,
    CertificateFailed,
    Parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; `kind()` is what callers switch on.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// d^{i+1} d^i != 0; carries the offending degree.
class NotAComplexError : public Error {
public:
    NotAComplexError(std::size_t degree, const std::string& message)
        : Error(ErrorKind::NotAComplex, message), degree_(degree) {}

    std::size_t degree() const noexcept { return degree_; }

private:
    std::size_t degree_;
};

}  // namespace periodk
