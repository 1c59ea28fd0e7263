#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace periodk {

struct PropertyResult {
    std::string name;
    std::size_t instances = 0;
    std::size_t failures = 0;
    std::string first_failure;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<PropertyResult> properties;

    bool ok() const;
};

/// linalg, complex, k0, gorsky, hereditary
const std::vector<std::string>& suite_names();

/// Runs every property of the suite on `instances` random inputs drawn from
/// `seed`. Throws InvalidArgument for an unknown suite.
SuiteReport run_suite(const std::string& suite, std::uint64_t seed, std::size_t instances = 200);

}  // namespace periodk
