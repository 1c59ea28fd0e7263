#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "periodk/complex.hpp"
#include "periodk/smith.hpp"

namespace periodk {

enum class Parity : std::uint8_t { Even, Odd };

/// Image in K0(A) (even m) or K0(A) mod 2 (odd m), as a dimension vector.
struct K0Class {
    Parity parity = Parity::Even;
    std::vector<long> vector;

    bool operator==(const K0Class&) const = default;
    bool is_zero() const;
};

inline Parity parity_of(std::size_t m) { return m % 2 == 0 ? Parity::Even : Parity::Odd; }

/// Alternating sum of cohomology dimension vectors (even m), plain sum mod 2 (odd m).
/// Throws ShapeMismatch if m differs from V's period.
K0Class class_of(const PeriodicComplex& v, std::size_t m);

/// class(V) - class(W) + class(cone f) == 0 in the group for the parity of m.
bool check_triangle_additivity(const ChainMap& f, std::size_t m);

/// Canonical text of a complex; equal strings iff equal data.
std::string canonical_key(const PeriodicComplex& v);

/// Free abelian group on objects (merged by canonical key) modulo relations.
class Presentation {
public:
    using Term = std::pair<std::size_t, long>;

    explicit Presentation(std::size_t period) : period_(period) {}

    /// Id of the object, registering it (and its class) on first sight.
    std::size_t object(const PeriodicComplex& v);
    bool contains(const PeriodicComplex& v) const;

    /// Adds the relation, with duplicate ids merged. Returns its index.
    std::size_t relation(const std::vector<Term>& terms, std::string origin);
    /// e_sub - e_middle + e_quotient
    std::size_t sequence(const PeriodicComplex& sub, const PeriodicComplex& middle, const PeriodicComplex& quotient,
                         std::string origin);

    std::size_t object_count() const noexcept { return classes_.size(); }
    std::size_t relation_count() const noexcept { return relations_.size(); }
    const std::map<std::size_t, long>& relation_terms(std::size_t r) const { return relations_.at(r); }
    const std::string& relation_origin(std::size_t r) const { return origins_.at(r); }
    const K0Class& object_class(std::size_t id) const { return classes_.at(id); }

    /// Sum of the coefficients times classes, reduced for the parity.
    K0Class relation_class(std::size_t r) const;

    GroupInvariants invariants() const;
    /// Invariants after also quotienting by the given objects.
    GroupInvariants invariants_modulo(const std::vector<std::size_t>& extra) const;

private:
    std::size_t period_;
    std::unordered_map<std::string, std::size_t> ids_;
    std::vector<K0Class> classes_;
    std::vector<std::map<std::size_t, long>> relations_;
    std::vector<std::string> origins_;
};

struct SamplerOptions {
    std::size_t count = 200;
    std::size_t max_dim = 4;
    std::uint64_t seed = 0;
};

struct Certificate {
    bool ok = false;
    std::string failure;  ///< offending relation or missing generator when not ok
};

struct K0Report {
    GroupInvariants group;
    std::size_t n_objects = 0;
    std::size_t n_relations = 0;
    std::size_t n_cones = 0;
    std::size_t n_gorsky = 0;
    std::size_t n_two_torsion_checked = 0;  ///< odd m: objects with a verified 2[X] = 0 combination
    Certificate certificate;
};

/// Samples objects and relations, computes the presented group and checks
/// that the class map is an isomorphism onto Z^n (even m) or F_2^n (odd m).
/// Returns the report regardless of the certificate outcome.
K0Report empirical_k0_report(const AlgebraPtr& algebra, std::size_t m, const SamplerOptions& options);

/// As above; throws CertificateFailed when the certificate does not hold.
K0Report empirical_k0(const AlgebraPtr& algebra, std::size_t m, const SamplerOptions& options);

}  // namespace periodk
