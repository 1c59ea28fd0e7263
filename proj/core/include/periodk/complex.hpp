#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "periodk/representation.hpp"

namespace periodk {

/// Reduce i into [0, m).
std::size_t wrap(long i, std::size_t m);

/// Z_m-graded complex (V^i, d^i : V^i -> V^{i+1 mod m}) with d^{i+1} d^i = 0.
class PeriodicComplex {
public:
    /// Period m = components.size(). Throws ShapeMismatch or NotAComplexError.
    PeriodicComplex(std::vector<Representation> components, std::vector<ModuleMap> differentials);

    /// M in degree `degree`, zero elsewhere.
    static PeriodicComplex stalk(const Representation& m, long degree, std::size_t period);
    static PeriodicComplex zero(const AlgebraPtr& algebra, std::size_t period);

    std::size_t period() const noexcept { return components_.size(); }
    const AlgebraPtr& algebra() const noexcept { return components_.front().algebra(); }
    const Field& field() const noexcept { return components_.front().field(); }

    const Representation& component(long i) const { return components_[wrap(i, period())]; }
    const ModuleMap& differential(long i) const { return differentials_[wrap(i, period())]; }
    const std::vector<Representation>& components() const noexcept { return components_; }
    const std::vector<ModuleMap>& differentials() const noexcept { return differentials_; }

    /// Number of degrees with a nonzero component (n_V).
    std::size_t support_size() const;
    bool is_zero() const { return support_size() == 0; }
    /// Total dimension summed over degrees and vertices.
    std::size_t total_dim() const;

    bool operator==(const PeriodicComplex& other) const;

private:
    std::vector<Representation> components_;
    std::vector<ModuleMap> differentials_;
};

/// make_complex(m, ...) with the period checked against the data.
PeriodicComplex make_complex(std::size_t m, std::vector<Representation> components,
                             std::vector<ModuleMap> differentials);

/// f^{i+1} d_V^i = d_W^i f^i for all i.
class ChainMap {
public:
    /// Throws NotAChainMap.
    ChainMap(PeriodicComplex source, PeriodicComplex target, std::vector<ModuleMap> components);

    static ChainMap identity(const PeriodicComplex& v);
    static ChainMap zero(const PeriodicComplex& v, const PeriodicComplex& w);

    const PeriodicComplex& source() const noexcept { return source_; }
    const PeriodicComplex& target() const noexcept { return target_; }
    const std::vector<ModuleMap>& components() const noexcept { return components_; }
    const ModuleMap& operator[](long i) const { return components_[wrap(i, components_.size())]; }

private:
    PeriodicComplex source_;
    PeriodicComplex target_;
    std::vector<ModuleMap> components_;
};

bool is_chain_map(const std::vector<ModuleMap>& f, const PeriodicComplex& v, const PeriodicComplex& w);

ChainMap compose(const ChainMap& g, const ChainMap& f);
ChainMap operator+(const ChainMap& a, const ChainMap& b);
ChainMap operator-(const ChainMap& a, const ChainMap& b);

/// s^i : V^i -> W^{i-1}.
struct Homotopy {
    std::vector<ModuleMap> maps;
};

/// f^i - g^i = d_W^{i-1} s^i + s^{i+1} d_V^i for all i.
bool verify_homotopy(const Homotopy& s, const ChainMap& f, const ChainMap& g);

/// Degreewise d_W^{i-1} s^i + s^{i+1} d_V^i, the null-homotopic map of s.
std::vector<ModuleMap> homotopy_boundary(const Homotopy& s, const PeriodicComplex& v, const PeriodicComplex& w);

/// Bounded Z-graded complex supported on [lo, lo + size - 1].
class BoundedComplex {
public:
    /// differentials[k] maps components[k] -> components[k+1]; size - 1 of them.
    BoundedComplex(long lo, std::vector<Representation> components, std::vector<ModuleMap> differentials);

    long lo() const noexcept { return lo_; }
    long hi() const noexcept { return lo_ + static_cast<long>(components_.size()) - 1; }
    const Representation& component(long j) const { return components_.at(static_cast<std::size_t>(j - lo_)); }
    /// d^j : V^j -> V^{j+1}, for lo <= j < hi.
    const ModuleMap& differential(long j) const { return differentials_.at(static_cast<std::size_t>(j - lo_)); }
    const std::vector<Representation>& components() const noexcept { return components_; }

    /// dims of H^j as a vector over vertices.
    std::vector<long> cohomology_dims(long j) const;

private:
    long lo_;
    std::vector<Representation> components_;
    std::vector<ModuleMap> differentials_;
};

// -- operations -------------------------------------------------------------

/// V[k]: components V^{i+k}, differentials (-1)^k d^{i+k}.
PeriodicComplex shift(const PeriodicComplex& v, long k);
/// f[k] : V[k] -> W[k], (f[k])^i = f^{i+k}.
ChainMap shift(const ChainMap& f, long k);

PeriodicComplex direct_sum(const PeriodicComplex& v, const PeriodicComplex& w);

/// Cycles, a chosen complement of the boundaries inside them, and the
/// resulting H^i as a representation.
struct CohomologyData {
    Representation object;
    std::vector<Matrix> cycles;          ///< per vertex, basis of Z (columns)
    std::vector<Matrix> representatives; ///< per vertex, cycles lifting the H basis
    std::vector<Matrix> projection;      ///< per vertex, Z-coordinates -> H-coordinates
};

CohomologyData cohomology_data(const PeriodicComplex& v, long i);
Representation cohomology(const PeriodicComplex& v, long i);
/// dim H^i at each vertex, rank-only.
std::vector<long> cohomology_dims(const PeriodicComplex& v, long i);

/// H^i(f) : H^i(V) -> H^i(W) in the bases chosen by cohomology_data.
ModuleMap induced_map(const ChainMap& f, long i);
bool is_quasi_iso(const ChainMap& f);

struct Cone {
    PeriodicComplex complex;  ///< C^i = V^{i+1} + W^i
    ChainMap inclusion;       ///< W -> C
    ChainMap projection;      ///< C -> V[1]
};

/// d_C = [[-d_V^{i+1}, 0], [f^{i+1}, d_W^i]].
Cone cone(const ChainMap& f);

/// Some s with f - g = ds + sd (checked before returning), or nullopt.
std::optional<Homotopy> homotopic(const ChainMap& f, const ChainMap& g);

/// Basis of the chain maps V -> W.
std::vector<std::vector<ModuleMap>> chain_map_space(const PeriodicComplex& v, const PeriodicComplex& w);
ChainMap random_chain_map(const PeriodicComplex& v, const PeriodicComplex& w, Rng& rng);
/// Random s with random module maps s^i : V^i -> W^{i-1}.
Homotopy random_homotopy(const PeriodicComplex& v, const PeriodicComplex& w, Rng& rng);

/// dim Hom_{K_m}(V, W): chain maps modulo null-homotopic ones.
std::size_t homotopy_hom_dim(const PeriodicComplex& v, const PeriodicComplex& w);

/// Covering functor: component i is the sum of V^j over j = i mod m.
PeriodicComplex cover(const BoundedComplex& v, std::size_t m);
/// Window [lo, hi] of the Z-graded unrolling; d^hi is dropped.
BoundedComplex unroll(const PeriodicComplex& v, long lo, long hi);

/// Components random representations; each d^i a random element of the
/// solution space of the d^2 = 0 constraints given the earlier ones.
PeriodicComplex random_complex(const AlgebraPtr& algebra, std::size_t m, std::size_t max_dim, Rng& rng);
PeriodicComplex random_complex(const AlgebraPtr& algebra, std::size_t m, std::size_t max_dim, std::uint64_t seed);

/// Minimal projective resolution P^{-k} -> ... -> P^0 of M with augmentation P^0 -> M.
struct ProjectiveResolution {
    BoundedComplex complex;
    ModuleMap augmentation;
};

ProjectiveResolution projective_resolution(const Representation& m);
/// cover(P, m) -> stalk(M, 0) induced by the augmentation.
ChainMap augmentation_map(const ProjectiveResolution& res, const Representation& m, std::size_t period);

}  // namespace periodk
