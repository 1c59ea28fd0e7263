#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "periodk/complex.hpp"

namespace periodk {

/// dim Hom_{D_m}(M, N[i]) for modules over a hereditary algebra, m >= 2:
/// Hom(M, N) for i = 0, Ext^1(M, N) for i = 1, zero otherwise.
/// Throws NotHereditary, PeriodOne.
std::size_t hom_dm_dim(const Representation& m, const Representation& n, long degree, std::size_t period);

/// Checks consequences of V being the sum of its shifted cohomology stalks:
/// equal classes, equal cohomology and, for m >= 2, equal Hom profiles from
/// the simple and projective stalks. Throws NotHereditary.
struct DecomposeReport {
    bool ok = true;
    std::string failure;
    explicit operator bool() const noexcept { return ok; }
};

DecomposeReport decompose_check(const PeriodicComplex& v, std::size_t m);

/// Interval module supported on the path positions lo..hi (0-based).
struct IntervalModule {
    std::size_t lo = 0;
    std::size_t hi = 0;
    std::size_t first_vertex = 0;  ///< vertex at position lo
    std::size_t last_vertex = 0;   ///< vertex at position hi
    Representation module;
};

/// Vertices of a type-A quiver in path order (starting at the smaller-index end).
/// Throws NotTypeA.
std::vector<std::size_t> type_a_order(const QuiverAlgebra& algebra);

/// All n(n+1)/2 interval modules. Throws NotTypeA (also for non-hereditary algebras).
std::vector<IntervalModule> indecomposables_typeA(const AlgebraPtr& algebra);

/// A stalk of an interval module in some degree.
struct DmSummand {
    std::size_t interval = 0;  ///< index into indecomposables_typeA
    std::size_t degree = 0;
    auto operator<=>(const DmSummand&) const = default;
};

struct OrthogonalSet {
    std::vector<DmSummand> summands;  ///< sorted
    std::size_t end_dim = 0;
};

struct OrthogonalSearch {
    std::vector<IntervalModule> modules;
    std::size_t objects = 0;        ///< inventory size, modules x degrees
    std::vector<OrthogonalSet> sets;  ///< maximal, one per shift class, sorted
};

/// Hom(T, T[j]) = 0 for every j != 0 mod m, across all pairs of summands.
bool is_orthogonal(const std::vector<IntervalModule>& modules, const std::vector<DmSummand>& set, std::size_t m);

/// Exhaustive search for maximal orthogonal sets up to overall shift.
/// Throws SearchTooLarge when the inventory exceeds max_objects.
OrthogonalSearch orthogonal_sets(const AlgebraPtr& algebra, std::size_t m, std::size_t max_objects = 64);

}  // namespace periodk
