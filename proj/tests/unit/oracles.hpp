#pragma once

// Brute-force reference computations used to cross-check the library.
// They only rely on integer arithmetic and small enumerations.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

using IntRows = std::vector<std::vector<long>>;

/// Rank over F_p by counting kernel vectors; cols must be small.
std::size_t rank_mod_p(const IntRows& a, long p);

/// Leibniz expansion; square matrices only.
long long det(const IntRows& a);

/// Invariant factors d_k / d_{k-1} from gcds of k x k minors (zero factors dropped
/// into free rank): returns (free rank of the cokernel, torsion factors > 1).
std::pair<std::size_t, std::vector<long long>> cokernel(const IntRows& a);

/// Linearly oriented A_n, 1 <- 2 <- ... <- n; intervals [a, b] are 1-based vertices.
struct Interval {
    int a, b;
};
std::vector<Interval> intervals(int n);
long hom(const Interval& x, const Interval& y);
long euler(int n, const Interval& x, const Interval& y);
long ext(int n, const Interval& x, const Interval& y);
/// Number of paths from vertex `from` to vertex `to` (1-based) in A_n.
long paths(int n, int from, int to);

/// Maximal sets of stalks (interval, degree) with no maps in nonzero shifts,
/// one representative per overall shift, m >= 2.
struct StalkSet {
    std::vector<std::pair<int, int>> members;  ///< (interval index, degree), sorted
    long end_dim = 0;
};
std::vector<StalkSet> orthogonal_sets(int n, int m);

}  // namespace oracle
