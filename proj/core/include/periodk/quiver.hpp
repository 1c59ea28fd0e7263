#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "periodk/field.hpp"

namespace periodk {

struct Arrow {
    std::size_t source = 0;  ///< 0-based vertex
    std::size_t target = 0;
    std::string label;
};

/// A path in written order: word = {a, b} is "ab", first b then a.
/// Length-0 paths are the idempotents e_v (empty word, source = target = v).
struct Path {
    std::size_t source = 0;
    std::size_t target = 0;
    std::vector<std::size_t> word;  ///< arrow indices, leftmost applied last

    std::size_t length() const noexcept { return word.size(); }
    bool operator==(const Path&) const = default;
};

/// Finite acyclic quiver with uniquely labelled arrows.
class Quiver {
public:
    /// Throws CyclicQuiver on a directed cycle, InvalidArgument on bad input.
    Quiver(std::size_t vertices, std::vector<Arrow> arrows);

    std::size_t vertex_count() const noexcept { return vertices_; }
    const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
    const Arrow& arrow(std::size_t index) const { return arrows_.at(index); }
    std::optional<std::size_t> arrow_index(const std::string& label) const;

    /// Vertices sorted so that every arrow goes forward.
    const std::vector<std::size_t>& topological_order() const noexcept { return topo_; }

    std::string path_name(const Path& p) const;

private:
    std::size_t vertices_;
    std::vector<Arrow> arrows_;
    std::vector<std::size_t> topo_;
};

/// Bound quiver algebra kQ/I with I generated by monomial paths of length >= 2.
class QuiverAlgebra {
public:
    /// Throws InadmissibleRelation for relations that are not composable
    /// paths of length >= 2.
    QuiverAlgebra(Quiver quiver, Field field, std::vector<Path> relations = {});

    const Quiver& quiver() const noexcept { return quiver_; }
    const Field& field() const noexcept { return field_; }
    const std::vector<Path>& relations() const noexcept { return relations_; }
    std::size_t vertex_count() const noexcept { return quiver_.vertex_count(); }
    bool is_hereditary() const noexcept { return relations_.empty(); }

    /// Nonzero paths, every length-0 idempotent included.
    const std::vector<Path>& path_basis() const noexcept { return basis_; }
    std::size_t dimension() const noexcept { return basis_.size(); }

    /// True iff the word contains some relation as a contiguous subword.
    bool is_zero_path(const std::vector<std::size_t>& word) const;

    /// Build a relation path from labels in written order ("ab" = {"a","b"}).
    Path path_from_labels(const std::vector<std::string>& labels) const;

private:
    Quiver quiver_;
    Field field_;
    std::vector<Path> relations_;
    std::vector<Path> basis_;
};

using AlgebraPtr = std::shared_ptr<const QuiverAlgebra>;

/// Enumerate nonzero paths; standalone so that tests can call it on a bare algebra.
std::vector<Path> path_basis(const QuiverAlgebra& algebra);

/// Linearly oriented A_n: 1 <- 2 <- ... <- n with arrows labelled a1, a2, ...
AlgebraPtr linear_a(std::size_t n, Field field, bool kill_length_two = false);

}  // namespace periodk
