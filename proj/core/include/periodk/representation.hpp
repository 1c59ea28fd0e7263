#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "periodk/matrix.hpp"
#include "periodk/quiver.hpp"
#include "periodk/rng.hpp"

namespace periodk {

/// Finite-dimensional module over a bound quiver algebra: a vector space per
/// vertex and, for each arrow a: i -> j, a dims[j] x dims[i] matrix.
class Representation {
public:
    /// Validates shapes and that every relation composes to zero.
    Representation(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> arrow_maps);

    static Representation zero(AlgebraPtr algebra);

    const AlgebraPtr& algebra() const noexcept { return algebra_; }
    const Field& field() const noexcept { return algebra_->field(); }
    std::size_t vertex_count() const noexcept { return dims_.size(); }
    const std::vector<std::size_t>& dims() const noexcept { return dims_; }
    std::size_t dim(std::size_t vertex) const { return dims_.at(vertex); }
    std::size_t total_dim() const noexcept;
    bool is_zero() const noexcept { return total_dim() == 0; }

    const std::vector<Matrix>& arrow_maps() const noexcept { return maps_; }
    const Matrix& arrow_map(std::size_t arrow) const { return maps_.at(arrow); }

    /// Composite along a path; identity for a length-0 path.
    Matrix path_map(const Path& p) const;

    bool operator==(const Representation& other) const;

private:
    AlgebraPtr algebra_;
    std::vector<std::size_t> dims_;
    std::vector<Matrix> maps_;
};

/// Vertexwise linear maps f_v : M_v -> N_v.
struct ModuleMap {
    std::vector<Matrix> components;

    const Matrix& operator[](std::size_t v) const { return components.at(v); }
    bool operator==(const ModuleMap&) const = default;
    bool is_zero() const;
};

// -- construction ---------------------------------------------------------

Representation simple(const AlgebraPtr& algebra, std::size_t vertex);
Representation projective(const AlgebraPtr& algebra, std::size_t vertex);
Representation direct_sum(const Representation& m, const Representation& n);
std::vector<long> dim_vector(const Representation& m);

/// Dims uniform in [0, max_dim]; arrow maps sampled inside the annihilator
/// of the relation constraints, then re-verified by the constructor.
Representation random_representation(const AlgebraPtr& algebra, std::size_t max_dim, Rng& rng);
Representation random_representation(const AlgebraPtr& algebra, std::size_t max_dim, std::uint64_t seed);

// -- maps -----------------------------------------------------------------

ModuleMap identity_map(const Representation& m);
ModuleMap zero_map(const Representation& from, const Representation& to);
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);  ///< g after f
ModuleMap operator+(const ModuleMap& a, const ModuleMap& b);
ModuleMap operator-(const ModuleMap& a, const ModuleMap& b);
ModuleMap operator-(const ModuleMap& a);
ModuleMap scaled(const ModuleMap& f, const Scalar& factor);
ModuleMap direct_sum(const ModuleMap& f, const ModuleMap& g);

/// Shapes match and f_j M_a = N_a f_i for every arrow a : i -> j.
bool is_module_map(const ModuleMap& f, const Representation& from, const Representation& to);
void require_module_map(const ModuleMap& f, const Representation& from, const Representation& to);

bool is_injective(const ModuleMap& f);
bool is_surjective(const ModuleMap& f, const Representation& to);
bool is_isomorphism(const ModuleMap& f, const Representation& from, const Representation& to);

/// Random linear combination of a basis of maps (coefficients from rng).
ModuleMap random_combination(const std::vector<ModuleMap>& basis, const Representation& from,
                             const Representation& to, Rng& rng);

// -- Hom and Ext ----------------------------------------------------------

/// Basis of Hom(M, N), the kernel of the stacked commuting-square system.
std::vector<ModuleMap> hom_space(const Representation& m, const Representation& n);
std::size_t hom_dim(const Representation& m, const Representation& n);

/// dim Ext^1(M, N) from 0 -> Hom(M,N) -> Hom(P0,N) -> Hom(Omega M,N) -> Ext^1(M,N) -> 0.
std::size_t ext1_dim(const Representation& m, const Representation& n);

/// <d, e> = sum_i d_i e_i - sum_{a: i->j} d_i e_j. Throws NotHereditary.
long euler_form(const QuiverAlgebra& algebra, const std::vector<long>& d, const std::vector<long>& e);

// -- sub- and quotient objects ----------------------------------------------

struct Subobject {
    Representation object;
    ModuleMap inclusion;
};

struct Quotient {
    Representation object;
    ModuleMap projection;
    std::vector<Matrix> section;  ///< per vertex, lifts of the quotient basis
};

/// Columns of basis[v] must span a subrepresentation of m (checked).
bool is_subrepresentation(const Representation& m, const std::vector<Matrix>& basis);
Subobject subrepresentation(const Representation& m, const std::vector<Matrix>& basis);
Quotient quotient(const Representation& m, const std::vector<Matrix>& sub_basis);

Subobject kernel(const ModuleMap& f, const Representation& from, const Representation& to);
std::vector<Matrix> image_basis(const ModuleMap& f);

struct ProjectiveCover {
    Representation cover;
    ModuleMap epi;
    std::vector<std::size_t> top;                 ///< multiplicity of each P_v
    std::vector<std::size_t> summand_vertices;    ///< P_v summands in order
};

ProjectiveCover projective_cover(const Representation& m);
Subobject syzygy(const Representation& m);

/// Filtration 0 = F_0 < F_1 < ... < F_L = M with simple factors, built by
/// repeatedly adding a vector at the last vertex (topologically) where the
/// current quotient is nonzero.
struct CompositionSeries {
    std::vector<std::size_t> factors;                 ///< vertex of F_k / F_{k-1}
    std::vector<std::vector<Matrix>> filtration;      ///< basis of F_k, k = 0..L
};

CompositionSeries composition_series(const Representation& m);
bool verify_composition_series(const Representation& m, const CompositionSeries& series);

}  // namespace periodk
