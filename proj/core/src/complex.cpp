#include "periodk/complex.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "periodk/error.hpp"

namespace periodk {

std::size_t wrap(long i, std::size_t m) {
    const long mm = static_cast<long>(m);
    return static_cast<std::size_t>(((i % mm) + mm) % mm);
}

namespace {

/// Row layout for linear systems whose equations are families of per-vertex
/// matrices, one family per degree.
class BlockLayout {
public:
    void add_degree(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
        std::vector<std::size_t> off;
        for (std::size_t v = 0; v < rows.size(); ++v) {
            off.push_back(total_);
            total_ += rows[v] * cols[v];
        }
        offset_.push_back(std::move(off));
        rows_.push_back(rows);
        cols_.push_back(cols);
    }

    std::size_t size() const { return total_; }

    /// system[:, column] += map flattened at `degree`.
    void accumulate(Matrix& system, std::size_t column, std::size_t degree, const std::vector<Matrix>& map) const {
        const Field& f = system.field();
        for (std::size_t v = 0; v < map.size(); ++v) {
            const Matrix& x = map[v];
            for (std::size_t r = 0; r < x.rows(); ++r)
                for (std::size_t c = 0; c < x.cols(); ++c) {
                    if (sgn(x(r, c)) == 0) continue;
                    const std::size_t row = offset_[degree][v] + r * cols_[degree][v] + c;
                    system.set(row, column, f.add(system(row, column), x(r, c)));
                }
        }
    }

private:
    std::size_t total_ = 0;
    std::vector<std::vector<std::size_t>> offset_, rows_, cols_;
};

std::vector<std::size_t> dims_of(const Representation& m) { return m.dims(); }

Representation sum_of(const AlgebraPtr& alg, const std::vector<const Representation*>& parts) {
    Representation out = Representation::zero(alg);
    for (const auto* p : parts) out = direct_sum(out, *p);
    return out;
}

ModuleMap combine(const std::vector<ModuleMap>& basis, const Matrix& coeffs, std::size_t column,
                  const Representation& from, const Representation& to) {
    ModuleMap out = zero_map(from, to);
    for (std::size_t b = 0; b < basis.size(); ++b)
        if (sgn(coeffs(b, column)) != 0) out = out + scaled(basis[b], coeffs(b, column));
    return out;
}

void check_compatible(const PeriodicComplex& v, const PeriodicComplex& w, const char* what) {
    if (v.period() != w.period())
        throw Error(ErrorKind::ShapeMismatch, std::string(what) + ": periods differ");
    if (v.algebra() != w.algebra())
        throw Error(ErrorKind::ShapeMismatch, std::string(what) + ": complexes over different algebras");
}

bool same_shape(const Matrix& x, std::size_t rows, std::size_t cols) { return x.rows() == rows && x.cols() == cols; }

bool map_has_shape(const ModuleMap& f, const Representation& from, const Representation& to) {
    if (f.components.size() != from.vertex_count()) return false;
    for (std::size_t v = 0; v < from.vertex_count(); ++v)
        if (!same_shape(f[v], to.dim(v), from.dim(v))) return false;
    return true;
}

}  // namespace

// -- PeriodicComplex --------------------------------------------------------

PeriodicComplex::PeriodicComplex(std::vector<Representation> components, std::vector<ModuleMap> differentials)
    : components_(std::move(components)), differentials_(std::move(differentials)) {
    const std::size_t m = components_.size();
    if (m == 0) throw Error(ErrorKind::InvalidArgument, "period must be at least 1");
    if (differentials_.size() != m)
        throw Error(ErrorKind::ShapeMismatch, "need one differential per component");
    for (std::size_t i = 0; i < m; ++i)
        if (components_[i].algebra() != components_[0].algebra())
            throw Error(ErrorKind::ShapeMismatch, "components over different algebras");
    for (std::size_t i = 0; i < m; ++i) {
        const Representation& from = components_[i];
        const Representation& to = components_[(i + 1) % m];
        if (!map_has_shape(differentials_[i], from, to))
            throw Error(ErrorKind::ShapeMismatch, "differential d^" + std::to_string(i) + " has the wrong shape");
        require_module_map(differentials_[i], from, to);
    }
    for (std::size_t i = 0; i < m; ++i)
        if (!compose(differentials_[(i + 1) % m], differentials_[i]).is_zero())
            throw NotAComplexError(i, "d^" + std::to_string((i + 1) % m) + " d^" + std::to_string(i) + " != 0");
}

PeriodicComplex PeriodicComplex::stalk(const Representation& m, long degree, std::size_t period) {
    if (period == 0) throw Error(ErrorKind::InvalidArgument, "period must be at least 1");
    std::vector<Representation> comps(period, Representation::zero(m.algebra()));
    comps[wrap(degree, period)] = m;
    std::vector<ModuleMap> diffs;
    for (std::size_t i = 0; i < period; ++i) diffs.push_back(zero_map(comps[i], comps[(i + 1) % period]));
    return PeriodicComplex(std::move(comps), std::move(diffs));
}

PeriodicComplex PeriodicComplex::zero(const AlgebraPtr& algebra, std::size_t period) {
    return stalk(Representation::zero(algebra), 0, period);
}

std::size_t PeriodicComplex::support_size() const {
    return static_cast<std::size_t>(
        std::count_if(components_.begin(), components_.end(), [](const Representation& r) { return !r.is_zero(); }));
}

std::size_t PeriodicComplex::total_dim() const {
    std::size_t out = 0;
    for (const auto& c : components_) out += c.total_dim();
    return out;
}

bool PeriodicComplex::operator==(const PeriodicComplex& other) const {
    return components_ == other.components_ && differentials_ == other.differentials_;
}

PeriodicComplex make_complex(std::size_t m, std::vector<Representation> components,
                             std::vector<ModuleMap> differentials) {
    if (components.size() != m || differentials.size() != m)
        throw Error(ErrorKind::ShapeMismatch, "expected " + std::to_string(m) + " components and differentials");
    return PeriodicComplex(std::move(components), std::move(differentials));
}

// -- chain maps -------------------------------------------------------------

bool is_chain_map(const std::vector<ModuleMap>& f, const PeriodicComplex& v, const PeriodicComplex& w) {
    const std::size_t m = v.period();
    if (w.period() != m || f.size() != m || v.algebra() != w.algebra()) return false;
    for (std::size_t i = 0; i < m; ++i)
        if (!map_has_shape(f[i], v.component(i), w.component(i)) ||
            !is_module_map(f[i], v.component(i), w.component(i)))
            return false;
    for (std::size_t i = 0; i < m; ++i) {
        const long li = static_cast<long>(i);
        if (!(compose(f[(i + 1) % m], v.differential(li)) == compose(w.differential(li), f[i]))) return false;
    }
    return true;
}

ChainMap::ChainMap(PeriodicComplex source, PeriodicComplex target, std::vector<ModuleMap> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
    check_compatible(source_, target_, "chain map");
    if (!is_chain_map(components_, source_, target_))
        throw Error(ErrorKind::NotAChainMap, "components do not commute with the differentials");
}

ChainMap ChainMap::identity(const PeriodicComplex& v) {
    std::vector<ModuleMap> comps;
    for (const auto& c : v.components()) comps.push_back(identity_map(c));
    return ChainMap(v, v, std::move(comps));
}

ChainMap ChainMap::zero(const PeriodicComplex& v, const PeriodicComplex& w) {
    check_compatible(v, w, "zero chain map");
    std::vector<ModuleMap> comps;
    for (std::size_t i = 0; i < v.period(); ++i) comps.push_back(zero_map(v.components()[i], w.components()[i]));
    return ChainMap(v, w, std::move(comps));
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    std::vector<ModuleMap> comps;
    for (std::size_t i = 0; i < f.components().size(); ++i) comps.push_back(compose(g.components()[i], f.components()[i]));
    return ChainMap(f.source(), g.target(), std::move(comps));
}

ChainMap operator+(const ChainMap& a, const ChainMap& b) {
    std::vector<ModuleMap> comps;
    for (std::size_t i = 0; i < a.components().size(); ++i) comps.push_back(a.components()[i] + b.components()[i]);
    return ChainMap(a.source(), a.target(), std::move(comps));
}

ChainMap operator-(const ChainMap& a, const ChainMap& b) {
    std::vector<ModuleMap> comps;
    for (std::size_t i = 0; i < a.components().size(); ++i) comps.push_back(a.components()[i] - b.components()[i]);
    return ChainMap(a.source(), a.target(), std::move(comps));
}

std::vector<ModuleMap> homotopy_boundary(const Homotopy& s, const PeriodicComplex& v, const PeriodicComplex& w) {
    const std::size_t m = v.period();
    if (s.maps.size() != m) throw Error(ErrorKind::ShapeMismatch, "homotopy needs one map per degree");
    for (std::size_t i = 0; i < m; ++i)
        if (!map_has_shape(s.maps[i], v.component(static_cast<long>(i)), w.component(static_cast<long>(i) - 1)))
            throw Error(ErrorKind::ShapeMismatch, "homotopy component has the wrong shape");
    std::vector<ModuleMap> out;
    for (std::size_t i = 0; i < m; ++i) {
        const long li = static_cast<long>(i);
        out.push_back(compose(w.differential(li - 1), s.maps[i]) + compose(s.maps[(i + 1) % m], v.differential(li)));
    }
    return out;
}

bool verify_homotopy(const Homotopy& s, const ChainMap& f, const ChainMap& g) {
    auto boundary = homotopy_boundary(s, f.source(), f.target());
    for (std::size_t i = 0; i < boundary.size(); ++i)
        if (!(f.components()[i] - g.components()[i] == boundary[i])) return false;
    return true;
}

// -- BoundedComplex -----------------------------------------------------------

BoundedComplex::BoundedComplex(long lo, std::vector<Representation> components, std::vector<ModuleMap> differentials)
    : lo_(lo), components_(std::move(components)), differentials_(std::move(differentials)) {
    if (components_.empty()) throw Error(ErrorKind::InvalidArgument, "bounded complex needs a component");
    if (differentials_.size() + 1 != components_.size())
        throw Error(ErrorKind::ShapeMismatch, "bounded complex needs size - 1 differentials");
    for (std::size_t k = 0; k < differentials_.size(); ++k) {
        if (!map_has_shape(differentials_[k], components_[k], components_[k + 1]))
            throw Error(ErrorKind::ShapeMismatch, "bounded differential has the wrong shape");
        require_module_map(differentials_[k], components_[k], components_[k + 1]);
    }
    for (std::size_t k = 0; k + 1 < differentials_.size(); ++k)
        if (!compose(differentials_[k + 1], differentials_[k]).is_zero())
            throw NotAComplexError(k, "bounded complex: consecutive differentials do not compose to zero");
}

std::vector<long> BoundedComplex::cohomology_dims(long j) const {
    const std::size_t n = components_.front().vertex_count();
    std::vector<long> out(n, 0);
    if (j < lo() || j > hi()) return out;
    for (std::size_t v = 0; v < n; ++v) {
        long d = static_cast<long>(component(j).dim(v));
        if (j < hi()) d -= static_cast<long>(rank(differential(j)[v]));
        if (j > lo()) d -= static_cast<long>(rank(differential(j - 1)[v]));
        out[v] = d;
    }
    return out;
}

// -- operations -------------------------------------------------------------

PeriodicComplex shift(const PeriodicComplex& v, long k) {
    const std::size_t m = v.period();
    const bool odd = (k % 2) != 0;
    std::vector<Representation> comps;
    std::vector<ModuleMap> diffs;
    for (std::size_t i = 0; i < m; ++i) {
        const long j = static_cast<long>(i) + k;
        comps.push_back(v.component(j));
        diffs.push_back(odd ? -v.differential(j) : v.differential(j));
    }
    return PeriodicComplex(std::move(comps), std::move(diffs));
}

ChainMap shift(const ChainMap& f, long k) {
    std::vector<ModuleMap> comps;
    for (std::size_t i = 0; i < f.components().size(); ++i) comps.push_back(f[static_cast<long>(i) + k]);
    return ChainMap(shift(f.source(), k), shift(f.target(), k), std::move(comps));
}

PeriodicComplex direct_sum(const PeriodicComplex& v, const PeriodicComplex& w) {
    check_compatible(v, w, "direct sum");
    std::vector<Representation> comps;
    std::vector<ModuleMap> diffs;
    for (std::size_t i = 0; i < v.period(); ++i) {
        comps.push_back(direct_sum(v.components()[i], w.components()[i]));
        diffs.push_back(direct_sum(v.differentials()[i], w.differentials()[i]));
    }
    return PeriodicComplex(std::move(comps), std::move(diffs));
}

CohomologyData cohomology_data(const PeriodicComplex& v, long i) {
    const Field& f = v.field();
    const Representation& here = v.component(i);
    const ModuleMap& out_d = v.differential(i);
    const ModuleMap& in_d = v.differential(i - 1);
    const std::size_t n = here.vertex_count();

    CohomologyData data{Representation::zero(v.algebra()), {}, {}, {}};
    std::vector<Matrix> boundary_coords(n);
    std::vector<std::size_t> dims(n);
    for (std::size_t x = 0; x < n; ++x) {
        Matrix z = kernel_basis(out_d[x]);
        auto coords = solve(z, in_d[x]);
        if (!coords) throw Error(ErrorKind::NotAComplex, "boundaries are not cycles");
        Matrix b = column_space_basis(*coords);
        const std::size_t zc = z.cols();
        RrefResult r = rref(Matrix::hstack(b, Matrix::identity(f, zc)));
        std::vector<std::size_t> comp;
        for (auto p : r.pivots)
            if (p >= b.cols()) comp.push_back(p - b.cols());
        Matrix c = Matrix::identity(f, zc).select_columns(comp);
        Matrix full_inv = *inverse(Matrix::hstack(b, c));
        data.projection.push_back(full_inv.block(b.cols(), 0, comp.size(), zc));
        data.representatives.push_back(z * c);
        data.cycles.push_back(std::move(z));
        boundary_coords[x] = std::move(b);
        dims[x] = comp.size();
    }

    const Quiver& q = v.algebra()->quiver();
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const std::size_t s = q.arrow(a).source, t = q.arrow(a).target;
        const Matrix& va = here.arrow_map(a);
        auto lifted = solve(data.cycles[t], va * data.representatives[s]);
        if (!lifted) throw Error(ErrorKind::InvalidArgument, "arrow map does not preserve cycles");
        // boundaries must land in boundaries for the map to be well defined
        auto bnd = solve(data.cycles[t], va * (data.cycles[s] * boundary_coords[s]));
        if (!bnd || !(data.projection[t] * *bnd).is_zero())
            throw Error(ErrorKind::InvalidArgument, "arrow map does not preserve boundaries");
        maps.push_back(data.projection[t] * *lifted);
    }
    data.object = Representation(v.algebra(), std::move(dims), std::move(maps));
    return data;
}

Representation cohomology(const PeriodicComplex& v, long i) { return cohomology_data(v, i).object; }

std::vector<long> cohomology_dims(const PeriodicComplex& v, long i) {
    const Representation& here = v.component(i);
    std::vector<long> out;
    for (std::size_t x = 0; x < here.vertex_count(); ++x)
        out.push_back(static_cast<long>(here.dim(x)) - static_cast<long>(rank(v.differential(i)[x])) -
                      static_cast<long>(rank(v.differential(i - 1)[x])));
    return out;
}

ModuleMap induced_map(const ChainMap& f, long i) {
    CohomologyData dv = cohomology_data(f.source(), i);
    CohomologyData dw = cohomology_data(f.target(), i);
    ModuleMap out;
    for (std::size_t x = 0; x < dv.cycles.size(); ++x) {
        auto coords = solve(dw.cycles[x], f[i][x] * dv.representatives[x]);
        if (!coords) throw Error(ErrorKind::NotAChainMap, "image of a cycle is not a cycle");
        out.components.push_back(dw.projection[x] * *coords);
    }
    return out;
}

bool is_quasi_iso(const ChainMap& f) {
    for (std::size_t i = 0; i < f.source().period(); ++i) {
        ModuleMap h = induced_map(f, static_cast<long>(i));
        for (const auto& x : h.components)
            if (x.rows() != x.cols() || rank(x) != x.rows()) return false;
    }
    return true;
}

Cone cone(const ChainMap& f) {
    const PeriodicComplex& v = f.source();
    const PeriodicComplex& w = f.target();
    const std::size_t m = v.period();
    const std::size_t n = v.algebra()->vertex_count();
    const Field& fld = v.field();

    std::vector<Representation> comps;
    for (std::size_t i = 0; i < m; ++i) {
        const long li = static_cast<long>(i);
        comps.push_back(direct_sum(v.component(li + 1), w.component(li)));
    }
    std::vector<ModuleMap> diffs;
    for (std::size_t i = 0; i < m; ++i) {
        const long li = static_cast<long>(i);
        ModuleMap d;
        for (std::size_t x = 0; x < n; ++x) {
            const std::size_t v1 = v.component(li + 1).dim(x), v2 = v.component(li + 2).dim(x);
            const std::size_t w0 = w.component(li).dim(x), w1 = w.component(li + 1).dim(x);
            Matrix block(fld, v2 + w1, v1 + w0);
            block.set_block(0, 0, -v.differential(li + 1)[x]);
            block.set_block(v2, 0, f[li + 1][x]);
            block.set_block(v2, v1, w.differential(li)[x]);
            d.components.push_back(std::move(block));
        }
        diffs.push_back(std::move(d));
    }
    PeriodicComplex c(std::move(comps), std::move(diffs));

    std::vector<ModuleMap> incl, proj;
    for (std::size_t i = 0; i < m; ++i) {
        const long li = static_cast<long>(i);
        ModuleMap in, pr;
        for (std::size_t x = 0; x < n; ++x) {
            const std::size_t v1 = v.component(li + 1).dim(x), w0 = w.component(li).dim(x);
            Matrix a(fld, v1 + w0, w0);
            a.set_block(v1, 0, Matrix::identity(fld, w0));
            in.components.push_back(std::move(a));
            Matrix b(fld, v1, v1 + w0);
            b.set_block(0, 0, Matrix::identity(fld, v1));
            pr.components.push_back(std::move(b));
        }
        incl.push_back(std::move(in));
        proj.push_back(std::move(pr));
    }
    ChainMap inclusion(w, c, std::move(incl));
    ChainMap projection(c, shift(v, 1), std::move(proj));
    return Cone{std::move(c), std::move(inclusion), std::move(projection)};
}

namespace {

struct HomotopySystem {
    BlockLayout layout;                         ///< degree i: Hom(V^i, W^i) entries
    std::vector<std::vector<ModuleMap>> basis;  ///< degree j: basis of Hom(V^j, W^{j-1})
    Matrix images;                              ///< columns: boundaries of the basis homotopies
};

HomotopySystem homotopy_system(const PeriodicComplex& v, const PeriodicComplex& w) {
    const std::size_t m = v.period();
    HomotopySystem sys;
    for (std::size_t i = 0; i < m; ++i) {
        const long li = static_cast<long>(i);
        sys.layout.add_degree(dims_of(w.component(li)), dims_of(v.component(li)));
        sys.basis.push_back(hom_space(v.component(li), w.component(li - 1)));
    }
    std::size_t cols = 0;
    for (const auto& b : sys.basis) cols += b.size();
    sys.images = Matrix(v.field(), sys.layout.size(), cols);
    std::size_t col = 0;
    for (std::size_t j = 0; j < m; ++j) {
        const long lj = static_cast<long>(j);
        for (const auto& s : sys.basis[j]) {
            // s at degree j feeds d_W^{j-1} s into degree j and s d_V^{j-1} into degree j-1
            sys.layout.accumulate(sys.images, col, j, compose(w.differential(lj - 1), s).components);
            sys.layout.accumulate(sys.images, col, wrap(lj - 1, m), compose(s, v.differential(lj - 1)).components);
            ++col;
        }
    }
    return sys;
}

}  // namespace

std::optional<Homotopy> homotopic(const ChainMap& f, const ChainMap& g) {
    const PeriodicComplex& v = f.source();
    const PeriodicComplex& w = f.target();
    check_compatible(v, g.source(), "homotopic");
    const std::size_t m = v.period();
    HomotopySystem sys = homotopy_system(v, w);
    Matrix rhs(v.field(), sys.layout.size(), 1);
    for (std::size_t i = 0; i < m; ++i) sys.layout.accumulate(rhs, 0, i, (f.components()[i] - g.components()[i]).components);
    auto x = solve(sys.images, rhs);
    if (!x) return std::nullopt;
    Homotopy h;
    std::size_t col = 0;
    for (std::size_t j = 0; j < m; ++j) {
        const long lj = static_cast<long>(j);
        ModuleMap s = zero_map(v.component(lj), w.component(lj - 1));
        for (const auto& b : sys.basis[j]) {
            if (sgn((*x)(col, 0)) != 0) s = s + scaled(b, (*x)(col, 0));
            ++col;
        }
        h.maps.push_back(std::move(s));
    }
    if (!verify_homotopy(h, f, g)) throw Error(ErrorKind::NoSolution, "homotopy solution does not satisfy f - g = ds + sd");
    return h;
}

namespace {

struct ChainSystem {
    std::vector<std::vector<ModuleMap>> basis;  ///< degree i: basis of Hom(V^i, W^i)
    Matrix kernel;                              ///< coefficient vectors of chain maps
};

ChainSystem chain_system(const PeriodicComplex& v, const PeriodicComplex& w) {
    check_compatible(v, w, "chain maps");
    const std::size_t m = v.period();
    ChainSystem sys;
    BlockLayout eq;  // degree i: f^{i+1} d_V^i - d_W^i f^i, shape W^{i+1} x V^i
    for (std::size_t i = 0; i < m; ++i) {
        const long li = static_cast<long>(i);
        eq.add_degree(dims_of(w.component(li + 1)), dims_of(v.component(li)));
        sys.basis.push_back(hom_space(v.component(li), w.component(li)));
    }
    std::size_t cols = 0;
    for (const auto& b : sys.basis) cols += b.size();
    Matrix system(v.field(), eq.size(), cols);
    std::size_t col = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const long li = static_cast<long>(i);
        for (const auto& b : sys.basis[i]) {
            eq.accumulate(system, col, wrap(li - 1, m), compose(b, v.differential(li - 1)).components);
            eq.accumulate(system, col, i, (-compose(w.differential(li), b)).components);
            ++col;
        }
    }
    sys.kernel = kernel_basis(system);
    return sys;
}

std::vector<ModuleMap> chain_from_coeffs(const ChainSystem& sys, const PeriodicComplex& v, const PeriodicComplex& w,
                                         const Matrix& coeffs, std::size_t column) {
    std::vector<ModuleMap> out;
    std::size_t row = 0;
    for (std::size_t i = 0; i < sys.basis.size(); ++i) {
        const long li = static_cast<long>(i);
        ModuleMap f = zero_map(v.component(li), w.component(li));
        for (const auto& b : sys.basis[i]) {
            if (sgn(coeffs(row, column)) != 0) f = f + scaled(b, coeffs(row, column));
            ++row;
        }
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace

std::vector<std::vector<ModuleMap>> chain_map_space(const PeriodicComplex& v, const PeriodicComplex& w) {
    ChainSystem sys = chain_system(v, w);
    std::vector<std::vector<ModuleMap>> out;
    for (std::size_t k = 0; k < sys.kernel.cols(); ++k) out.push_back(chain_from_coeffs(sys, v, w, sys.kernel, k));
    return out;
}

ChainMap random_chain_map(const PeriodicComplex& v, const PeriodicComplex& w, Rng& rng) {
    ChainSystem sys = chain_system(v, w);
    Matrix coeffs(v.field(), sys.kernel.cols(), 1);
    for (std::size_t k = 0; k < coeffs.rows(); ++k) coeffs.set(k, 0, rng.scalar(v.field()));
    return ChainMap(v, w, chain_from_coeffs(sys, v, w, sys.kernel * coeffs, 0));
}

Homotopy random_homotopy(const PeriodicComplex& v, const PeriodicComplex& w, Rng& rng) {
    check_compatible(v, w, "homotopy");
    Homotopy h;
    for (std::size_t i = 0; i < v.period(); ++i) {
        const long li = static_cast<long>(i);
        const Representation& from = v.component(li);
        const Representation& to = w.component(li - 1);
        h.maps.push_back(random_combination(hom_space(from, to), from, to, rng));
    }
    return h;
}

std::size_t homotopy_hom_dim(const PeriodicComplex& v, const PeriodicComplex& w) {
    ChainSystem cs = chain_system(v, w);
    HomotopySystem hs = homotopy_system(v, w);
    return cs.kernel.cols() - rank(hs.images);
}

PeriodicComplex cover(const BoundedComplex& b, std::size_t m) {
    if (m == 0) throw Error(ErrorKind::InvalidArgument, "period must be at least 1");
    const AlgebraPtr& alg = b.components().front().algebra();
    const Field& f = alg->field();
    const std::size_t n = alg->vertex_count();

    std::vector<std::vector<long>> degrees(m);
    for (long j = b.lo(); j <= b.hi(); ++j) degrees[wrap(j, m)].push_back(j);

    // offset[j - lo][x]: where B^j sits inside its cover component at vertex x
    std::vector<std::vector<std::size_t>> offset(b.components().size(), std::vector<std::size_t>(n, 0));
    std::vector<Representation> comps;
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<const Representation*> parts;
        std::vector<std::size_t> run(n, 0);
        for (long j : degrees[i]) {
            const Representation& r = b.component(j);
            parts.push_back(&r);
            for (std::size_t x = 0; x < n; ++x) {
                offset[static_cast<std::size_t>(j - b.lo())][x] = run[x];
                run[x] += r.dim(x);
            }
        }
        comps.push_back(sum_of(alg, parts));
    }
    std::vector<ModuleMap> diffs;
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t next = (i + 1) % m;
        ModuleMap d;
        for (std::size_t x = 0; x < n; ++x) d.components.emplace_back(f, comps[next].dim(x), comps[i].dim(x));
        for (long j : degrees[i]) {
            if (j >= b.hi()) continue;
            const auto& src = offset[static_cast<std::size_t>(j - b.lo())];
            const auto& dst = offset[static_cast<std::size_t>(j + 1 - b.lo())];
            for (std::size_t x = 0; x < n; ++x) d.components[x].set_block(dst[x], src[x], b.differential(j)[x]);
        }
        diffs.push_back(std::move(d));
    }
    return PeriodicComplex(std::move(comps), std::move(diffs));
}

BoundedComplex unroll(const PeriodicComplex& v, long lo, long hi) {
    if (hi < lo) throw Error(ErrorKind::InvalidArgument, "empty window");
    std::vector<Representation> comps;
    std::vector<ModuleMap> diffs;
    for (long j = lo; j <= hi; ++j) {
        comps.push_back(v.component(j));
        if (j < hi) diffs.push_back(v.differential(j));
    }
    return BoundedComplex(lo, std::move(comps), std::move(diffs));
}

PeriodicComplex random_complex(const AlgebraPtr& algebra, std::size_t m, std::size_t max_dim, Rng& rng) {
    if (m == 0) throw Error(ErrorKind::InvalidArgument, "period must be at least 1");
    const Field& f = algebra->field();
    const std::size_t n = algebra->vertex_count();
    if (m == 1) {
        // d = [[0, 0], [h, 0]] on A + B squares to zero for any h : A -> B
        Representation a = random_representation(algebra, (max_dim + 1) / 2, rng);
        Representation b = random_representation(algebra, max_dim / 2, rng);
        ModuleMap h = random_combination(hom_space(a, b), a, b, rng);
        Representation sum = direct_sum(a, b);
        ModuleMap d;
        for (std::size_t x = 0; x < n; ++x) {
            Matrix block(f, sum.dim(x), sum.dim(x));
            block.set_block(a.dim(x), 0, h[x]);
            d.components.push_back(std::move(block));
        }
        return make_complex(1, {sum}, {d});
    }

    std::vector<Representation> comps;
    for (std::size_t i = 0; i < m; ++i) comps.push_back(random_representation(algebra, max_dim, rng));
    std::vector<ModuleMap> diffs;
    diffs.push_back(random_combination(hom_space(comps[0], comps[1]), comps[0], comps[1], rng));
    for (std::size_t i = 1; i < m; ++i) {
        const Representation& from = comps[i];
        const Representation& to = comps[(i + 1) % m];
        std::vector<ModuleMap> basis = hom_space(from, to);
        BlockLayout eq;
        eq.add_degree(dims_of(to), dims_of(comps[i - 1]));  // d^i d^{i-1}
        const bool closes = (i + 1 == m);
        if (closes) eq.add_degree(dims_of(comps[1]), dims_of(from));  // d^0 d^{m-1}
        Matrix system(f, eq.size(), basis.size());
        for (std::size_t k = 0; k < basis.size(); ++k) {
            eq.accumulate(system, k, 0, compose(basis[k], diffs[i - 1]).components);
            if (closes) eq.accumulate(system, k, 1, compose(diffs[0], basis[k]).components);
        }
        Matrix ker = kernel_basis(system);
        std::vector<ModuleMap> allowed;
        for (std::size_t k = 0; k < ker.cols(); ++k) allowed.push_back(combine(basis, ker, k, from, to));
        diffs.push_back(random_combination(allowed, from, to, rng));
    }
    return make_complex(m, std::move(comps), std::move(diffs));
}

PeriodicComplex random_complex(const AlgebraPtr& algebra, std::size_t m, std::size_t max_dim, std::uint64_t seed) {
    Rng rng(seed);
    return random_complex(algebra, m, max_dim, rng);
}

ProjectiveResolution projective_resolution(const Representation& m) {
    ProjectiveCover pc = projective_cover(m);
    std::vector<Representation> comps{pc.cover};
    std::vector<ModuleMap> diffs;
    Subobject omega = kernel(pc.epi, pc.cover, m);
    // an acyclic quiver has global dimension below its vertex count
    for (std::size_t step = 0; !omega.object.is_zero(); ++step) {
        if (step > m.vertex_count() + 1) throw Error(ErrorKind::InvalidArgument, "resolution does not terminate");
        ProjectiveCover c = projective_cover(omega.object);
        comps.insert(comps.begin(), c.cover);
        diffs.insert(diffs.begin(), compose(omega.inclusion, c.epi));
        omega = kernel(c.epi, c.cover, omega.object);
    }
    const long lo = -static_cast<long>(comps.size() - 1);
    return ProjectiveResolution{BoundedComplex(lo, std::move(comps), std::move(diffs)), std::move(pc.epi)};
}

ChainMap augmentation_map(const ProjectiveResolution& res, const Representation& m, std::size_t period) {
    PeriodicComplex v = cover(res.complex, period);
    PeriodicComplex w = PeriodicComplex::stalk(m, 0, period);
    std::vector<ModuleMap> comps;
    for (std::size_t i = 0; i < period; ++i) comps.push_back(zero_map(v.components()[i], w.components()[i]));
    const Representation& p0 = res.complex.component(0);
    for (std::size_t x = 0; x < m.vertex_count(); ++x) {
        // degree 0 is the last summand of cover component 0
        const std::size_t off = v.components()[0].dim(x) - p0.dim(x);
        comps[0].components[x].set_block(0, off, res.augmentation[x]);
    }
    return ChainMap(std::move(v), std::move(w), std::move(comps));
}

}  // namespace periodk
