#include "periodk/representation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "periodk/error.hpp"

namespace periodk {

Representation::Representation(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> arrow_maps)
    : algebra_(std::move(algebra)), dims_(std::move(dims)), maps_(std::move(arrow_maps)) {
    if (!algebra_) throw Error(ErrorKind::InvalidArgument, "representation without an algebra");
    const Quiver& q = algebra_->quiver();
    if (dims_.size() != q.vertex_count())
        throw Error(ErrorKind::InvalidRepresentation, "dimension vector length differs from vertex count");
    if (maps_.size() != q.arrows().size())
        throw Error(ErrorKind::InvalidRepresentation, "one matrix per arrow is required");
    for (std::size_t a = 0; a < maps_.size(); ++a) {
        const Arrow& arrow = q.arrow(a);
        const Matrix& m = maps_[a];
        if (!(m.field() == algebra_->field()))
            throw Error(ErrorKind::InvalidRepresentation, "arrow map over the wrong field");
        if (m.rows() != dims_[arrow.target] || m.cols() != dims_[arrow.source])
            throw Error(ErrorKind::InvalidRepresentation, "arrow map '" + arrow.label + "' has the wrong shape");
    }
    for (const auto& r : algebra_->relations())
        if (!path_map(r).is_zero())
            throw Error(ErrorKind::InvalidRepresentation, "relation " + q.path_name(r) + " does not compose to zero");
}

Representation Representation::zero(AlgebraPtr algebra) {
    const std::size_t n = algebra->vertex_count();
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < algebra->quiver().arrows().size(); ++a) maps.emplace_back(algebra->field(), 0, 0);
    return Representation(std::move(algebra), std::vector<std::size_t>(n, 0), std::move(maps));
}

std::size_t Representation::total_dim() const noexcept { return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0}); }

Matrix Representation::path_map(const Path& p) const {
    Matrix out = Matrix::identity(field(), dims_[p.source]);
    for (auto it = p.word.rbegin(); it != p.word.rend(); ++it) out = maps_[*it] * out;
    return out;
}

bool Representation::operator==(const Representation& other) const {
    return (algebra_ == other.algebra_) && dims_ == other.dims_ && maps_ == other.maps_;
}

bool ModuleMap::is_zero() const {
    return std::all_of(components.begin(), components.end(), [](const Matrix& m) { return m.is_zero(); });
}

// -- construction ---------------------------------------------------------

Representation simple(const AlgebraPtr& algebra, std::size_t vertex) {
    const std::size_t n = algebra->vertex_count();
    if (vertex >= n) throw Error(ErrorKind::InvalidArgument, "vertex out of range");
    std::vector<std::size_t> dims(n, 0);
    dims[vertex] = 1;
    std::vector<Matrix> maps;
    for (const auto& a : algebra->quiver().arrows()) maps.emplace_back(algebra->field(), dims[a.target], dims[a.source]);
    return Representation(algebra, std::move(dims), std::move(maps));
}

Representation projective(const AlgebraPtr& algebra, std::size_t vertex) {
    const std::size_t n = algebra->vertex_count();
    if (vertex >= n) throw Error(ErrorKind::InvalidArgument, "vertex out of range");
    // basis at w: nonzero paths vertex ~> w
    std::vector<std::vector<const Path*>> at(n);
    for (const auto& p : algebra->path_basis())
        if (p.source == vertex) at[p.target].push_back(&p);
    std::vector<std::size_t> dims(n);
    for (std::size_t w = 0; w < n; ++w) dims[w] = at[w].size();
    std::vector<Matrix> maps;
    const Quiver& q = algebra->quiver();
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const Arrow& arrow = q.arrow(a);
        Matrix m(algebra->field(), dims[arrow.target], dims[arrow.source]);
        for (std::size_t c = 0; c < at[arrow.source].size(); ++c) {
            std::vector<std::size_t> word{a};
            const auto& tail = at[arrow.source][c]->word;
            word.insert(word.end(), tail.begin(), tail.end());
            for (std::size_t r = 0; r < at[arrow.target].size(); ++r)
                if (at[arrow.target][r]->word == word) m.set(r, c, 1);
        }
        maps.push_back(std::move(m));
    }
    return Representation(algebra, std::move(dims), std::move(maps));
}

Representation direct_sum(const Representation& m, const Representation& n) {
    if (m.algebra() != n.algebra()) throw Error(ErrorKind::ShapeMismatch, "direct sum over different algebras");
    std::vector<std::size_t> dims(m.vertex_count());
    for (std::size_t v = 0; v < dims.size(); ++v) dims[v] = m.dim(v) + n.dim(v);
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < m.arrow_maps().size(); ++a)
        maps.push_back(Matrix::direct_sum(m.arrow_map(a), n.arrow_map(a)));
    return Representation(m.algebra(), std::move(dims), std::move(maps));
}

std::vector<long> dim_vector(const Representation& m) {
    std::vector<long> out;
    for (auto d : m.dims()) out.push_back(static_cast<long>(d));
    return out;
}

Representation random_representation(const AlgebraPtr& algebra, std::size_t max_dim, Rng& rng) {
    const Quiver& q = algebra->quiver();
    const Field& f = algebra->field();
    const std::size_t n = q.vertex_count();
    std::vector<std::size_t> dims(n);
    for (auto& d : dims) d = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(max_dim)));

    std::vector<std::size_t> position(n);
    for (std::size_t k = 0; k < n; ++k) position[q.topological_order()[k]] = k;
    std::vector<std::size_t> order(q.arrows().size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return position[q.arrow(x).source] < position[q.arrow(y).source];
    });

    std::vector<Matrix> maps(q.arrows().size());
    std::vector<bool> chosen(q.arrows().size(), false);
    for (std::size_t a : order) {
        const Arrow& arrow = q.arrow(a);
        const std::size_t rows = dims[arrow.target], cols = dims[arrow.source];
        // Images that this arrow must kill: one per relation ending with it.
        Matrix constraint(f, cols, 0);
        for (const auto& r : algebra->relations()) {
            if (r.word.front() != a) continue;
            Matrix prefix = Matrix::identity(f, dims[r.source]);
            for (std::size_t k = r.word.size(); k-- > 1;) {
                if (!chosen[r.word[k]]) throw Error(ErrorKind::InvalidArgument, "arrow order violates relation");
                prefix = maps[r.word[k]] * prefix;
            }
            constraint = Matrix::hstack(constraint, prefix);
        }
        Matrix m(f, rows, cols);
        if (constraint.cols() == 0) {
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rng.scalar(f));
        } else {
            Matrix annihilator = kernel_basis(constraint.transpose());  // cols x r, y^T U = 0
            Matrix coeff(f, rows, annihilator.cols());
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < annihilator.cols(); ++j) coeff.set(i, j, rng.scalar(f));
            m = coeff * annihilator.transpose();
        }
        maps[a] = std::move(m);
        chosen[a] = true;
    }
    return Representation(algebra, std::move(dims), std::move(maps));
}

Representation random_representation(const AlgebraPtr& algebra, std::size_t max_dim, std::uint64_t seed) {
    Rng rng(seed);
    return random_representation(algebra, max_dim, rng);
}

// -- maps -----------------------------------------------------------------

ModuleMap identity_map(const Representation& m) {
    ModuleMap out;
    for (auto d : m.dims()) out.components.push_back(Matrix::identity(m.field(), d));
    return out;
}

ModuleMap zero_map(const Representation& from, const Representation& to) {
    ModuleMap out;
    for (std::size_t v = 0; v < from.vertex_count(); ++v) out.components.emplace_back(from.field(), to.dim(v), from.dim(v));
    return out;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
    if (g.components.size() != f.components.size()) throw Error(ErrorKind::ShapeMismatch, "compose: vertex mismatch");
    ModuleMap out;
    for (std::size_t v = 0; v < f.components.size(); ++v) out.components.push_back(g[v] * f[v]);
    return out;
}

ModuleMap operator+(const ModuleMap& a, const ModuleMap& b) {
    ModuleMap out;
    for (std::size_t v = 0; v < a.components.size(); ++v) out.components.push_back(a[v] + b[v]);
    return out;
}

ModuleMap operator-(const ModuleMap& a, const ModuleMap& b) {
    ModuleMap out;
    for (std::size_t v = 0; v < a.components.size(); ++v) out.components.push_back(a[v] - b[v]);
    return out;
}

ModuleMap operator-(const ModuleMap& a) {
    ModuleMap out;
    for (const auto& m : a.components) out.components.push_back(-m);
    return out;
}

ModuleMap scaled(const ModuleMap& f, const Scalar& factor) {
    ModuleMap out;
    for (const auto& m : f.components) out.components.push_back(m.scaled(factor));
    return out;
}

ModuleMap direct_sum(const ModuleMap& f, const ModuleMap& g) {
    ModuleMap out;
    for (std::size_t v = 0; v < f.components.size(); ++v) out.components.push_back(Matrix::direct_sum(f[v], g[v]));
    return out;
}

bool is_module_map(const ModuleMap& f, const Representation& from, const Representation& to) {
    const std::size_t n = from.vertex_count();
    if (f.components.size() != n || to.vertex_count() != n) return false;
    for (std::size_t v = 0; v < n; ++v)
        if (f[v].rows() != to.dim(v) || f[v].cols() != from.dim(v) || !(f[v].field() == from.field())) return false;
    const Quiver& q = from.algebra()->quiver();
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const Arrow& arrow = q.arrow(a);
        if (!(f[arrow.target] * from.arrow_map(a) == to.arrow_map(a) * f[arrow.source])) return false;
    }
    return true;
}

void require_module_map(const ModuleMap& f, const Representation& from, const Representation& to) {
    if (!is_module_map(f, from, to)) throw Error(ErrorKind::NotAModuleMap, "map does not commute with the arrows");
}

bool is_injective(const ModuleMap& f) {
    return std::all_of(f.components.begin(), f.components.end(),
                       [](const Matrix& m) { return rank(m) == m.cols(); });
}

bool is_surjective(const ModuleMap& f, const Representation& to) {
    for (std::size_t v = 0; v < f.components.size(); ++v)
        if (rank(f[v]) != to.dim(v)) return false;
    return true;
}

bool is_isomorphism(const ModuleMap& f, const Representation& from, const Representation& to) {
    return from.dims() == to.dims() && is_module_map(f, from, to) && is_injective(f);
}

ModuleMap random_combination(const std::vector<ModuleMap>& basis, const Representation& from,
                             const Representation& to, Rng& rng) {
    ModuleMap out = zero_map(from, to);
    const Field& f = from.field();
    for (const auto& b : basis) {
        Scalar c = rng.scalar(f);
        if (sgn(c) == 0) continue;
        out = out + scaled(b, c);
    }
    return out;
}

// -- Hom and Ext ----------------------------------------------------------

std::vector<ModuleMap> hom_space(const Representation& m, const Representation& n) {
    if (m.algebra() != n.algebra()) throw Error(ErrorKind::ShapeMismatch, "hom_space over different algebras");
    const Field& f = m.field();
    const std::size_t verts = m.vertex_count();
    // unknown X_v (n_v x m_v) row-major at offset[v]
    std::vector<std::size_t> offset(verts + 1, 0);
    for (std::size_t v = 0; v < verts; ++v) offset[v + 1] = offset[v] + n.dim(v) * m.dim(v);
    const std::size_t unknowns = offset[verts];

    const Quiver& q = m.algebra()->quiver();
    std::size_t equations = 0;
    for (const auto& a : q.arrows()) equations += n.dim(a.target) * m.dim(a.source);

    Matrix system(f, equations, unknowns);
    std::size_t row = 0;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const std::size_t i = q.arrow(a).source, j = q.arrow(a).target;
        const Matrix& ma = m.arrow_map(a);  // m_j x m_i
        const Matrix& na = n.arrow_map(a);  // n_j x n_i
        // (N_a X_i - X_j M_a)[r][c] = 0
        for (std::size_t r = 0; r < n.dim(j); ++r)
            for (std::size_t c = 0; c < m.dim(i); ++c, ++row) {
                for (std::size_t k = 0; k < n.dim(i); ++k)
                    if (sgn(na(r, k)) != 0) {
                        const std::size_t col = offset[i] + k * m.dim(i) + c;
                        system.set(row, col, f.add(system(row, col), na(r, k)));
                    }
                for (std::size_t k = 0; k < m.dim(j); ++k)
                    if (sgn(ma(k, c)) != 0) {
                        const std::size_t col = offset[j] + r * m.dim(j) + k;
                        system.set(row, col, f.sub(system(row, col), ma(k, c)));
                    }
            }
    }
    Matrix basis = kernel_basis(system);
    std::vector<ModuleMap> out;
    for (std::size_t b = 0; b < basis.cols(); ++b) {
        ModuleMap map;
        for (std::size_t v = 0; v < verts; ++v) {
            Matrix x(f, n.dim(v), m.dim(v));
            for (std::size_t r = 0; r < n.dim(v); ++r)
                for (std::size_t c = 0; c < m.dim(v); ++c) x.set(r, c, basis(offset[v] + r * m.dim(v) + c, b));
            map.components.push_back(std::move(x));
        }
        out.push_back(std::move(map));
    }
    return out;
}

std::size_t hom_dim(const Representation& m, const Representation& n) { return hom_space(m, n).size(); }

std::size_t ext1_dim(const Representation& m, const Representation& n) {
    ProjectiveCover cover = projective_cover(m);
    Subobject omega = kernel(cover.epi, cover.cover, m);
    const std::size_t value = hom_dim(omega.object, n) + hom_dim(m, n);
    const std::size_t subtract = hom_dim(cover.cover, n);
    if (value < subtract) throw Error(ErrorKind::InvalidArgument, "ext1_dim: inconsistent Hom dimensions");
    return value - subtract;
}

long euler_form(const QuiverAlgebra& algebra, const std::vector<long>& d, const std::vector<long>& e) {
    if (!algebra.is_hereditary()) throw Error(ErrorKind::NotHereditary, "Euler form closed formula needs kQ");
    const std::size_t n = algebra.vertex_count();
    if (d.size() != n || e.size() != n) throw Error(ErrorKind::ShapeMismatch, "dimension vector length mismatch");
    long out = 0;
    for (std::size_t i = 0; i < n; ++i) out += d[i] * e[i];
    for (const auto& a : algebra.quiver().arrows()) out -= d[a.source] * e[a.target];
    return out;
}

// -- sub- and quotient objects ----------------------------------------------

bool is_subrepresentation(const Representation& m, const std::vector<Matrix>& basis) {
    if (basis.size() != m.vertex_count()) return false;
    for (std::size_t v = 0; v < basis.size(); ++v)
        if (basis[v].rows() != m.dim(v) || rank(basis[v]) != basis[v].cols()) return false;
    const Quiver& q = m.algebra()->quiver();
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const Arrow& arrow = q.arrow(a);
        if (!solve(basis[arrow.target], m.arrow_map(a) * basis[arrow.source])) return false;
    }
    return true;
}

Subobject subrepresentation(const Representation& m, const std::vector<Matrix>& basis) {
    if (basis.size() != m.vertex_count()) throw Error(ErrorKind::ShapeMismatch, "one basis per vertex required");
    const Quiver& q = m.algebra()->quiver();
    std::vector<std::size_t> dims;
    for (const auto& b : basis) dims.push_back(b.cols());
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const Arrow& arrow = q.arrow(a);
        auto x = solve(basis[arrow.target], m.arrow_map(a) * basis[arrow.source]);
        if (!x) throw Error(ErrorKind::InvalidRepresentation, "basis does not span a subrepresentation");
        maps.push_back(std::move(*x));
    }
    Representation sub(m.algebra(), std::move(dims), std::move(maps));
    return Subobject{std::move(sub), ModuleMap{basis}};
}

Quotient quotient(const Representation& m, const std::vector<Matrix>& sub_basis) {
    if (sub_basis.size() != m.vertex_count()) throw Error(ErrorKind::ShapeMismatch, "one basis per vertex required");
    const Field& f = m.field();
    const std::size_t n = m.vertex_count();
    std::vector<Matrix> section(n), proj(n);
    std::vector<std::size_t> dims(n);
    for (std::size_t v = 0; v < n; ++v) {
        const Matrix& b = sub_basis[v];
        const std::size_t k = b.cols();
        // Complement: identity columns that are pivots of [B | I].
        RrefResult r = rref(Matrix::hstack(b, Matrix::identity(f, m.dim(v))));
        std::vector<std::size_t> comp;
        for (auto p : r.pivots)
            if (p >= k) comp.push_back(p - k);
        if (r.pivots.size() != m.dim(v) || r.pivots.size() - comp.size() != k)
            throw Error(ErrorKind::InvalidArgument, "quotient: sub basis is not linearly independent");
        Matrix c = Matrix::identity(f, m.dim(v)).select_columns(comp);
        auto inv = inverse(Matrix::hstack(b, c));
        proj[v] = inv->block(k, 0, comp.size(), m.dim(v));
        section[v] = std::move(c);
        dims[v] = comp.size();
    }
    const Quiver& q = m.algebra()->quiver();
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const Arrow& arrow = q.arrow(a);
        maps.push_back(proj[arrow.target] * m.arrow_map(a) * section[arrow.source]);
    }
    Representation quot(m.algebra(), std::move(dims), std::move(maps));
    return Quotient{std::move(quot), ModuleMap{std::move(proj)}, std::move(section)};
}

Subobject kernel(const ModuleMap& f, const Representation& from, const Representation& to) {
    require_module_map(f, from, to);
    std::vector<Matrix> basis;
    for (const auto& m : f.components) basis.push_back(kernel_basis(m));
    return subrepresentation(from, basis);
}

std::vector<Matrix> image_basis(const ModuleMap& f) {
    std::vector<Matrix> out;
    for (const auto& m : f.components) out.push_back(column_space_basis(m));
    return out;
}

ProjectiveCover projective_cover(const Representation& m) {
    const AlgebraPtr& alg = m.algebra();
    const Field& f = m.field();
    const Quiver& q = alg->quiver();
    const std::size_t n = m.vertex_count();

    // generators at v: complement of the radical sum_{a: u->v} im M_a
    std::vector<Matrix> generators(n);
    std::vector<std::size_t> top(n);
    for (std::size_t v = 0; v < n; ++v) {
        Matrix rad(f, m.dim(v), 0);
        for (std::size_t a = 0; a < q.arrows().size(); ++a)
            if (q.arrow(a).target == v) rad = Matrix::hstack(rad, m.arrow_map(a));
        Matrix rad_basis = column_space_basis(rad);
        RrefResult r = rref(Matrix::hstack(rad_basis, Matrix::identity(f, m.dim(v))));
        std::vector<std::size_t> comp;
        for (auto p : r.pivots)
            if (p >= rad_basis.cols()) comp.push_back(p - rad_basis.cols());
        generators[v] = Matrix::identity(f, m.dim(v)).select_columns(comp);
        top[v] = comp.size();
    }

    Representation cover = Representation::zero(alg);
    std::vector<std::size_t> summands;
    std::vector<Matrix> epi(n);
    for (std::size_t w = 0; w < n; ++w) epi[w] = Matrix(f, m.dim(w), 0);
    for (std::size_t v = 0; v < n; ++v) {
        if (top[v] == 0) continue;
        Representation pv = projective(alg, v);
        // paths v ~> w in the same order projective() uses
        std::vector<std::vector<const Path*>> at(n);
        for (const auto& p : alg->path_basis())
            if (p.source == v) at[p.target].push_back(&p);
        for (std::size_t g = 0; g < top[v]; ++g) {
            cover = direct_sum(cover, pv);
            summands.push_back(v);
            Matrix gen = generators[v].column(g);
            for (std::size_t w = 0; w < n; ++w) {
                Matrix block(f, m.dim(w), at[w].size());
                for (std::size_t c = 0; c < at[w].size(); ++c) block.set_block(0, c, m.path_map(*at[w][c]) * gen);
                epi[w] = Matrix::hstack(epi[w], block);
            }
        }
    }
    return ProjectiveCover{std::move(cover), ModuleMap{std::move(epi)}, std::move(top), std::move(summands)};
}

Subobject syzygy(const Representation& m) {
    ProjectiveCover pc = projective_cover(m);
    return kernel(pc.epi, pc.cover, m);
}

CompositionSeries composition_series(const Representation& m) {
    const Field& f = m.field();
    const std::size_t n = m.vertex_count();
    const auto& topo = m.algebra()->quiver().topological_order();
    CompositionSeries out;
    std::vector<Matrix> current(n);
    for (std::size_t v = 0; v < n; ++v) current[v] = Matrix(f, m.dim(v), 0);
    out.filtration.push_back(current);
    for (std::size_t step = 0; step < m.total_dim(); ++step) {
        Quotient q = quotient(m, current);
        std::size_t v = n;
        for (std::size_t k = n; k-- > 0;)
            if (q.object.dim(topo[k]) > 0) {
                v = topo[k];
                break;
            }
        current[v] = Matrix::hstack(current[v], q.section[v].column(0));
        out.factors.push_back(v);
        out.filtration.push_back(current);
    }
    return out;
}

bool verify_composition_series(const Representation& m, const CompositionSeries& series) {
    const std::size_t n = m.vertex_count();
    if (series.filtration.size() != series.factors.size() + 1) return false;
    for (std::size_t k = 0; k < series.filtration.size(); ++k) {
        if (!is_subrepresentation(m, series.filtration[k])) return false;
        if (k == 0) {
            for (const auto& b : series.filtration[0])
                if (b.cols() != 0) return false;
            continue;
        }
        // F_k / F_{k-1} is one-dimensional, concentrated at factors[k-1]
        for (std::size_t v = 0; v < n; ++v) {
            const std::size_t grow = series.filtration[k][v].cols() - series.filtration[k - 1][v].cols();
            if (grow != (v == series.factors[k - 1] ? 1u : 0u)) return false;
            // F_{k-1} inside F_k
            if (series.filtration[k - 1][v].cols() > 0 &&
                !solve(series.filtration[k][v], series.filtration[k - 1][v]))
                return false;
        }
    }
    for (std::size_t v = 0; v < n; ++v)
        if (series.filtration.back()[v].cols() != m.dim(v)) return false;
    return true;
}

}  // namespace periodk
