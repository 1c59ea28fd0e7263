#include "periodk/derived.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

#include "periodk/error.hpp"
#include "periodk/grothendieck.hpp"

namespace periodk {

std::size_t hom_dm_dim(const Representation& m, const Representation& n, long degree, std::size_t period) {
    if (!m.algebra()->is_hereditary()) throw Error(ErrorKind::NotHereditary, "covering Hom formula needs a hereditary algebra");
    if (period < 2) throw Error(ErrorKind::PeriodOne, "covering Hom formula needs m >= 2");
    switch (wrap(degree, period)) {
        case 0: return hom_dim(m, n);
        case 1: return ext1_dim(m, n);
        default: return 0;
    }
}

DecomposeReport decompose_check(const PeriodicComplex& v, std::size_t m) {
    const AlgebraPtr& alg = v.algebra();
    if (!alg->is_hereditary()) throw Error(ErrorKind::NotHereditary, "decomposition needs a hereditary algebra");
    auto fail = [](std::string why) { return DecomposeReport{false, std::move(why)}; };

    std::vector<Representation> h;
    PeriodicComplex sum = PeriodicComplex::zero(alg, m);
    for (std::size_t i = 0; i < m; ++i) {
        h.push_back(cohomology(v, static_cast<long>(i)));
        sum = direct_sum(sum, PeriodicComplex::stalk(h.back(), static_cast<long>(i), m));
    }
    if (!(class_of(v, m) == class_of(sum, m))) return fail("classes differ");
    for (std::size_t i = 0; i < m; ++i)
        if (cohomology_dims(sum, static_cast<long>(i)) != dim_vector(h[i]))
            return fail("cohomology of the stalk sum differs in degree " + std::to_string(i));
    if (m < 2) return {};

    // Hom(S, V[j]) from the formula against chain maps out of a projective resolution
    std::vector<Representation> tests;
    for (std::size_t x = 0; x < alg->vertex_count(); ++x) {
        tests.push_back(simple(alg, x));
        tests.push_back(projective(alg, x));
    }
    for (std::size_t t = 0; t < tests.size(); ++t) {
        PeriodicComplex p = cover(projective_resolution(tests[t]).complex, m);
        for (std::size_t j = 0; j < m; ++j) {
            const long lj = static_cast<long>(j);
            std::size_t formula = 0;
            for (std::size_t i = 0; i < m; ++i) formula += hom_dm_dim(tests[t], h[i], lj - static_cast<long>(i), m);
            const std::size_t direct = homotopy_hom_dim(p, shift(v, lj));
            if (formula != direct)
                return fail("Hom profile differs for test object " + std::to_string(t) + " in degree " +
                            std::to_string(j) + ": " + std::to_string(formula) + " vs " + std::to_string(direct));
        }
    }
    return {};
}

std::vector<std::size_t> type_a_order(const QuiverAlgebra& algebra) {
    const Quiver& q = algebra.quiver();
    const std::size_t n = q.vertex_count();
    if (q.arrows().size() + 1 != n) throw Error(ErrorKind::NotTypeA, "type A needs n - 1 arrows");
    std::vector<std::vector<std::size_t>> nbr(n);
    for (const auto& a : q.arrows()) {
        nbr[a.source].push_back(a.target);
        nbr[a.target].push_back(a.source);
    }
    std::size_t start = n;
    for (std::size_t x = 0; x < n; ++x) {
        if (nbr[x].size() > 2) throw Error(ErrorKind::NotTypeA, "vertex of degree above two");
        if (nbr[x].size() <= 1 && start == n) start = x;
    }
    if (start == n) throw Error(ErrorKind::NotTypeA, "underlying graph has no end");
    std::vector<std::size_t> order{start};
    std::vector<bool> seen(n, false);
    seen[start] = true;
    while (order.size() < n) {
        std::size_t next = n;
        for (auto y : nbr[order.back()])
            if (!seen[y]) next = y;
        if (next == n) throw Error(ErrorKind::NotTypeA, "underlying graph is not connected");
        seen[next] = true;
        order.push_back(next);
    }
    return order;
}

std::vector<IntervalModule> indecomposables_typeA(const AlgebraPtr& algebra) {
    if (!algebra->is_hereditary()) throw Error(ErrorKind::NotTypeA, "relations are not allowed");
    const std::vector<std::size_t> order = type_a_order(*algebra);
    const std::size_t n = order.size();
    std::vector<std::size_t> pos(n);
    for (std::size_t k = 0; k < n; ++k) pos[order[k]] = k;
    const Field& f = algebra->field();
    const Quiver& q = algebra->quiver();

    std::vector<IntervalModule> out;
    for (std::size_t lo = 0; lo < n; ++lo)
        for (std::size_t hi = lo; hi < n; ++hi) {
            std::vector<std::size_t> dims(n, 0);
            for (std::size_t k = lo; k <= hi; ++k) dims[order[k]] = 1;
            std::vector<Matrix> maps;
            for (const auto& a : q.arrows()) {
                Matrix x(f, dims[a.target], dims[a.source]);
                if (x.rows() == 1 && x.cols() == 1) x.set(0, 0, 1L);
                maps.push_back(std::move(x));
            }
            out.push_back(IntervalModule{lo, hi, order[lo], order[hi], Representation(algebra, std::move(dims), std::move(maps))});
        }
    return out;
}

namespace {

/// Hom(M[-p], N[-q][j]) = hom_dm_dim(M, N, p - q + j).
bool compatible(const std::vector<IntervalModule>& mods, const DmSummand& a, const DmSummand& b, std::size_t m) {
    const long shift_ab = static_cast<long>(a.degree) - static_cast<long>(b.degree);
    for (std::size_t j = 1; j < m; ++j) {
        const long lj = static_cast<long>(j);
        if (hom_dm_dim(mods[a.interval].module, mods[b.interval].module, shift_ab + lj, m) != 0) return false;
        if (hom_dm_dim(mods[b.interval].module, mods[a.interval].module, -shift_ab + lj, m) != 0) return false;
    }
    return true;
}

std::size_t end_dim(const std::vector<IntervalModule>& mods, const std::vector<DmSummand>& set, std::size_t m) {
    std::size_t out = 0;
    for (const auto& a : set)
        for (const auto& b : set)
            out += hom_dm_dim(mods[a.interval].module, mods[b.interval].module,
                              static_cast<long>(a.degree) - static_cast<long>(b.degree), m);
    return out;
}

std::vector<DmSummand> canonical_shift(std::vector<DmSummand> set, std::size_t m) {
    std::sort(set.begin(), set.end());
    std::vector<DmSummand> best = set;
    for (std::size_t s = 1; s < m; ++s) {
        std::vector<DmSummand> moved = set;
        for (auto& x : moved) x.degree = (x.degree + s) % m;
        std::sort(moved.begin(), moved.end());
        best = std::min(best, moved);
    }
    return best;
}

}  // namespace

bool is_orthogonal(const std::vector<IntervalModule>& modules, const std::vector<DmSummand>& set, std::size_t m) {
    for (std::size_t a = 0; a < set.size(); ++a)
        for (std::size_t b = a; b < set.size(); ++b)
            if (!compatible(modules, set[a], set[b], m)) return false;
    return true;
}

OrthogonalSearch orthogonal_sets(const AlgebraPtr& algebra, std::size_t m, std::size_t max_objects) {
    if (m < 2) throw Error(ErrorKind::PeriodOne, "orthogonal search needs m >= 2");
    OrthogonalSearch out;
    out.modules = indecomposables_typeA(algebra);
    std::vector<DmSummand> objects;
    for (std::size_t k = 0; k < out.modules.size(); ++k)
        for (std::size_t p = 0; p < m; ++p) objects.push_back(DmSummand{k, p});
    out.objects = objects.size();
    if (objects.size() > max_objects || objects.size() > 64)
        throw Error(ErrorKind::SearchTooLarge,
                    std::to_string(objects.size()) + " objects exceed the bound of " + std::to_string(max_objects));

    const std::size_t n = objects.size();
    std::vector<std::uint64_t> adj(n, 0);
    std::uint64_t usable = 0;
    for (std::size_t a = 0; a < n; ++a) {
        if (compatible(out.modules, objects[a], objects[a], m)) usable |= std::uint64_t{1} << a;
        for (std::size_t b = a + 1; b < n; ++b)
            if (compatible(out.modules, objects[a], objects[b], m)) {
                adj[a] |= std::uint64_t{1} << b;
                adj[b] |= std::uint64_t{1} << a;
            }
    }

    std::set<std::vector<DmSummand>> found;
    // Bron-Kerbosch with pivoting over the self-compatible objects
    auto expand = [&](auto&& self, std::uint64_t r, std::uint64_t p, std::uint64_t x) -> void {
        if (p == 0 && x == 0) {
            std::vector<DmSummand> set;
            for (std::uint64_t bits = r; bits; bits &= bits - 1) set.push_back(objects[std::countr_zero(bits)]);
            found.insert(canonical_shift(std::move(set), m));
            return;
        }
        const std::size_t pivot = std::countr_zero(p | x);
        for (std::uint64_t cand = p & ~adj[pivot]; cand; cand &= cand - 1) {
            const std::size_t v = std::countr_zero(cand);
            const std::uint64_t bit = std::uint64_t{1} << v;
            self(self, r | bit, p & adj[v], x & adj[v]);
            p &= ~bit;
            x |= bit;
        }
    };
    for (std::size_t a = 0; a < n; ++a) adj[a] &= usable;
    expand(expand, 0, usable, 0);

    for (const auto& set : found) out.sets.push_back(OrthogonalSet{set, end_dim(out.modules, set, m)});
    std::stable_sort(out.sets.begin(), out.sets.end(),
                     [](const OrthogonalSet& a, const OrthogonalSet& b) { return a.summands.size() < b.summands.size(); });
    return out;
}

}  // namespace periodk
