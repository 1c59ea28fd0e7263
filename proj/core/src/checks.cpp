#include "periodk/checks.hpp"

#include <algorithm>
#include <functional>

#include "periodk/derived.hpp"
#include "periodk/error.hpp"
#include "periodk/gorsky.hpp"
#include "periodk/grothendieck.hpp"
#include "periodk/smith.hpp"

namespace periodk {

bool SuiteReport::ok() const {
    return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.failures == 0; });
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"linalg", "complex", "k0", "gorsky", "hereditary"};
    return names;
}

namespace {

using Check = std::function<std::string(Rng&, std::size_t)>;

class Runner {
public:
    Runner(SuiteReport& report, std::uint64_t seed, std::size_t instances)
        : report_(report), rng_(seed), instances_(instances) {}

    void property(const std::string& name, const Check& check) {
        PropertyResult r{name, instances_, 0, {}};
        Rng local = rng_.split();
        for (std::size_t k = 0; k < r.instances; ++k) {
            std::string why;
            try {
                why = check(local, k);
            } catch (const std::exception& e) {
                why = std::string("exception: ") + e.what();
            }
            if (!why.empty()) {
                if (r.failures == 0) r.first_failure = "instance " + std::to_string(k) + ": " + why;
                ++r.failures;
            }
        }
        report_.properties.push_back(std::move(r));
    }

private:
    SuiteReport& report_;
    Rng rng_;
    std::size_t instances_;
};

Field field_for(std::size_t k) { return k % 2 == 0 ? Field::prime(5) : Field::rationals(); }

Matrix random_matrix(Rng& rng, const Field& f, std::size_t rows, std::size_t cols) {
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng.scalar(f));
    return m;
}

IntMatrix random_int_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rng.chance(2, 3)) m(r, c) = rng.uniform(-9, 9);
    return m;
}

/// Hereditary and non-hereditary test algebras, cycled by instance index.
AlgebraPtr algebra_for(std::size_t k, bool hereditary_only) {
    const Field f = field_for(k);
    switch (k % (hereditary_only ? 3 : 4)) {
        case 0: return linear_a(3, f);
        case 1: {
            Quiver q(3, {Arrow{0, 1, "a"}, Arrow{2, 1, "b"}});
            return std::make_shared<const QuiverAlgebra>(std::move(q), f);
        }
        case 2: {
            Quiver q(4, {Arrow{0, 3, "a"}, Arrow{1, 3, "b"}, Arrow{2, 3, "c"}});
            return std::make_shared<const QuiverAlgebra>(std::move(q), f);
        }
        default: return linear_a(3, f, true);
    }
}

std::string class_text(const K0Class& c) {
    std::string out;
    for (auto x : c.vector) out += std::to_string(x) + " ";
    return out;
}

// -- linalg -------------------------------------------------------------------

void linalg_suite(Runner& run) {
    run.property("rref: T M = R with R reduced", [](Rng& rng, std::size_t k) -> std::string {
        const Field f = field_for(k);
        Matrix m = random_matrix(rng, f, rng.uniform(0, 6), rng.uniform(0, 6));
        RrefResult r = rref(m);
        if (!(r.transform * m == r.reduced)) return "T M != R";
        if (rank(r.transform) != m.rows()) return "T singular";
        for (std::size_t i = 0; i < r.pivots.size(); ++i) {
            if (i > 0 && r.pivots[i] <= r.pivots[i - 1]) return "pivots not increasing";
            for (std::size_t row = 0; row < m.rows(); ++row)
                if (!(r.reduced(row, r.pivots[i]) == Scalar(row == i ? 1 : 0))) return "pivot column not a unit vector";
        }
        for (std::size_t row = r.pivots.size(); row < m.rows(); ++row)
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (sgn(r.reduced(row, c)) != 0) return "nonzero row below the pivots";
        return {};
    });
    run.property("kernel: M K = 0, rank + nullity = cols", [](Rng& rng, std::size_t k) -> std::string {
        const Field f = field_for(k);
        Matrix m = random_matrix(rng, f, rng.uniform(0, 6), rng.uniform(0, 7));
        Matrix ker = kernel_basis(m);
        if (!(m * ker).is_zero()) return "M K != 0";
        if (rank(m) + ker.cols() != m.cols()) return "rank + nullity != cols";
        if (rank(ker) != ker.cols()) return "kernel basis dependent";
        return {};
    });
    run.property("solve: A X = B for B in the image", [](Rng& rng, std::size_t k) -> std::string {
        const Field f = field_for(k);
        const std::size_t n = rng.uniform(1, 6);
        Matrix a = random_matrix(rng, f, rng.uniform(1, 6), n);
        Matrix b = a * random_matrix(rng, f, n, rng.uniform(1, 3));
        auto x = solve(a, b);
        if (!x || !(a * *x == b)) return "no valid solution";
        return {};
    });
    run.property("inverse: M M^-1 = I", [](Rng& rng, std::size_t k) -> std::string {
        const Field f = field_for(k);
        const std::size_t n = rng.uniform(1, 6);
        Matrix m = random_matrix(rng, f, n, n);
        auto inv = inverse(m);
        if (rank(m) < n) return inv ? "singular matrix inverted" : "";
        if (!inv || !(m * *inv == Matrix::identity(f, n)) || !(*inv * m == Matrix::identity(f, n))) return "bad inverse";
        return {};
    });
    run.property("Smith form: U A V = D, unimodular, divisibility", [](Rng& rng, std::size_t) -> std::string {
        IntMatrix a = random_int_matrix(rng, rng.uniform(1, 5), rng.uniform(1, 5));
        SmithForm s = smith_normal_form(a);
        if (!(s.u * a * s.v == s.d)) return "U A V != D";
        if (abs(determinant(s.u)) != 1 || abs(determinant(s.v)) != 1) return "transform not unimodular";
        auto diag = diagonal(s.d);
        for (std::size_t r = 0; r < s.d.rows(); ++r)
            for (std::size_t c = 0; c < s.d.cols(); ++c)
                if (r != c && sgn(s.d(r, c)) != 0) return "D not diagonal";
        for (std::size_t i = 0; i < diag.size(); ++i) {
            if (sgn(diag[i]) < 0) return "negative invariant factor";
            if (i + 1 < diag.size() && sgn(diag[i]) != 0 && diag[i + 1] % diag[i] != 0) return "divisibility fails";
            if (i + 1 < diag.size() && sgn(diag[i]) == 0 && sgn(diag[i + 1]) != 0) return "zero before nonzero";
        }
        return {};
    });
    run.property("cokernel: sparse and dense agree", [](Rng& rng, std::size_t) -> std::string {
        IntMatrix a = random_int_matrix(rng, rng.uniform(1, 7), rng.uniform(0, 7));
        SparseColumns s;
        s.rows = a.rows();
        s.columns.resize(a.cols());
        for (std::size_t c = 0; c < a.cols(); ++c)
            for (std::size_t r = 0; r < a.rows(); ++r)
                if (sgn(a(r, c)) != 0) s.columns[c].emplace_back(r, a(r, c));
        GroupInvariants dense = cokernel_invariants(a), sparse = cokernel_invariants(s);
        if (!(dense == sparse)) return dense.to_string() + " vs " + sparse.to_string();
        return {};
    });
}

// -- complex ------------------------------------------------------------------

std::size_t period_for(Rng& rng) { return static_cast<std::size_t>(rng.uniform(1, 4)); }

void complex_suite(Runner& run) {
    run.property("d^2 = 0 for random complexes", [](Rng& rng, std::size_t k) -> std::string {
        const std::size_t m = period_for(rng);
        PeriodicComplex v = random_complex(algebra_for(k, false), m, 3, rng);
        for (std::size_t i = 0; i < m; ++i) {
            const long li = static_cast<long>(i);
            if (!compose(v.differential(li + 1), v.differential(li)).is_zero()) return "d d != 0 at " + std::to_string(i);
        }
        return {};
    });
    run.property("shift: V[1][-1] = V, V[m] carries (-1)^m", [](Rng& rng, std::size_t k) -> std::string {
        const std::size_t m = period_for(rng);
        PeriodicComplex v = random_complex(algebra_for(k, false), m, 3, rng);
        if (!(shift(shift(v, 1), -1) == v)) return "shift does not invert";
        PeriodicComplex full = shift(v, static_cast<long>(m));
        for (std::size_t i = 0; i < m; ++i) {
            const ModuleMap expect = (m % 2 == 0) ? v.differentials()[i] : -v.differentials()[i];
            if (!(full.components()[i] == v.components()[i]) || !(full.differentials()[i] == expect))
                return "V[m] differs from the signed V";
        }
        return {};
    });
    run.property("cone: d^2 = 0, chain maps, projection after inclusion zero", [](Rng& rng, std::size_t k) -> std::string {
        const std::size_t m = period_for(rng);
        AlgebraPtr alg = algebra_for(k, false);
        PeriodicComplex v = random_complex(alg, m, 3, rng), w = random_complex(alg, m, 3, rng);
        Cone c = cone(random_chain_map(v, w, rng));
        const ChainMap composite = compose(c.projection, c.inclusion);
        for (const auto& x : composite.components())
            if (!x.is_zero()) return "projection after inclusion is nonzero";
        return {};
    });
    run.property("homotopy invariance of H", [](Rng& rng, std::size_t k) -> std::string {
        const std::size_t m = period_for(rng);
        AlgebraPtr alg = algebra_for(k, false);
        PeriodicComplex v = random_complex(alg, m, 3, rng), w = random_complex(alg, m, 3, rng);
        ChainMap f = random_chain_map(v, w, rng);
        std::vector<ModuleMap> moved = homotopy_boundary(random_homotopy(v, w, rng), v, w);
        for (std::size_t i = 0; i < m; ++i) moved[i] = moved[i] + f.components()[i];
        ChainMap g(v, w, std::move(moved));
        auto h = homotopic(f, g);
        if (!h || !verify_homotopy(*h, f, g)) return "homotopy not recovered";
        for (std::size_t i = 0; i < m; ++i)
            if (!(induced_map(f, static_cast<long>(i)) == induced_map(g, static_cast<long>(i))))
                return "induced maps differ in degree " + std::to_string(i);
        return {};
    });
    run.property("cover commutes with cohomology", [](Rng& rng, std::size_t k) -> std::string {
        AlgebraPtr alg = algebra_for(k, false);
        PeriodicComplex src = random_complex(alg, period_for(rng), 3, rng);
        const long lo = rng.uniform(-3, 0), hi = lo + rng.uniform(0, 5);
        BoundedComplex b = unroll(src, lo, hi);
        const std::size_t m = period_for(rng);
        PeriodicComplex c = cover(b, m);
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<long> expect(alg->vertex_count(), 0);
            for (long j = lo; j <= hi; ++j)
                if (wrap(j, m) == i) {
                    auto d = b.cohomology_dims(j);
                    for (std::size_t x = 0; x < d.size(); ++x) expect[x] += d[x];
                }
            if (cohomology_dims(c, static_cast<long>(i)) != expect) return "dims differ in degree " + std::to_string(i);
        }
        return {};
    });
    run.property("cohomology: realized H has dims ker - im", [](Rng& rng, std::size_t k) -> std::string {
        const std::size_t m = period_for(rng);
        PeriodicComplex v = random_complex(algebra_for(k, false), m, 3, rng);
        for (std::size_t i = 0; i < m; ++i)
            if (dim_vector(cohomology(v, static_cast<long>(i))) != cohomology_dims(v, static_cast<long>(i)))
                return "dims differ in degree " + std::to_string(i);
        return {};
    });
}

// -- k0 -----------------------------------------------------------------------

void k0_suite(Runner& run) {
    run.property("triangle additivity", [](Rng& rng, std::size_t k) -> std::string {
        const std::size_t m = period_for(rng);
        AlgebraPtr alg = algebra_for(k, false);
        PeriodicComplex v = random_complex(alg, m, 3, rng), w = random_complex(alg, m, 3, rng);
        return check_triangle_additivity(random_chain_map(v, w, rng), m) ? "" : "class(V) - class(W) + class(C) != 0";
    });
    run.property("quasi-isomorphism class invariance", [](Rng& rng, std::size_t k) -> std::string {
        const std::size_t m = period_for(rng);
        AlgebraPtr alg = algebra_for(k, false);
        Representation mod = random_representation(alg, 3, rng);
        ProjectiveResolution res = projective_resolution(mod);
        ChainMap aug = augmentation_map(res, mod, m);
        if (!is_quasi_iso(aug)) return "augmentation is not a quasi-isomorphism";
        if (!(class_of(aug.source(), m) == class_of(aug.target(), m))) return "classes differ";
        return {};
    });
    run.property("shift anti-symmetry of classes", [](Rng& rng, std::size_t k) -> std::string {
        const std::size_t m = period_for(rng);
        PeriodicComplex v = random_complex(algebra_for(k, false), m, 3, rng);
        K0Class a = class_of(v, m), b = class_of(shift(v, 1), m);
        if (m % 2 == 1) return a == b ? "" : "odd shift changed the class";
        for (auto& x : a.vector) x = -x;
        return a == b ? "" : "even shift is not the negative: " + class_text(b);
    });
    run.property("contractible cone has zero class", [](Rng& rng, std::size_t k) -> std::string {
        const std::size_t m = period_for(rng);
        PeriodicComplex v = random_complex(algebra_for(k, false), m, 3, rng);
        return class_of(cone(ChainMap::identity(v)).complex, m).is_zero() ? "" : "nonzero class";
    });
    run.property("certificate on small presentations", [](Rng& rng, std::size_t k) -> std::string {
        const std::size_t m = 1 + k % 4;
        AlgebraPtr alg = algebra_for(k / 4, false);
        K0Report r = empirical_k0_report(alg, m, SamplerOptions{10, 3, rng.next()});
        return r.certificate.ok ? "" : r.certificate.failure;
    });
}

// -- gorsky -------------------------------------------------------------------

PeriodicComplex odd_complex(Rng& rng, std::size_t k) {
    const std::size_t m = (k % 4 == 3) ? 1 : 3;
    return random_complex(algebra_for(k, false), m, 3, rng);
}

void gorsky_suite(Runner& run) {
    run.property("witness verifies with depth <= m", [](Rng& rng, std::size_t k) -> std::string {
        PeriodicComplex v = odd_complex(rng, k);
        GorskyWitness w = gorsky_witness(v);
        if (w.nodes.size() > v.period()) return "depth " + std::to_string(w.nodes.size());
        WitnessCheck c = verify_witness(w);
        return c.ok ? "" : c.failure;
    });
    run.property("damaged witness is rejected", [](Rng& rng, std::size_t k) -> std::string {
        for (int attempt = 0; attempt < 50; ++attempt) {
            GorskyWitness w = gorsky_witness(odd_complex(rng, k));
            if (w.nodes.empty()) continue;
            return verify_witness(mutate_witness(w, rng)).ok ? "mutation accepted" : "";
        }
        return "no witness with a node";
    });
    run.property("leaf is fixed by the m-fold shift", [](Rng& rng, std::size_t k) -> std::string {
        GorskyWitness w = gorsky_witness(odd_complex(rng, k));
        return shift(w.leaf, static_cast<long>(w.leaf.period())) == w.leaf ? "" : "leaf moved";
    });
}

// -- hereditary ---------------------------------------------------------------

void hereditary_suite(Runner& run) {
    run.property("Euler identity hom - ext = <d, e>", [](Rng& rng, std::size_t k) -> std::string {
        AlgebraPtr alg = algebra_for(k, true);
        Representation m = random_representation(alg, 3, rng), n = random_representation(alg, 3, rng);
        const long lhs = static_cast<long>(hom_dim(m, n)) - static_cast<long>(ext1_dim(m, n));
        const long rhs = euler_form(*alg, dim_vector(m), dim_vector(n));
        return lhs == rhs ? "" : std::to_string(lhs) + " vs " + std::to_string(rhs);
    });
    run.property("covering Hom formula against chain maps", [](Rng& rng, std::size_t k) -> std::string {
        AlgebraPtr alg = algebra_for(k, true);
        const std::size_t m = 2 + k % 2;
        Representation a = random_representation(alg, 2, rng), b = random_representation(alg, 2, rng);
        PeriodicComplex p = cover(projective_resolution(a).complex, m);
        PeriodicComplex s = PeriodicComplex::stalk(b, 0, m);
        for (std::size_t j = 0; j < m; ++j) {
            const long lj = static_cast<long>(j);
            const std::size_t formula = hom_dm_dim(a, b, lj, m);
            const std::size_t direct = homotopy_hom_dim(p, shift(s, lj));
            if (formula != direct)
                return "degree " + std::to_string(j) + ": " + std::to_string(formula) + " vs " + std::to_string(direct);
        }
        return {};
    });
    run.property("decomposition into cohomology stalks", [](Rng& rng, std::size_t k) -> std::string {
        const std::size_t m = period_for(rng);
        DecomposeReport r = decompose_check(random_complex(algebra_for(k, true), m, 3, rng), m);
        return r.ok ? "" : r.failure;
    });
    run.property("projective resolutions have length <= 1", [](Rng& rng, std::size_t k) -> std::string {
        Representation mod = random_representation(algebra_for(k, true), 3, rng);
        ProjectiveResolution res = projective_resolution(mod);
        if (res.complex.lo() < -1) return "length " + std::to_string(-res.complex.lo());
        return is_quasi_iso(augmentation_map(res, mod, 2)) ? "" : "augmentation is not a quasi-isomorphism";
    });
}

}  // namespace

SuiteReport run_suite(const std::string& suite, std::uint64_t seed, std::size_t instances) {
    SuiteReport report{suite, seed, {}};
    Runner run(report, seed, instances);
    if (suite == "linalg")
        linalg_suite(run);
    else if (suite == "complex")
        complex_suite(run);
    else if (suite == "k0")
        k0_suite(run);
    else if (suite == "gorsky")
        gorsky_suite(run);
    else if (suite == "hereditary")
        hereditary_suite(run);
    else
        throw Error(ErrorKind::InvalidArgument, "unknown suite '" + suite + "'");
    return report;
}

}  // namespace periodk
