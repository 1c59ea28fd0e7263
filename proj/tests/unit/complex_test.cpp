#include <doctest.h>

#include "helpers.hpp"
#include "periodk/complex.hpp"

using namespace periodk;
using testing::kind_of;

namespace {

/// P1 -> P2 -> S2 in degrees 0, 1, 2: exact, m = 3.
PeriodicComplex exact_three(const AlgebraPtr& a) {
    const Field f = a->field();
    const auto p1 = projective(a, 0), p2 = projective(a, 1), s2 = simple(a, 1);
    const ModuleMap in{{Matrix::from_rows(f, {{1}}), Matrix(f, 1, 0), Matrix(f, 0, 0)}};
    const ModuleMap out{{Matrix(f, 0, 1), Matrix::from_rows(f, {{1}}), Matrix(f, 0, 0)}};
    return PeriodicComplex({p1, p2, s2}, {in, out, zero_map(s2, p1)});
}

}  // namespace

TEST_CASE("d squared must vanish") {
    const auto a = linear_a(3, testing::q());
    const auto p1 = projective(a, 0);
    const ModuleMap id = identity_map(p1);
    CHECK(kind_of([&] { PeriodicComplex({p1, p1}, {id, id}); }) == ErrorKind::NotAComplex);
    CHECK(kind_of([&] { make_complex(3, {p1, p1}, {id, zero_map(p1, p1)}); }) == ErrorKind::ShapeMismatch);
    try {
        PeriodicComplex({p1, p1}, {id, id});
    } catch (const NotAComplexError& e) {
        CHECK(e.degree() < 2);
    }
}

TEST_CASE("cohomology of an exact complex and of a stalk") {
    const auto a = linear_a(3, testing::f5());
    const auto v = exact_three(a);
    for (long i = 0; i < 3; ++i) CHECK(cohomology_dims(v, i) == std::vector<long>{0, 0, 0});
    const auto s = PeriodicComplex::stalk(projective(a, 2), 1, 2);
    CHECK(cohomology_dims(s, 1) == std::vector<long>{1, 1, 1});
    CHECK(cohomology(s, 0).is_zero());
    CHECK(s.support_size() == 1);
}

TEST_CASE("shift moves degrees and signs") {
    const auto a = linear_a(3, testing::q());
    const auto v = exact_three(a);
    const auto w = shift(v, 1);
    CHECK(w.component(0) == v.component(1));
    CHECK(w.differential(0) == -v.differential(1));
    CHECK(shift(v, 3) == shift(shift(v, 1), 2));
    CHECK(shift(shift(v, 1), -1) == v);
}

TEST_CASE("cone of the identity is contractible") {
    const auto a = linear_a(3, testing::q());
    Rng rng(3);
    for (std::size_t m = 1; m <= 4; ++m) {
        const auto v = random_complex(a, m, 2, rng);
        const Cone c = cone(ChainMap::identity(v));
        for (long i = 0; i < static_cast<long>(m); ++i) CHECK(cohomology_dims(c.complex, i) == std::vector<long>{0, 0, 0});
        const auto id = ChainMap::identity(c.complex);
        CHECK(homotopic(id, ChainMap::zero(c.complex, c.complex)).has_value());
    }
}

TEST_CASE("homotopic maps are recognised and witnessed") {
    const auto a = linear_a(3, testing::f5());
    Rng rng(17);
    for (int t = 0; t < 10; ++t) {
        const std::size_t m = static_cast<std::size_t>(rng.uniform(1, 3));
        const auto v = random_complex(a, m, 2, rng), w = random_complex(a, m, 2, rng);
        const ChainMap f = random_chain_map(v, w, rng);
        const Homotopy s = random_homotopy(v, w, rng);
        const ChainMap g = f + ChainMap(v, w, homotopy_boundary(s, v, w));
        const auto h = homotopic(f, g);
        REQUIRE(h);
        CHECK(verify_homotopy(*h, f, g));
        for (long i = 0; i < static_cast<long>(m); ++i) CHECK(induced_map(f, i) == induced_map(g, i));
    }
}

TEST_CASE("non-chain maps are rejected") {
    const auto a = linear_a(3, testing::q());
    const auto v = exact_three(a);
    std::vector<ModuleMap> f = ChainMap::identity(v).components();
    f[0] = zero_map(v.component(0), v.component(0));
    CHECK(kind_of([&] { ChainMap(v, v, f); }) == ErrorKind::NotAChainMap);
}

TEST_CASE("covering the unrolled window") {
    const auto a = linear_a(3, testing::q());
    const auto v = PeriodicComplex::stalk(simple(a, 0), 0, 2);
    const BoundedComplex b = unroll(v, 0, 3);
    CHECK(b.lo() == 0);
    CHECK(b.hi() == 3);
    CHECK(b.cohomology_dims(2) == std::vector<long>{1, 0, 0});
    CHECK(b.cohomology_dims(1) == std::vector<long>{0, 0, 0});
}

TEST_CASE("projective resolution of the simple at the source") {
    const auto a = linear_a(3, testing::q());
    const auto s3 = simple(a, 2);
    const auto res = projective_resolution(s3);
    CHECK(res.complex.lo() == -1);
    CHECK(res.complex.hi() == 0);
    CHECK(dim_vector(res.complex.component(-1)) == std::vector<long>{1, 1, 0});
    for (std::size_t m = 1; m <= 3; ++m) CHECK(is_quasi_iso(augmentation_map(res, s3, m)));
    const auto p = cover(res.complex, 2);
    CHECK(cohomology_dims(p, 0) == std::vector<long>{0, 0, 1});
    CHECK(cohomology_dims(p, 1) == std::vector<long>{0, 0, 0});
}

TEST_CASE("homotopy Hom between projective stalks") {
    const auto a = linear_a(3, testing::q());
    const auto p1 = PeriodicComplex::stalk(projective(a, 0), 0, 2);
    const auto p3 = PeriodicComplex::stalk(projective(a, 2), 0, 2);
    CHECK(homotopy_hom_dim(p1, p3) == 1);
    CHECK(homotopy_hom_dim(p3, p1) == 0);
    CHECK(homotopy_hom_dim(p1, shift(p3, 1)) == 0);
}

TEST_CASE("random complexes are deterministic in the seed") {
    const auto a = linear_a(3, testing::f5());
    CHECK(random_complex(a, 3, 3, 99) == random_complex(a, 3, 3, 99));
    const auto one = random_complex(a, 1, 3, 4);
    CHECK(one.period() == 1);
}
