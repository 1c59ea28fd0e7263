#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "periodk/representation.hpp"

using namespace periodk;
using testing::kind_of;

TEST_CASE("path basis of A3 with and without the relation") {
    const auto a = linear_a(3, testing::q());
    CHECK(a->dimension() == 6);
    CHECK(a->is_hereditary());
    const auto r = linear_a(3, testing::q(), true);
    CHECK(r->dimension() == 5);
    CHECK(r->is_zero_path({0, 1}));
    CHECK_FALSE(r->is_hereditary());
    std::size_t long_paths = 0;
    for (const auto& p : a->path_basis()) long_paths += p.length() == 2;
    CHECK(long_paths == 1);
}

TEST_CASE("quiver validation") {
    CHECK(kind_of([] { Quiver(2, {{0, 1, "x"}, {1, 0, "y"}}); }) == ErrorKind::CyclicQuiver);
    CHECK(kind_of([] { Quiver(2, {{0, 1, "x"}, {0, 1, "x"}}); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { Quiver(1, {{0, 3, "x"}}); }) == ErrorKind::InvalidArgument);
    const Quiver q(3, {{1, 0, "a1"}, {2, 1, "a2"}});
    CHECK(kind_of([&] { QuiverAlgebra(q, testing::q(), {Path{1, 0, {0}}}); }) == ErrorKind::InadmissibleRelation);
    const QuiverAlgebra bare(q, testing::q());
    const Path backwards = bare.path_from_labels({"a2", "a1"});
    CHECK(kind_of([&] { QuiverAlgebra(q, testing::q(), {backwards}); }) == ErrorKind::InadmissibleRelation);
    CHECK(kind_of([&] { bare.path_from_labels({"zz"}); }) == ErrorKind::InadmissibleRelation);
}

TEST_CASE("Hom between indecomposable projectives of A3") {
    const auto a = linear_a(3, testing::f5());
    // row i, column j: dim Hom(P_i, P_j) = paths from j to i
    const std::vector<std::vector<std::size_t>> frozen{{1, 1, 1}, {0, 1, 1}, {0, 0, 1}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            const std::size_t h = hom_dim(projective(a, i), projective(a, j));
            CHECK(h == frozen[i][j]);
            CHECK(static_cast<long>(h) == oracle::paths(3, static_cast<int>(j + 1), static_cast<int>(i + 1)));
        }
}

TEST_CASE("projectives and simples of A3") {
    const auto a = linear_a(3, testing::q());
    CHECK(dim_vector(projective(a, 0)) == std::vector<long>{1, 0, 0});
    CHECK(dim_vector(projective(a, 2)) == std::vector<long>{1, 1, 1});
    CHECK(dim_vector(simple(a, 1)) == std::vector<long>{0, 1, 0});
    const auto r = linear_a(3, testing::q(), true);
    CHECK(dim_vector(projective(r, 2)) == std::vector<long>{0, 1, 1});
    CHECK(ext1_dim(simple(a, 1), simple(a, 0)) == 1);
    CHECK(ext1_dim(simple(a, 0), simple(a, 1)) == 0);
}

TEST_CASE("relations are enforced on representations") {
    const auto r = linear_a(3, testing::q(), true);
    const Field f = testing::q();
    CHECK(kind_of([&] {
              Representation(r, {1, 1, 1}, {Matrix::from_rows(f, {{1}}), Matrix::from_rows(f, {{1}})});
          }) == ErrorKind::InvalidRepresentation);
    CHECK(kind_of([&] { Representation(r, {1, 1}, {}); }) == ErrorKind::InvalidRepresentation);
}

TEST_CASE("Euler identity on random modules") {
    for (const Field f : {testing::q(), testing::f5()}) {
        const auto a = linear_a(3, f);
        Rng rng(31);
        for (int t = 0; t < 25; ++t) {
            const auto m = random_representation(a, 2, rng);
            const auto n = random_representation(a, 2, rng);
            CHECK(static_cast<long>(hom_dim(m, n)) - static_cast<long>(ext1_dim(m, n)) ==
                  euler_form(*a, dim_vector(m), dim_vector(n)));
        }
    }
}

TEST_CASE("projective cover and syzygy") {
    const auto a = linear_a(3, testing::f5());
    const auto s3 = simple(a, 2);
    const ProjectiveCover pc = projective_cover(s3);
    CHECK(dim_vector(pc.cover) == std::vector<long>{1, 1, 1});
    CHECK(is_surjective(pc.epi, s3));
    CHECK(dim_vector(syzygy(s3).object) == std::vector<long>{1, 1, 0});
}

TEST_CASE("composition series of a random module") {
    const auto a = linear_a(3, testing::q(), true);
    Rng rng(5);
    for (int t = 0; t < 10; ++t) {
        const auto m = random_representation(a, 3, rng);
        const auto series = composition_series(m);
        CHECK(series.factors.size() == m.total_dim());
        CHECK(verify_composition_series(m, series));
    }
}
