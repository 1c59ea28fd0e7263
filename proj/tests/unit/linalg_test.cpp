#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "periodk/matrix.hpp"
#include "periodk/rng.hpp"
#include "periodk/smith.hpp"

using namespace periodk;
using testing::kind_of;

namespace {

oracle::IntRows random_rows(Rng& rng, std::size_t r, std::size_t c, long lo, long hi) {
    oracle::IntRows a(r, std::vector<long>(c));
    for (auto& row : a)
        for (auto& x : row) x = rng.uniform(lo, hi);
    return a;
}

IntMatrix to_int(const oracle::IntRows& a) { return IntMatrix::from_rows(a); }

}  // namespace

TEST_CASE("prime field arithmetic") {
    const Field f = Field::prime(7);
    CHECK(f.add(f.from_int(5), f.from_int(4)) == 2);
    CHECK(f.from_int(-1) == 6);
    CHECK(f.mul(f.inv(f.from_int(3)), f.from_int(3)) == 1);
    CHECK(kind_of([] { Field::prime(9); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([&] { f.inv(f.zero()); }) == ErrorKind::InvalidArgument);
    CHECK(Field::rationals().div(Scalar(1), Scalar(3)) == Scalar(1, 3));
}

TEST_CASE("rref of a fixed matrix") {
    const Field f = Field::rationals();
    const Matrix m = Matrix::from_rows(f, {{1, 2, 3}, {2, 4, 7}, {1, 2, 4}});
    const RrefResult r = rref(m);
    CHECK(r.reduced == Matrix::from_rows(f, {{1, 2, 0}, {0, 0, 1}, {0, 0, 0}}));
    CHECK(r.pivots == std::vector<std::size_t>{0, 2});
    CHECK(r.transform * m == r.reduced);
    const Matrix k = kernel_basis(m);
    CHECK(k.cols() == 1);
    CHECK((m * k).is_zero());
}

TEST_CASE("rank over F_5 agrees with kernel counting") {
    Rng rng(101);
    for (int t = 0; t < 60; ++t) {
        const std::size_t r = static_cast<std::size_t>(rng.uniform(1, 4));
        const std::size_t c = static_cast<std::size_t>(rng.uniform(1, 5));
        const auto a = random_rows(rng, r, c, 0, 4);
        CHECK(rank(Matrix::from_rows(testing::f5(), a)) == oracle::rank_mod_p(a, 5));
    }
}

TEST_CASE("solve and inverse") {
    const Field f = Field::rationals();
    const Matrix a = Matrix::from_rows(f, {{2, 1}, {1, 1}});
    const auto inv = inverse(a);
    REQUIRE(inv);
    CHECK(*inv == Matrix::from_rows(f, {{1, -1}, {-1, 2}}));
    CHECK_FALSE(inverse(Matrix::from_rows(f, {{1, 2}, {2, 4}})));
    const Matrix b = Matrix::from_rows(f, {{3}, {2}});
    const auto x = solve(a, b);
    REQUIRE(x);
    CHECK(a * *x == b);
    CHECK_FALSE(solve(Matrix::from_rows(f, {{1, 1}, {1, 1}}), Matrix::from_rows(f, {{1}, {0}})));
}

TEST_CASE("column space basis picks pivot columns") {
    const Matrix m = Matrix::from_rows(testing::f5(), {{1, 2, 0}, {0, 0, 1}});
    CHECK(column_space_basis(m) == Matrix::from_rows(testing::f5(), {{1, 0}, {0, 1}}));
}

TEST_CASE("determinant agrees with the Leibniz expansion") {
    Rng rng(7);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
        const auto a = random_rows(rng, n, n, -5, 5);
        CHECK(determinant(to_int(a)) == mpz_class(static_cast<long>(oracle::det(a))));
    }
}

TEST_CASE("smith form of a fixed matrix") {
    const IntMatrix a = IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    const SmithForm s = smith_normal_form(a);
    CHECK(s.u * a * s.v == s.d);
    CHECK(diagonal(s.d) == std::vector<mpz_class>{2, 6, 12});
    const GroupInvariants g = cokernel_invariants(a);
    CHECK(g.free_rank == 0);
    CHECK(g.torsion == std::vector<mpz_class>{2, 6, 12});
}

TEST_CASE("cokernel invariants agree with determinantal divisors") {
    Rng rng(2024);
    for (int t = 0; t < 60; ++t) {
        const std::size_t r = static_cast<std::size_t>(rng.uniform(1, 4));
        const std::size_t c = static_cast<std::size_t>(rng.uniform(1, 4));
        const auto a = random_rows(rng, r, c, -6, 6);
        const auto [free, torsion] = oracle::cokernel(a);
        const GroupInvariants dense = cokernel_invariants(to_int(a));
        CHECK(dense.free_rank == free);
        std::vector<mpz_class> expected;
        for (auto x : torsion) expected.emplace_back(static_cast<long>(x));
        CHECK(dense.torsion == expected);

        SparseColumns sparse{r, std::vector<std::vector<std::pair<std::size_t, mpz_class>>>(c)};
        for (std::size_t j = 0; j < c; ++j)
            for (std::size_t i = 0; i < r; ++i)
                if (a[i][j] != 0) sparse.columns[j].emplace_back(i, a[i][j]);
        CHECK(cokernel_invariants(sparse) == dense);
    }
}

TEST_CASE("empty relation matrix gives a free group") {
    SparseColumns none{3, {}};
    CHECK(cokernel_invariants(none) == GroupInvariants{3, {}});
    CHECK(GroupInvariants{0, {2, 2}}.to_string().size() > 0);
}
