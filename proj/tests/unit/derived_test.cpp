#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "oracles.hpp"
#include "periodk/derived.hpp"

using namespace periodk;
using testing::kind_of;

namespace {

/// 1 -> 2 <- 3
AlgebraPtr zigzag(Field f) {
    return std::make_shared<const QuiverAlgebra>(Quiver(3, {{0, 1, "x"}, {2, 1, "y"}}), f);
}

/// 1 -> 0 <- 2, 3 -> 0
AlgebraPtr star(Field f) {
    return std::make_shared<const QuiverAlgebra>(Quiver(4, {{1, 0, "x"}, {2, 0, "y"}, {3, 0, "z"}}), f);
}

}  // namespace

TEST_CASE("Hom in the periodic category between simples") {
    const auto a = linear_a(3, testing::q());
    CHECK(hom_dm_dim(simple(a, 1), simple(a, 0), 1, 2) == 1);
    CHECK(hom_dm_dim(simple(a, 1), simple(a, 0), 0, 2) == 0);
    CHECK(hom_dm_dim(simple(a, 1), simple(a, 0), 3, 2) == 1);
    CHECK(hom_dm_dim(simple(a, 1), simple(a, 0), 2, 3) == 0);
    CHECK(hom_dm_dim(simple(a, 1), simple(a, 1), -3, 3) == 1);
    CHECK(kind_of([&] { hom_dm_dim(simple(a, 0), simple(a, 0), 0, 1); }) == ErrorKind::PeriodOne);
    const auto r = linear_a(3, testing::q(), true);
    CHECK(kind_of([&] { hom_dm_dim(simple(r, 0), simple(r, 0), 0, 2); }) == ErrorKind::NotHereditary);
}

TEST_CASE("interval modules of A3 against the combinatorial formulas") {
    const auto a = linear_a(3, testing::f5());
    const auto mods = indecomposables_typeA(a);
    REQUIRE(mods.size() == 6);
    auto interval = [](const IntervalModule& x) {
        const int lo = static_cast<int>(std::min(x.first_vertex, x.last_vertex)) + 1;
        const int hi = static_cast<int>(std::max(x.first_vertex, x.last_vertex)) + 1;
        return oracle::Interval{lo, hi};
    };
    for (const auto& x : mods)
        for (const auto& y : mods) {
            const auto ix = interval(x), iy = interval(y);
            CHECK(static_cast<long>(hom_dim(x.module, y.module)) == oracle::hom(ix, iy));
            CHECK(static_cast<long>(ext1_dim(x.module, y.module)) == oracle::ext(3, ix, iy));
        }
}

TEST_CASE("type A detection") {
    CHECK(type_a_order(*zigzag(testing::q())).size() == 3);
    CHECK(indecomposables_typeA(zigzag(testing::q())).size() == 6);
    CHECK(kind_of([] { indecomposables_typeA(star(testing::q())); }) == ErrorKind::NotTypeA);
    CHECK(kind_of([] { indecomposables_typeA(linear_a(3, testing::q(), true)); }) == ErrorKind::NotTypeA);
}

TEST_CASE("orthogonal sets for A3, m = 2, match brute force") {
    const auto a = linear_a(3, testing::q());
    const OrthogonalSearch s = orthogonal_sets(a, 2);
    CHECK(s.objects == 12);
    const auto expected = oracle::orthogonal_sets(3, 2);
    REQUIRE(s.sets.size() == expected.size());
    CHECK(s.sets.size() == 9);

    auto as_oracle = [&](const OrthogonalSet& t) {
        std::vector<std::pair<int, int>> members;
        for (const auto& x : t.summands) {
            const auto& mod = s.modules[x.interval];
            const int lo = static_cast<int>(std::min(mod.first_vertex, mod.last_vertex)) + 1;
            const int hi = static_cast<int>(std::max(mod.first_vertex, mod.last_vertex)) + 1;
            const auto all = oracle::intervals(3);
            const auto it = std::find_if(all.begin(), all.end(), [&](auto& i) { return i.a == lo && i.b == hi; });
            members.emplace_back(static_cast<int>(it - all.begin()), static_cast<int>(x.degree));
        }
        std::sort(members.begin(), members.end());
        return members;
    };
    // both sides are canonical up to shift; compare as sets of (members, end_dim)
    std::vector<std::pair<std::vector<std::pair<int, int>>, long>> got, want;
    for (const auto& t : s.sets) {
        auto m = as_oracle(t);
        auto flipped = m;
        for (auto& [i, d] : flipped) d = (d + 1) % 2;
        std::sort(flipped.begin(), flipped.end());
        got.emplace_back(std::min(m, flipped), static_cast<long>(t.end_dim));
    }
    for (const auto& t : expected) want.emplace_back(t.members, t.end_dim);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);

    std::size_t threes = 0, fours = 0;
    for (const auto& t : s.sets) (t.summands.size() == 3 ? threes : fours) += 1;
    CHECK(threes == 8);
    CHECK(fours == 1);
}

TEST_CASE("orthogonal sets for A3, m = 3") {
    const auto a = linear_a(3, testing::f5());
    const OrthogonalSearch s = orthogonal_sets(a, 3);
    CHECK(s.objects == 18);
    const auto expected = oracle::orthogonal_sets(3, 3);
    CHECK(s.sets.size() == expected.size());
    CHECK(s.sets.size() == 12);
    for (const auto& t : s.sets) {
        CHECK(t.summands.size() == 3);
        CHECK(is_orthogonal(s.modules, t.summands, 3));
    }
}

TEST_CASE("orthogonal search limits") {
    CHECK(kind_of([] { orthogonal_sets(linear_a(3, testing::q()), 2, 10); }) == ErrorKind::SearchTooLarge);
    CHECK(kind_of([] { orthogonal_sets(linear_a(3, testing::q()), 1); }) == ErrorKind::PeriodOne);
}

TEST_CASE("decomposition check on random hereditary complexes") {
    for (const auto& a : {linear_a(3, testing::q()), zigzag(testing::f5())}) {
        Rng rng(64);
        for (int t = 0; t < 12; ++t) {
            const std::size_t m = static_cast<std::size_t>(rng.uniform(1, 4));
            const DecomposeReport r = decompose_check(random_complex(a, m, 2, rng), m);
            CHECK_MESSAGE(r.ok, r.failure);
        }
    }
    const auto rel = linear_a(3, testing::q(), true);
    CHECK(kind_of([&] { decompose_check(PeriodicComplex::zero(rel, 2), 2); }) == ErrorKind::NotHereditary);
}
