#include <doctest.h>

#include "helpers.hpp"
#include "periodk/grothendieck.hpp"

using namespace periodk;
using testing::kind_of;

TEST_CASE("class of stalks and the zero complex") {
    const auto a = linear_a(3, testing::q());
    CHECK(class_of(PeriodicComplex::zero(a, 2), 2).is_zero());
    CHECK(class_of(PeriodicComplex::stalk(projective(a, 2), 0, 2), 2).vector == std::vector<long>{1, 1, 1});
    CHECK(class_of(PeriodicComplex::stalk(projective(a, 2), 1, 2), 2).vector == std::vector<long>{-1, -1, -1});
    const K0Class odd = class_of(PeriodicComplex::stalk(projective(a, 1), 2, 3), 3);
    CHECK(odd.parity == Parity::Odd);
    CHECK(odd.vector == std::vector<long>{1, 1, 0});
    CHECK(kind_of([&] { class_of(PeriodicComplex::zero(a, 2), 3); }) == ErrorKind::ShapeMismatch);
}

TEST_CASE("class is the alternating sum of cohomology") {
    const auto a = linear_a(3, testing::f5());
    Rng rng(8);
    for (int t = 0; t < 20; ++t) {
        const std::size_t m = static_cast<std::size_t>(rng.uniform(1, 4));
        const auto v = random_complex(a, m, 3, rng);
        std::vector<long> sum(3, 0);
        for (std::size_t i = 0; i < m; ++i) {
            const auto h = cohomology_dims(v, static_cast<long>(i));
            for (std::size_t x = 0; x < 3; ++x) sum[x] += (m % 2 == 0 && i % 2 == 1) ? -h[x] : h[x];
        }
        if (m % 2 == 1)
            for (auto& x : sum) x = ((x % 2) + 2) % 2;
        CHECK(class_of(v, m).vector == sum);
        CHECK(class_of(shift(v, 1), m).vector ==
              (m % 2 == 0 ? std::vector<long>{-sum[0], -sum[1], -sum[2]} : sum));
    }
}

TEST_CASE("triangle additivity on random maps") {
    for (const Field f : {testing::q(), testing::f5()}) {
        const auto a = linear_a(3, f);
        Rng rng(12);
        for (std::size_t m = 1; m <= 4; ++m)
            for (int t = 0; t < 5; ++t) {
                const auto v = random_complex(a, m, 3, rng), w = random_complex(a, m, 3, rng);
                CHECK(check_triangle_additivity(random_chain_map(v, w, rng), m));
            }
    }
}

TEST_CASE("presentation bookkeeping") {
    const auto a = testing::one_vertex(testing::q());
    Presentation p(2);
    const auto s0 = PeriodicComplex::stalk(simple(a, 0), 0, 2);
    const auto s1 = PeriodicComplex::stalk(simple(a, 0), 1, 2);
    const std::size_t x = p.object(s0), y = p.object(s1);
    CHECK(p.object(s0) == x);
    CHECK(p.contains(s1));
    CHECK(p.invariants() == GroupInvariants{2, {}});
    p.relation({{x, 1}, {y, 1}}, "rotation");
    CHECK(p.invariants() == GroupInvariants{1, {}});
    CHECK(p.relation_class(0).is_zero());
    CHECK(p.invariants_modulo({x}) == GroupInvariants{});
    p.relation({{x, 1}, {x, 1}}, "doubling");
    CHECK(p.relation_terms(1).at(x) == 2);
    CHECK(p.invariants() == GroupInvariants{0, {2}});
}

TEST_CASE("one vertex: Z for even periods, F_2 for odd") {
    const auto a = testing::one_vertex(testing::f5());
    const K0Report even = empirical_k0(a, 2, SamplerOptions{40, 3, 1});
    CHECK(even.group == GroupInvariants{1, {}});
    CHECK(even.certificate.ok);
    const K0Report odd = empirical_k0(a, 1, SamplerOptions{40, 3, 1});
    CHECK(odd.group == GroupInvariants{0, {2}});
    CHECK(odd.n_two_torsion_checked > 0);
}

TEST_CASE("small runs over A3 and the relation algebra") {
    for (bool rel : {false, true}) {
        const auto a = linear_a(3, testing::f5(), rel);
        for (std::size_t m = 1; m <= 4; ++m) {
            const K0Report r = empirical_k0(a, m, SamplerOptions{30, 3, 5});
            if (m % 2 == 0) {
                CHECK(r.group == GroupInvariants{3, {}});
                CHECK(r.n_gorsky == 0);
            } else {
                CHECK(r.group == GroupInvariants{0, {2, 2, 2}});
                CHECK(r.n_gorsky > 0);
            }
            CHECK(r.n_cones == 30);
        }
    }
}

TEST_CASE("empirical_k0 is deterministic") {
    const auto a = linear_a(3, testing::q());
    const K0Report x = empirical_k0(a, 3, SamplerOptions{20, 3, 77});
    const K0Report y = empirical_k0(a, 3, SamplerOptions{20, 3, 77});
    CHECK(x.n_objects == y.n_objects);
    CHECK(x.n_relations == y.n_relations);
    CHECK(kind_of([&] { empirical_k0(a, 0, SamplerOptions{}); }) == ErrorKind::InvalidArgument);
}
