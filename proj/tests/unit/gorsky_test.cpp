#include <doctest.h>

#include "helpers.hpp"
#include "periodk/gorsky.hpp"

using namespace periodk;
using testing::kind_of;

TEST_CASE("witness for a two-term complex") {
    const auto a = linear_a(3, testing::f5());
    const Field f = a->field();
    const auto p1 = projective(a, 0), p2 = projective(a, 1);
    const auto zero = Representation::zero(a);
    const ModuleMap in{{Matrix::from_rows(f, {{1}}), Matrix(f, 1, 0), Matrix(f, 0, 0)}};
    const PeriodicComplex v({p1, p2, zero}, {in, zero_map(p2, zero), zero_map(zero, p1)});
    const GorskyWitness w = gorsky_witness(v);
    REQUIRE(w.nodes.size() == 1);
    CHECK(w.nodes[0].pivot == 0);
    CHECK(w.nodes[0].z.is_zero());
    CHECK(dim_vector(w.nodes[0].q.component(0)) == std::vector<long>{1, 0, 0});
    CHECK(w.leaf == PeriodicComplex::stalk(p2, 1, 3));
    CHECK(verify_witness(w).ok);
}

TEST_CASE("even periods have no witness") {
    const auto a = linear_a(3, testing::q());
    CHECK(kind_of([&] { gorsky_witness(random_complex(a, 2, 2, 1)); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("random witnesses verify and damaged ones do not") {
    for (const Field f : {testing::q(), testing::f5()}) {
        const auto a = linear_a(3, f);
        Rng rng(21);
        for (int t = 0; t < 15; ++t) {
            const std::size_t m = (t % 2 == 0) ? 3 : 1;
            const auto v = random_complex(a, m, 3, rng);
            const GorskyWitness w = gorsky_witness(v);
            CHECK(w.nodes.size() <= m);
            CHECK(is_leaf(w.leaf));
            CHECK(shift(w.leaf, static_cast<long>(m)) == w.leaf);
            const WitnessCheck c = verify_witness(w);
            CHECK_MESSAGE(c.ok, c.failure);
            if (w.nodes.empty()) continue;
            CHECK_FALSE(verify_witness(mutate_witness(w, rng)).ok);
        }
    }
}

TEST_CASE("exactness checker names the failure") {
    const auto a = linear_a(3, testing::q());
    const auto s = PeriodicComplex::stalk(simple(a, 0), 0, 1);
    const auto z = PeriodicComplex::zero(a, 1);
    const ShortExactSequence ok{z, s, s, {zero_map(z.component(0), s.component(0))}, {identity_map(s.component(0))}};
    CHECK(check_exact(ok).empty());
    ShortExactSequence bad = ok;
    bad.projection = {zero_map(s.component(0), s.component(0))};
    CHECK_FALSE(check_exact(bad).empty());
}
