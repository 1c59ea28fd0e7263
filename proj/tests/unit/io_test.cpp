#include <doctest.h>

#include "helpers.hpp"
#include "periodk/io.hpp"

using namespace periodk;
using testing::kind_of;
using periodk::io::json;

namespace {

std::string data(const std::string& name) { return std::string(PERIODK_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("algebra files") {
    const auto a = io::parse_algebra(io::load_file(data("a3.json")));
    CHECK(a->vertex_count() == 3);
    CHECK(a->field() == Field::prime(5));
    CHECK(a->dimension() == 6);
    const auto r = io::parse_algebra(io::load_file(data("a3_rel.json")));
    CHECK(r->dimension() == 5);
    const auto again = io::parse_algebra(io::to_json(*r));
    CHECK(again->relations() == r->relations());
    CHECK(io::to_json(*again) == io::to_json(*r));
}

TEST_CASE("complex round trip over both fields") {
    for (const Field f : {testing::q(), testing::f5()}) {
        const auto a = linear_a(3, f);
        Rng rng(9);
        for (std::size_t m = 1; m <= 3; ++m) {
            const auto v = random_complex(a, m, 3, rng);
            const json j = io::to_json(v);
            CHECK(io::parse_complex(json::parse(j.dump()), a) == v);
        }
    }
}

TEST_CASE("rational entries") {
    const Matrix m = io::parse_matrix(json::parse(R"([["1/2", 3], ["-4/6", "0"]])"), testing::q(), 2, 2);
    CHECK(m(0, 0) == Scalar(1, 2));
    CHECK(m(1, 0) == Scalar(-2, 3));
    CHECK(io::to_json(m) == json::parse(R"([["1/2","3"],["-2/3","0"]])"));
    CHECK(kind_of([] { io::parse_matrix(json::parse(R"([["1/2"]])"), testing::f5(), 1, 1); }) == ErrorKind::Parse);
    CHECK(kind_of([] { io::parse_matrix(json::parse(R"([["x"]])"), testing::q(), 1, 1); }) == ErrorKind::Parse);
    CHECK(kind_of([] { io::parse_matrix(json::parse("[[1, 2]]"), testing::q(), 2, 2); }) == ErrorKind::Parse);
}

TEST_CASE("malformed inputs") {
    CHECK(kind_of([] { io::load_file(data("missing.json")); }) == ErrorKind::Parse);
    CHECK(kind_of([] { io::parse_algebra(json::parse(R"({"arrows": []})")); }) == ErrorKind::Parse);
    CHECK(kind_of([] { io::parse_algebra(json::parse(R"({"vertices": 2, "arrows": [[1, 3, "a"]]})")); }) ==
          ErrorKind::Parse);
    CHECK(kind_of([] { io::parse_field(json::parse(R"({"Fp": 6})")); }) == ErrorKind::Parse);
    CHECK(kind_of([] {
              io::parse_algebra(json::parse(R"({"vertices": 2, "arrows": [[1, 2, "a"], [2, 1, "b"]]})"));
          }) == ErrorKind::CyclicQuiver);
    const auto a = io::parse_algebra(io::load_file(data("a3.json")));
    CHECK(kind_of([&] { io::parse_representation(json::parse(R"({"dims": [1, 1]})"), a); }) == ErrorKind::Parse);
    CHECK(kind_of([&] {
              io::parse_representation(json::parse(R"({"dims": [1, 1, 0], "maps": {"zz": [[1]]}})"), a);
          }) == ErrorKind::Parse);
    // d^2 != 0 survives parsing and is caught by the constructor
    const json bad = json::parse(R"({"m": 2,
        "components": [{"dims": [1, 0, 0]}, {"dims": [1, 0, 0]}],
        "differentials": [[[[1]], [], []], [[[1]], [], []]]})");
    CHECK(kind_of([&] { io::parse_complex(bad, a); }) == ErrorKind::NotAComplex);
}

TEST_CASE("report serialisation") {
    CHECK(io::to_json(GroupInvariants{0, {2, 2, 2}}) == json::parse(R"({"free_rank":0,"torsion":[2,2,2]})"));
    CHECK(io::to_json(K0Class{Parity::Odd, {0, 1, 0}}) == json::parse(R"({"parity":"odd","vector":[0,1,0]})"));
    K0Report r;
    r.group = GroupInvariants{3, {}};
    r.certificate.ok = true;
    const json j = io::to_json(r);
    CHECK(j.at("free_rank") == 3);
    CHECK(j.at("certificate") == "ok");
    CHECK(io::error_json("Parse", "x") == json::parse(R"({"error":"Parse","message":"x"})"));
}

TEST_CASE("sample data files parse") {
    const auto a = io::parse_algebra(io::load_file(data("a3.json")));
    const auto v = io::parse_complex(io::load_file(data("complex_m3.json")), a);
    CHECK(v.period() == 3);
    CHECK(cohomology_dims(v, 1) == std::vector<long>{0, 1, 0});
    CHECK(io::parse_complex(io::load_file(data("zero_m2.json")), a).is_zero());
    CHECK(dim_vector(io::parse_representation(io::load_file(data("p2.json")), a)) == std::vector<long>{1, 1, 0});
}
