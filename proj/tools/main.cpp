#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "periodk/checks.hpp"
#include "periodk/derived.hpp"
#include "periodk/error.hpp"
#include "periodk/gorsky.hpp"
#include "periodk/grothendieck.hpp"
#include "periodk/io.hpp"

namespace {

using periodk::io::json;

constexpr int exit_error = 1;
constexpr int exit_contradiction = 2;

struct Output {
    json report;
    std::string summary;
    int code = 0;
};

periodk::AlgebraPtr load_algebra(const std::string& path) {
    return periodk::io::parse_algebra(periodk::io::load_file(path));
}

periodk::PeriodicComplex load_complex(const periodk::AlgebraPtr& alg, const std::string& path) {
    return periodk::io::parse_complex(periodk::io::load_file(path), alg);
}

std::string vec_text(const std::vector<long>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::string group_text(const periodk::GroupInvariants& g) {
    std::string s = "Z^" + std::to_string(g.free_rank);
    for (const auto& t : g.torsion) s += " + Z/" + t.get_str();
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Computations in periodic derived categories of quiver algebras"};
    app.require_subcommand(1);

    std::string algebra_path, complex_path, m_path, n_path, suite;
    std::size_t m = 0, count = 200, max_dim = 4, max_objects = 64, instances = 200;
    long degree = 0;
    std::uint64_t seed = 0, check_seed = 20240601;

    auto* coh = app.add_subcommand("cohomology", "cohomology dimension vectors of a complex");
    coh->add_option("--algebra", algebra_path)->required();
    coh->add_option("--complex", complex_path)->required();
    auto* coh_degree = coh->add_option("--degree", degree, "report the module H^i as well");

    auto* cls = app.add_subcommand("class", "class of a complex in the Grothendieck group");
    cls->add_option("--algebra", algebra_path)->required();
    cls->add_option("--complex", complex_path)->required();
    cls->add_option("--m", m)->required()->check(CLI::PositiveNumber);

    auto* k0 = app.add_subcommand("k0", "presented Grothendieck group from sampled relations");
    k0->add_option("--algebra", algebra_path)->required();
    k0->add_option("--m", m)->required()->check(CLI::PositiveNumber);
    k0->add_option("--count", count)->capture_default_str();
    k0->add_option("--max-dim", max_dim)->capture_default_str()->check(CLI::PositiveNumber);
    k0->add_option("--seed", seed)->required();

    auto* gor = app.add_subcommand("gorsky", "truncation witness for 2[V] = 0 (odd m)");
    gor->add_option("--algebra", algebra_path)->required();
    gor->add_option("--complex", complex_path)->required();

    auto* hom = app.add_subcommand("hom", "dim Hom(M, N[i]) in the periodic derived category");
    hom->add_option("--algebra", algebra_path)->required();
    hom->add_option("--M", m_path)->required();
    hom->add_option("--N", n_path)->required();
    hom->add_option("--degree", degree)->required();
    hom->add_option("--m", m)->required()->check(CLI::PositiveNumber);

    auto* tilt = app.add_subcommand("tilting-search", "maximal orthogonal sets over a type-A algebra");
    tilt->add_option("--algebra", algebra_path)->required();
    tilt->add_option("--m", m)->required()->check(CLI::PositiveNumber);
    tilt->add_option("--max-objects", max_objects)->capture_default_str();

    auto* chk = app.add_subcommand("check", "run a property battery");
    chk->add_option("--suite", suite)->required()->check(CLI::IsMember(periodk::suite_names()));
    chk->add_option("--seed", check_seed)->capture_default_str();
    chk->add_option("--instances", instances)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cout << periodk::io::error_json("Usage", e.what()).dump() << '\n';
        std::cerr << app.help();
        return exit_error;
    }

    Output out;
    try {
        if (*coh) {
            const auto alg = load_algebra(algebra_path);
            const auto v = load_complex(alg, complex_path);
            json dims = json::array();
            for (std::size_t i = 0; i < v.period(); ++i)
                dims.push_back(periodk::cohomology_dims(v, static_cast<long>(i)));
            out.report = json{{"m", v.period()}, {"dims", dims}};
            out.summary = "m = " + std::to_string(v.period());
            for (std::size_t i = 0; i < v.period(); ++i)
                out.summary += ", H^" + std::to_string(i) + " = " + vec_text(dims[i].get<std::vector<long>>());
            if (*coh_degree) {
                const auto h = periodk::cohomology(v, degree);
                out.report["degree"] = degree;
                out.report["module"] = periodk::io::to_json(h);
            }
        } else if (*cls) {
            const auto alg = load_algebra(algebra_path);
            const auto c = periodk::class_of(load_complex(alg, complex_path), m);
            out.report = periodk::io::to_json(c);
            out.summary = std::string(c.parity == periodk::Parity::Even ? "K0 class " : "K0 class mod 2 ") +
                          vec_text(c.vector);
        } else if (*k0) {
            const auto alg = load_algebra(algebra_path);
            const auto r = periodk::empirical_k0_report(alg, m, periodk::SamplerOptions{count, max_dim, seed});
            out.summary = group_text(r.group) + " from " + std::to_string(r.n_objects) + " objects and " +
                          std::to_string(r.n_relations) + " relations";
            if (r.certificate.ok) {
                out.report = periodk::io::to_json(r);
            } else {
                out.report = periodk::io::error_json("CertificateFailed", r.certificate.failure);
                out.report["report"] = periodk::io::to_json(r);
                out.summary += "; certificate failed: " + r.certificate.failure;
                out.code = exit_contradiction;
            }
        } else if (*gor) {
            const auto alg = load_algebra(algebra_path);
            const auto w = periodk::gorsky_witness(load_complex(alg, complex_path));
            const auto verdict = periodk::verify_witness(w);
            out.report = periodk::io::witness_summary(w, verdict);
            out.summary = "depth " + std::to_string(w.nodes.size()) + ", " +
                          (verdict.ok ? "verified" : "rejected: " + verdict.failure);
            if (!verdict.ok) out.code = exit_contradiction;
        } else if (*hom) {
            const auto alg = load_algebra(algebra_path);
            const auto mm = periodk::io::parse_representation(periodk::io::load_file(m_path), alg);
            const auto nn = periodk::io::parse_representation(periodk::io::load_file(n_path), alg);
            const std::size_t d = periodk::hom_dm_dim(mm, nn, degree, m);
            out.report = json{{"degree", degree}, {"m", m}, {"dim", d}};
            out.summary = "dim Hom(M, N[" + std::to_string(degree) + "]) = " + std::to_string(d);
        } else if (*tilt) {
            const auto alg = load_algebra(algebra_path);
            const auto s = periodk::orthogonal_sets(alg, m, max_objects);
            out.report = json{{"objects", s.objects}, {"sets", periodk::io::to_json(s)}};
            out.summary = std::to_string(s.objects) + " objects, " + std::to_string(s.sets.size()) + " maximal sets";
        } else if (*chk) {
            const auto r = periodk::run_suite(suite, check_seed, instances);
            json props = json::array();
            for (const auto& p : r.properties) {
                props.push_back(json{{"name", p.name},
                                     {"instances", p.instances},
                                     {"failures", p.failures},
                                     {"first_failure", p.failures ? json(p.first_failure) : json(nullptr)}});
                out.summary += p.name + ": " + std::to_string(p.instances - p.failures) + "/" +
                               std::to_string(p.instances) + "\n";
            }
            out.report = json{{"suite", r.suite}, {"seed", r.seed}, {"ok", r.ok()}, {"properties", props}};
            if (!r.ok()) out.code = exit_contradiction;
        }
    } catch (const periodk::Error& e) {
        const auto kind = std::string(periodk::to_string(e.kind()));
        out.report = periodk::io::error_json(kind, e.what());
        out.summary = kind + ": " + e.what();
        out.code = e.kind() == periodk::ErrorKind::CertificateFailed ? exit_contradiction : exit_error;
    } catch (const std::exception& e) {
        out.report = periodk::io::error_json("Internal", e.what());
        out.summary = e.what();
        out.code = exit_error;
    }

    std::cout << out.report.dump() << '\n';
    if (!out.summary.empty()) {
        std::cerr << out.summary;
        if (out.summary.back() != '\n') std::cerr << '\n';
    }
    return out.code;
}
