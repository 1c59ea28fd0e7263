#include <set>

#include "periodk/error.hpp"
#include "periodk/gorsky.hpp"
#include "periodk/grothendieck.hpp"

namespace periodk {

namespace {

bool zero_differential(const PeriodicComplex& v) {
    for (const auto& d : v.differentials())
        if (!d.is_zero()) return false;
    return true;
}

std::string class_text(const K0Class& c) {
    std::string out = "(";
    for (std::size_t x = 0; x < c.vector.size(); ++x) out += (x ? "," : "") + std::to_string(c.vector[x]);
    return out + ")";
}

/// Builds the presentation: every object handed to add_family gets its
/// rotation orbit, its truncation sequences down to stalks and, for stalks,
/// a composition series down to simple stalks.
class Sampler {
public:
    Sampler(AlgebraPtr algebra, std::size_t m)
        : alg_(std::move(algebra)), m_(m), odd_(m % 2 == 1), pres_(m), zero_complex_(PeriodicComplex::zero(alg_, m)) {
        zero_ = pres_.object(zero_complex_);
        zero_relation_ = pres_.relation({{zero_, 1}}, "zero object");
    }

    Presentation& presentation() { return pres_; }
    std::size_t gorsky_relations() const { return gorsky_; }
    std::size_t torsion_checked() const { return torsion_checked_; }
    const std::string& torsion_failure() const { return torsion_failure_; }

    void add_family(const PeriodicComplex& x) {
        if (!families_.insert(canonical_key(x)).second) return;

        // rotation triangles X -> 0 -> SX -> SX along the whole orbit
        const std::size_t length = (odd_ && !zero_differential(x)) ? 2 * m_ : m_;
        std::vector<std::size_t> rotations;
        PeriodicComplex cur = x;
        for (std::size_t k = 0; k < length; ++k) {
            PeriodicComplex next = shift(cur, 1);
            const std::size_t a = pres_.object(cur), b = pres_.object(next);
            rotations.push_back(pres_.relation({{a, 1}, {zero_, -1}, {b, 1}}, "rotation"));
            cur = std::move(next);
        }

        TruncationChain chain = truncation_chain(x, odd_);
        std::vector<std::pair<std::size_t, long>> combination;
        for (const auto& node : chain.nodes) {
            combination.emplace_back(pres_.sequence(node.uvq.sub, node.uvq.middle, node.uvq.quotient, "truncation"), -1);
            combination.emplace_back(pres_.sequence(node.zuw.sub, node.zuw.middle, node.zuw.quotient, "truncation"), -1);
            for (const auto& t : node.twisted) {
                combination.emplace_back(pres_.sequence(t.sub, t.middle, t.quotient, "gorsky"), 1);
                ++gorsky_;
            }
            decompose_stalk(node.q);
            decompose_stalk(node.z);
        }
        decompose_stalk(chain.leaf);

        if (odd_) {
            // [X] - [S^m X], the relation the witness encodes
            pres_.relation({{pres_.object(x), 1}, {pres_.object(shift(x, static_cast<long>(m_))), -1}}, "gorsky");
            ++gorsky_;
            check_two_torsion(x, rotations, std::move(combination));
        }
    }

    void decompose_stalk(const PeriodicComplex& s) {
        if (s.is_zero()) return;
        if (!stalks_.insert(canonical_key(s)).second) return;
        long p = 0;
        while (s.component(p).is_zero()) ++p;
        const Representation& top = s.component(p);
        CompositionSeries series = composition_series(top);
        const std::size_t length = series.factors.size();
        if (length <= 1) return;
        std::size_t below = zero_;
        for (std::size_t k = 1; k <= length; ++k) {
            const Representation f_k = (k == length) ? top : subrepresentation(top, series.filtration[k]).object;
            const std::size_t here = pres_.object(PeriodicComplex::stalk(f_k, p, m_));
            const std::size_t factor = pres_.object(PeriodicComplex::stalk(simple(alg_, series.factors[k - 1]), p, m_));
            pres_.relation({{below, 1}, {here, -1}, {factor, 1}}, "composition");
            below = here;
        }
    }

    std::size_t zero_relation() const { return zero_relation_; }

private:
    /// Odd m: the rotation triangles, [0] = 0 and the truncation/twisted
    /// sequences must combine to exactly 2 e_X; the classes of X and SX agree mod 2.
    void check_two_torsion(const PeriodicComplex& x, const std::vector<std::size_t>& rotations,
                           std::vector<std::pair<std::size_t, long>> combination) {
        for (std::size_t k = 0; k < m_; ++k) combination.emplace_back(rotations[k], (k % 2 == 0) ? 1 : -1);
        combination.emplace_back(zero_relation_, 1);
        std::map<std::size_t, long> sum;
        for (const auto& [r, c] : combination)
            for (const auto& [id, e] : pres_.relation_terms(r)) sum[id] += c * e;
        std::erase_if(sum, [](const auto& kv) { return kv.second == 0; });
        const std::size_t id = pres_.object(x);
        const bool combines = sum == std::map<std::size_t, long>{{id, 2}};
        const bool classes = class_of(shift(x, 1), m_) == pres_.object_class(id);
        if (combines && classes) {
            ++torsion_checked_;
        } else if (torsion_failure_.empty()) {
            torsion_failure_ = "object " + std::to_string(id) +
                               (combines ? ": class of the shift differs" : ": relations do not combine to 2[X]");
        }
    }

    AlgebraPtr alg_;
    std::size_t m_;
    bool odd_;
    Presentation pres_;
    PeriodicComplex zero_complex_;
    std::size_t zero_ = 0;
    std::size_t zero_relation_ = 0;
    std::set<std::string> families_;
    std::set<std::string> stalks_;
    std::size_t gorsky_ = 0;
    std::size_t torsion_checked_ = 0;
    std::string torsion_failure_;
};

Certificate certify(Presentation& pres, const AlgebraPtr& alg, std::size_t m, const GroupInvariants& group,
                    const std::string& torsion_failure) {
    const std::size_t n = alg->vertex_count();
    for (std::size_t r = 0; r < pres.relation_count(); ++r) {
        K0Class c = pres.relation_class(r);
        if (!c.is_zero())
            return {false, "relation " + std::to_string(r) + " (" + pres.relation_origin(r) + ") maps to " +
                               class_text(c)};
    }
    GroupInvariants expected;
    if (m % 2 == 0)
        expected.free_rank = n;
    else
        expected.torsion.assign(n, mpz_class(2));
    if (!(group == expected))
        return {false, "presented group " + group.to_string() + " differs from the class-map target " +
                           expected.to_string()};
    std::vector<std::size_t> simples;
    for (std::size_t v = 0; v < n; ++v) simples.push_back(pres.object(PeriodicComplex::stalk(simple(alg, v), 0, m)));
    GroupInvariants rest = pres.invariants_modulo(simples);
    if (!(rest == GroupInvariants{}))
        return {false, "simple stalks do not generate: quotient by them is " + rest.to_string()};
    if (!torsion_failure.empty()) return {false, "two-torsion check failed at " + torsion_failure};
    return {true, {}};
}

}  // namespace

K0Report empirical_k0_report(const AlgebraPtr& algebra, std::size_t m, const SamplerOptions& options) {
    if (m == 0) throw Error(ErrorKind::InvalidArgument, "period must be at least 1");
    Sampler sampler(algebra, m);
    const long lm = static_cast<long>(m);
    for (std::size_t v = 0; v < algebra->vertex_count(); ++v)
        for (long p = 0; p < lm; ++p) {
            sampler.add_family(PeriodicComplex::stalk(simple(algebra, v), p, m));
            sampler.add_family(PeriodicComplex::stalk(projective(algebra, v), p, m));
        }

    Presentation& pres = sampler.presentation();
    Rng rng(options.seed);
    std::vector<PeriodicComplex> pool;
    std::size_t cones = 0;
    for (std::size_t t = 0; t < options.count; ++t) {
        PeriodicComplex v = random_complex(algebra, m, options.max_dim, rng);
        sampler.add_family(v);
        pool.push_back(v);

        std::size_t pick = pool.size();
        if (pool.size() > 1 && rng.chance(1, 2)) pick = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(pool.size()) - 1));
        if (pick == pool.size()) {
            pool.push_back(random_complex(algebra, m, options.max_dim, rng));
            sampler.add_family(pool.back());
            pick = pool.size() - 1;
        }
        const PeriodicComplex w = pool[pick];

        ChainMap f = random_chain_map(v, w, rng);
        Cone c = cone(f);
        pres.sequence(v, w, c.complex, "cone");  // e_V - e_W + e_C
        ++cones;
        if (t % 4 == 0) pres.sequence(v, direct_sum(v, w), w, "split");
    }

    K0Report report;
    report.group = pres.invariants();
    report.n_objects = pres.object_count();
    report.n_relations = pres.relation_count();
    report.n_cones = cones;
    report.n_gorsky = sampler.gorsky_relations();
    report.n_two_torsion_checked = sampler.torsion_checked();
    report.certificate = certify(pres, algebra, m, report.group, sampler.torsion_failure());
    return report;
}

K0Report empirical_k0(const AlgebraPtr& algebra, std::size_t m, const SamplerOptions& options) {
    K0Report report = empirical_k0_report(algebra, m, options);
    if (!report.certificate.ok) throw Error(ErrorKind::CertificateFailed, report.certificate.failure);
    return report;
}

}  // namespace periodk
