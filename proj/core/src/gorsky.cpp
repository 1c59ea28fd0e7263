#include "periodk/gorsky.hpp"

#include <map>

#include "periodk/error.hpp"
#include "periodk/grothendieck.hpp"

namespace periodk {

namespace {

std::string dims_text(std::size_t degree, std::size_t vertex) {
    return "degree " + std::to_string(degree) + ", vertex " + std::to_string(vertex + 1);
}

ShortExactSequence twist(const ShortExactSequence& s, long k) {
    // (f[k])^i = f^{i+k}; for k a multiple of m the component list is unchanged
    const std::size_t m = s.middle.period();
    auto rotate = [&](const std::vector<ModuleMap>& f) {
        std::vector<ModuleMap> out;
        for (std::size_t i = 0; i < m; ++i) out.push_back(f[wrap(static_cast<long>(i) + k, m)]);
        return out;
    };
    return ShortExactSequence{shift(s.sub, k), shift(s.middle, k), shift(s.quotient, k), rotate(s.inclusion),
                              rotate(s.projection)};
}

}  // namespace

std::string check_exact(const ShortExactSequence& s) {
    const std::size_t m = s.middle.period();
    if (s.sub.period() != m || s.quotient.period() != m) return "periods differ";
    if (!is_chain_map(s.inclusion, s.sub, s.middle)) return "inclusion is not a chain map";
    if (!is_chain_map(s.projection, s.middle, s.quotient)) return "projection is not a chain map";
    for (std::size_t i = 0; i < m; ++i) {
        const long li = static_cast<long>(i);
        for (std::size_t x = 0; x < s.middle.algebra()->vertex_count(); ++x) {
            const Matrix& a = s.inclusion[i][x];
            const Matrix& b = s.projection[i][x];
            if (rank(a) != a.cols()) return "inclusion not injective at " + dims_text(i, x);
            if (rank(b) != b.rows()) return "projection not surjective at " + dims_text(i, x);
            if (!(b * a).is_zero()) return "projection after inclusion is nonzero at " + dims_text(i, x);
            if (s.middle.component(li).dim(x) != s.sub.component(li).dim(x) + s.quotient.component(li).dim(x))
                return "dimensions do not add up at " + dims_text(i, x);
        }
    }
    return {};
}

bool is_leaf(const PeriodicComplex& v) {
    if (v.support_size() > 1) return false;
    for (const auto& d : v.differentials())
        if (!d.is_zero()) return false;
    return true;
}

TruncationNode truncation_node(const PeriodicComplex& v, bool with_twists) {
    if (is_leaf(v)) throw Error(ErrorKind::InvalidArgument, "cannot split a leaf");
    const std::size_t m = v.period();
    const AlgebraPtr& alg = v.algebra();
    const Representation zero_rep = Representation::zero(alg);

    long p = 0;
    while (v.component(p).is_zero()) ++p;
    const std::size_t ip = static_cast<std::size_t>(p);

    Subobject cycles = kernel(v.differential(p), v.component(p), v.component(p + 1));
    Quotient top = quotient(v.component(p), cycles.inclusion.components);

    // U
    std::vector<Representation> u_comps = v.components();
    std::vector<ModuleMap> u_diffs = v.differentials();
    u_comps[ip] = cycles.object;
    if (m == 1) {
        u_diffs[0] = zero_map(cycles.object, cycles.object);
    } else {
        u_diffs[ip] = zero_map(cycles.object, u_comps[wrap(p + 1, m)]);
        const std::size_t before = wrap(p - 1, m);
        ModuleMap core;
        for (std::size_t x = 0; x < alg->vertex_count(); ++x) {
            auto c = solve(cycles.inclusion[x], v.differential(p - 1)[x]);
            if (!c) throw Error(ErrorKind::NotAComplex, "boundaries are not cycles");
            core.components.push_back(std::move(*c));
        }
        u_diffs[before] = std::move(core);
    }
    PeriodicComplex u(std::move(u_comps), std::move(u_diffs));

    // W
    std::vector<Representation> w_comps = v.components();
    std::vector<ModuleMap> w_diffs = v.differentials();
    w_comps[ip] = zero_rep;
    for (std::size_t i = 0; i < m; ++i)
        if (i == ip || wrap(static_cast<long>(i) + 1, m) == ip) w_diffs[i] = zero_map(w_comps[i], w_comps[(i + 1) % m]);
    PeriodicComplex w(std::move(w_comps), std::move(w_diffs));

    PeriodicComplex q = PeriodicComplex::stalk(top.object, p, m);
    PeriodicComplex z = PeriodicComplex::stalk(cycles.object, p, m);

    std::vector<ModuleMap> u_to_v, v_to_q, z_to_u, u_to_w;
    for (std::size_t i = 0; i < m; ++i) {
        const long li = static_cast<long>(i);
        if (i == ip) {
            u_to_v.push_back(cycles.inclusion);
            v_to_q.push_back(top.projection);
            z_to_u.push_back(identity_map(cycles.object));
            u_to_w.push_back(zero_map(cycles.object, zero_rep));
        } else {
            u_to_v.push_back(identity_map(v.component(li)));
            v_to_q.push_back(zero_map(v.component(li), zero_rep));
            z_to_u.push_back(zero_map(zero_rep, u.component(li)));
            u_to_w.push_back(identity_map(v.component(li)));
        }
    }

    TruncationNode node{p, v, u, w, q, z,
                        ShortExactSequence{u, v, q, std::move(u_to_v), std::move(v_to_q)},
                        ShortExactSequence{z, u, w, std::move(z_to_u), std::move(u_to_w)},
                        {}};
    if (with_twists) {
        const long lm = static_cast<long>(m);
        node.twisted.push_back(twist(node.uvq, lm));
        node.twisted.push_back(twist(node.zuw, lm));
    }
    return node;
}

TruncationChain truncation_chain(const PeriodicComplex& v, bool with_twists) {
    TruncationChain chain{v, {}, v};
    // each step removes one nonzero component
    for (std::size_t guard = 0; !is_leaf(chain.leaf); ++guard) {
        if (guard > v.period()) throw Error(ErrorKind::InvalidArgument, "truncation did not terminate");
        chain.nodes.push_back(truncation_node(chain.leaf, with_twists));
        chain.leaf = chain.nodes.back().w;
    }
    return chain;
}

GorskyWitness gorsky_witness(const PeriodicComplex& v) {
    if (v.period() % 2 == 0) throw Error(ErrorKind::InvalidArgument, "witness needs an odd period");
    return truncation_chain(v, true);
}

WitnessCheck verify_witness(const GorskyWitness& w) {
    auto fail = [](std::string why) { return WitnessCheck{false, std::move(why)}; };
    const std::size_t m = w.root.period();
    if (m % 2 == 0) return fail("period is even");
    const long lm = static_cast<long>(m);

    std::map<std::string, long> combo;
    auto add_sequence = [&](const ShortExactSequence& s, long sign) {
        combo[canonical_key(s.sub)] += sign;
        combo[canonical_key(s.middle)] -= sign;
        combo[canonical_key(s.quotient)] += sign;
    };

    const PeriodicComplex* current = &w.root;
    for (std::size_t k = 0; k < w.nodes.size(); ++k) {
        const TruncationNode& n = w.nodes[k];
        const std::string at = "node " + std::to_string(k) + ": ";
        if (!(n.v == *current)) return fail(at + "object differs from the previous remainder");
        if (!(n.uvq.sub == n.u && n.uvq.middle == n.v && n.uvq.quotient == n.q))
            return fail(at + "objects of 0 -> U -> V -> Q -> 0 do not match");
        if (!(n.zuw.sub == n.z && n.zuw.middle == n.u && n.zuw.quotient == n.w))
            return fail(at + "objects of 0 -> Z -> U -> W -> 0 do not match");
        if (n.twisted.size() != 2) return fail(at + "twisted sequences missing");
        const ShortExactSequence& t0 = n.twisted[0];
        const ShortExactSequence& t1 = n.twisted[1];
        if (!(t0.sub == shift(n.u, lm) && t0.middle == shift(n.v, lm) && t0.quotient == shift(n.q, lm)))
            return fail(at + "objects of the twisted U -> V -> Q do not match");
        if (!(t1.sub == shift(n.z, lm) && t1.middle == shift(n.u, lm) && t1.quotient == shift(n.w, lm)))
            return fail(at + "objects of the twisted Z -> U -> W do not match");
        for (const auto* s : {&n.uvq, &n.zuw, &t0, &t1}) {
            std::string why = check_exact(*s);
            if (!why.empty()) return fail(at + why);
        }
        if (n.w.support_size() >= n.v.support_size()) return fail(at + "support did not shrink");
        add_sequence(t0, 1);
        add_sequence(t1, 1);
        add_sequence(n.uvq, -1);
        add_sequence(n.zuw, -1);
        current = &n.w;
    }
    if (!(w.leaf == *current)) return fail("leaf differs from the last remainder");
    if (!is_leaf(w.leaf)) return fail("leaf has a nonzero differential or several components");

    // alternating sum of the rotation triangles X -> 0 -> SX -> SX along the orbit
    const std::string zero_key = canonical_key(PeriodicComplex::zero(w.root.algebra(), m));
    PeriodicComplex x = w.root;
    for (std::size_t k = 0; k < m; ++k) {
        PeriodicComplex next = shift(x, 1);
        const long sign = (k % 2 == 0) ? 1 : -1;
        combo[canonical_key(x)] += sign;
        combo[zero_key] -= sign;
        combo[canonical_key(next)] += sign;
        x = std::move(next);
    }
    combo[zero_key] += 1;  // [0] = 0

    std::map<std::string, long> expected{{canonical_key(w.root), 2}};
    std::erase_if(combo, [](const auto& kv) { return kv.second == 0; });
    if (combo != expected) return fail("relations do not combine to 2[V]");
    return {};
}

GorskyWitness mutate_witness(const GorskyWitness& w, Rng& rng) {
    struct Site {
        std::size_t node, seq, degree, vertex;
        bool inclusion;
    };
    auto sequences = [](TruncationNode& n) {
        std::vector<ShortExactSequence*> out{&n.uvq, &n.zuw};
        for (auto& t : n.twisted) out.push_back(&t);
        return out;
    };
    GorskyWitness out = w;
    std::vector<Site> sites;
    for (std::size_t k = 0; k < out.nodes.size(); ++k) {
        auto seqs = sequences(out.nodes[k]);
        for (std::size_t s = 0; s < seqs.size(); ++s)
            for (std::size_t i = 0; i < seqs[s]->inclusion.size(); ++i)
                for (std::size_t x = 0; x < seqs[s]->inclusion[i].components.size(); ++x) {
                    if (seqs[s]->inclusion[i][x].cols() > 0) sites.push_back(Site{k, s, i, x, true});
                    if (seqs[s]->projection[i][x].rows() > 0) sites.push_back(Site{k, s, i, x, false});
                }
    }
    if (sites.empty()) throw Error(ErrorKind::InvalidArgument, "witness has no map to damage");
    const Site& site = sites[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(sites.size()) - 1))];
    ShortExactSequence& seq = *sequences(out.nodes[site.node])[site.seq];
    if (site.inclusion) {
        Matrix& a = seq.inclusion[site.degree].components[site.vertex];
        const std::size_t c = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(a.cols()) - 1));
        a.set_block(0, c, Matrix(a.field(), a.rows(), 1));
    } else {
        Matrix& b = seq.projection[site.degree].components[site.vertex];
        const std::size_t r = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(b.rows()) - 1));
        b.set_block(r, 0, Matrix(b.field(), 1, b.cols()));
    }
    return out;
}

}  // namespace periodk
