#include "periodk/grothendieck.hpp"

#include <algorithm>

#include "periodk/error.hpp"

namespace periodk {

bool K0Class::is_zero() const {
    return std::all_of(vector.begin(), vector.end(), [](long x) { return x == 0; });
}

K0Class class_of(const PeriodicComplex& v, std::size_t m) {
    if (v.period() != m)
        throw Error(ErrorKind::ShapeMismatch,
                    "complex has period " + std::to_string(v.period()) + ", asked for " + std::to_string(m));
    K0Class out{parity_of(m), std::vector<long>(v.algebra()->vertex_count(), 0)};
    for (std::size_t i = 0; i < m; ++i) {
        const auto h = cohomology_dims(v, static_cast<long>(i));
        const long sign = (out.parity == Parity::Even && i % 2 == 1) ? -1 : 1;
        for (std::size_t x = 0; x < h.size(); ++x) out.vector[x] += sign * h[x];
    }
    if (out.parity == Parity::Odd)
        for (auto& x : out.vector) x = ((x % 2) + 2) % 2;
    return out;
}

bool check_triangle_additivity(const ChainMap& f, std::size_t m) {
    Cone c = cone(f);
    K0Class a = class_of(f.source(), m), b = class_of(f.target(), m), z = class_of(c.complex, m);
    for (std::size_t x = 0; x < a.vector.size(); ++x) {
        long s = a.vector[x] - b.vector[x] + z.vector[x];
        if (a.parity == Parity::Odd) s %= 2;
        if (s != 0) return false;
    }
    return true;
}

std::string canonical_key(const PeriodicComplex& v) {
    std::string out = "m" + std::to_string(v.period());
    auto put_matrix = [&](const Matrix& x) {
        out += '[';
        for (std::size_t r = 0; r < x.rows(); ++r) {
            for (std::size_t c = 0; c < x.cols(); ++c) {
                out += x(r, c).get_str();
                out += ',';
            }
            out += ';';
        }
        out += ']';
    };
    for (std::size_t i = 0; i < v.period(); ++i) {
        const Representation& r = v.components()[i];
        out += "|c";
        for (auto d : r.dims()) out += std::to_string(d) + '.';
        for (const auto& a : r.arrow_maps()) put_matrix(a);
        out += "|d";
        for (const auto& x : v.differentials()[i].components) put_matrix(x);
    }
    return out;
}

// -- Presentation -------------------------------------------------------------

std::size_t Presentation::object(const PeriodicComplex& v) {
    std::string key = canonical_key(v);
    auto it = ids_.find(key);
    if (it != ids_.end()) return it->second;
    const std::size_t id = classes_.size();
    classes_.push_back(class_of(v, period_));
    ids_.emplace(std::move(key), id);
    return id;
}

bool Presentation::contains(const PeriodicComplex& v) const { return ids_.count(canonical_key(v)) != 0; }

std::size_t Presentation::relation(const std::vector<Term>& terms, std::string origin) {
    std::map<std::size_t, long> merged;
    for (const auto& [id, c] : terms) {
        if (id >= classes_.size()) throw Error(ErrorKind::InvalidArgument, "relation names an unknown object");
        merged[id] += c;
    }
    std::erase_if(merged, [](const auto& kv) { return kv.second == 0; });
    relations_.push_back(std::move(merged));
    origins_.push_back(std::move(origin));
    return relations_.size() - 1;
}

std::size_t Presentation::sequence(const PeriodicComplex& sub, const PeriodicComplex& middle,
                                   const PeriodicComplex& quotient, std::string origin) {
    const std::size_t a = object(sub), b = object(middle), c = object(quotient);
    return relation({{a, 1}, {b, -1}, {c, 1}}, std::move(origin));
}

K0Class Presentation::relation_class(std::size_t r) const {
    K0Class out{parity_of(period_), std::vector<long>(classes_.empty() ? 0 : classes_[0].vector.size(), 0)};
    for (const auto& [id, c] : relations_.at(r))
        for (std::size_t x = 0; x < out.vector.size(); ++x) out.vector[x] += c * classes_[id].vector[x];
    if (out.parity == Parity::Odd)
        for (auto& x : out.vector) x = ((x % 2) + 2) % 2;
    return out;
}

GroupInvariants Presentation::invariants() const { return invariants_modulo({}); }

GroupInvariants Presentation::invariants_modulo(const std::vector<std::size_t>& extra) const {
    SparseColumns a;
    a.rows = classes_.size();
    for (const auto& rel : relations_) {
        std::vector<std::pair<std::size_t, mpz_class>> col;
        for (const auto& [id, c] : rel) col.emplace_back(id, mpz_class(c));
        a.columns.push_back(std::move(col));
    }
    for (auto id : extra) a.columns.push_back({{id, mpz_class(1)}});
    return cokernel_invariants(a);
}

}  // namespace periodk
