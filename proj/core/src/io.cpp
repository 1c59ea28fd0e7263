#include "periodk/io.hpp"

#include <fstream>

#include "periodk/error.hpp"

namespace periodk::io {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const json& member(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::size_t as_size(const json& j, const std::string& what) {
    if (!j.is_number_integer() || j.get<long long>() < 0) parse_error(what + " must be a non-negative integer");
    return j.get<std::size_t>();
}

Scalar parse_scalar(const json& j, const Field& f) {
    if (j.is_number_integer()) return f.from_int(j.get<long>());
    if (j.is_string()) {
        Scalar value;
        if (value.set_str(j.get<std::string>(), 10) != 0) parse_error("bad number '" + j.get<std::string>() + "'");
        if (sgn(value.get_den()) == 0) parse_error("zero denominator in '" + j.get<std::string>() + "'");
        value.canonicalize();
        if (!f.is_rational() && value.get_den() != 1) parse_error("fractions are not allowed over " + f.name());
        return f.normalize(value);
    }
    parse_error("matrix entries must be integers or strings");
}

}  // namespace

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) parse_error("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        parse_error(path + ": " + e.what());
    }
}

Field parse_field(const json& j) {
    if (j.is_string() && j.get<std::string>() == "Q") return Field::rationals();
    if (j.is_object() && j.contains("Fp")) {
        const std::size_t p = as_size(j.at("Fp"), "Fp");
        try {
            return Field::prime(static_cast<std::uint32_t>(p));
        } catch (const Error& e) {
            parse_error(e.what());
        }
    }
    parse_error("field must be \"Q\" or {\"Fp\": p}");
}

json to_json(const Field& f) {
    if (f.is_rational()) return "Q";
    return json{{"Fp", f.characteristic()}};
}

AlgebraPtr parse_algebra(const json& j) {
    const std::size_t n = as_size(member(j, "vertices"), "vertices");
    std::vector<Arrow> arrows;
    if (j.contains("arrows")) {
        if (!j.at("arrows").is_array()) parse_error("arrows must be an array");
        for (const auto& a : j.at("arrows")) {
            if (!a.is_array() || a.size() != 3 || !a[2].is_string()) parse_error("arrow must be [src, tgt, \"label\"]");
            const std::size_t s = as_size(a[0], "arrow source"), t = as_size(a[1], "arrow target");
            if (s == 0 || t == 0 || s > n || t > n) parse_error("arrow endpoints are 1-based vertex numbers");
            arrows.push_back(Arrow{s - 1, t - 1, a[2].get<std::string>()});
        }
    }
    const Field f = j.contains("field") ? parse_field(j.at("field")) : Field::rationals();
    Quiver q(n, std::move(arrows));
    std::vector<Path> relations;
    if (j.contains("relations")) {
        if (!j.at("relations").is_array()) parse_error("relations must be an array");
        QuiverAlgebra bare(q, f);
        for (const auto& r : j.at("relations")) {
            if (!r.is_array()) parse_error("relation must be an array of labels");
            std::vector<std::string> labels;
            for (const auto& l : r) {
                if (!l.is_string()) parse_error("relation entries must be arrow labels");
                labels.push_back(l.get<std::string>());
            }
            relations.push_back(bare.path_from_labels(labels));
        }
    }
    return std::make_shared<const QuiverAlgebra>(std::move(q), f, std::move(relations));
}

json to_json(const QuiverAlgebra& a) {
    json arrows = json::array();
    for (const auto& x : a.quiver().arrows()) arrows.push_back(json::array({x.source + 1, x.target + 1, x.label}));
    json relations = json::array();
    for (const auto& r : a.relations()) {
        json labels = json::array();
        for (auto k : r.word) labels.push_back(a.quiver().arrow(k).label);
        relations.push_back(std::move(labels));
    }
    return json{{"vertices", a.vertex_count()}, {"arrows", arrows}, {"relations", relations}, {"field", to_json(a.field())}};
}

Matrix parse_matrix(const json& j, const Field& f, std::size_t rows, std::size_t cols) {
    if (!j.is_array()) parse_error("matrix must be an array of rows");
    Matrix out(f, rows, cols);
    if (rows * cols == 0) {
        // [] or rows empty rows
        if (j.empty()) return out;
        if (j.size() != rows) parse_error("matrix has the wrong number of rows");
        for (const auto& r : j)
            if (!r.is_array() || r.size() != cols) parse_error("matrix row has the wrong length");
        return out;
    }
    if (j.size() != rows)
        parse_error("matrix has " + std::to_string(j.size()) + " rows, expected " + std::to_string(rows));
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols)
            parse_error("matrix row " + std::to_string(r) + " should have " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) out.set(r, c, parse_scalar(j[r][c], f));
    }
    return out;
}

json to_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (m.field().is_rational())
                row.push_back(m(r, c).get_str());
            else
                row.push_back(m(r, c).get_num().get_si());
        }
        out.push_back(std::move(row));
    }
    return out;
}

Representation parse_representation(const json& j, const AlgebraPtr& algebra) {
    const json& dj = member(j, "dims");
    if (!dj.is_array() || dj.size() != algebra->vertex_count()) parse_error("dims must list one entry per vertex");
    std::vector<std::size_t> dims;
    for (const auto& d : dj) dims.push_back(as_size(d, "dimension"));
    const json empty = json::object();
    const json& mj = j.contains("maps") ? j.at("maps") : empty;
    if (!mj.is_object()) parse_error("maps must be an object keyed by arrow label");
    for (const auto& [label, value] : mj.items())
        if (!algebra->quiver().arrow_index(label)) parse_error("unknown arrow label '" + label + "'");
    std::vector<Matrix> maps;
    for (const auto& a : algebra->quiver().arrows()) {
        const std::size_t rows = dims[a.target], cols = dims[a.source];
        if (mj.contains(a.label))
            maps.push_back(parse_matrix(mj.at(a.label), algebra->field(), rows, cols));
        else if (rows * cols == 0)
            maps.emplace_back(algebra->field(), rows, cols);
        else
            parse_error("missing map for arrow '" + a.label + "'");
    }
    return Representation(algebra, std::move(dims), std::move(maps));
}

json to_json(const Representation& r) {
    json maps = json::object();
    const Quiver& q = r.algebra()->quiver();
    for (std::size_t a = 0; a < q.arrows().size(); ++a) maps[q.arrow(a).label] = to_json(r.arrow_map(a));
    return json{{"dims", r.dims()}, {"maps", maps}};
}

ModuleMap parse_module_map(const json& j, const Representation& from, const Representation& to) {
    if (!j.is_array() || j.size() != from.vertex_count()) parse_error("module map must list one matrix per vertex");
    ModuleMap f;
    for (std::size_t v = 0; v < from.vertex_count(); ++v)
        f.components.push_back(parse_matrix(j[v], from.field(), to.dim(v), from.dim(v)));
    return f;
}

json to_json(const ModuleMap& f) {
    json out = json::array();
    for (const auto& x : f.components) out.push_back(to_json(x));
    return out;
}

PeriodicComplex parse_complex(const json& j, const AlgebraPtr& algebra) {
    const std::size_t m = as_size(member(j, "m"), "m");
    if (m == 0) parse_error("m must be at least 1");
    const json& cj = member(j, "components");
    const json& dj = member(j, "differentials");
    if (!cj.is_array() || cj.size() != m) parse_error("need m components");
    if (!dj.is_array() || dj.size() != m) parse_error("need m differentials");
    std::vector<Representation> comps;
    for (const auto& c : cj) comps.push_back(parse_representation(c, algebra));
    std::vector<ModuleMap> diffs;
    for (std::size_t i = 0; i < m; ++i) diffs.push_back(parse_module_map(dj[i], comps[i], comps[(i + 1) % m]));
    return make_complex(m, std::move(comps), std::move(diffs));
}

json to_json(const PeriodicComplex& v) {
    json comps = json::array(), diffs = json::array();
    for (const auto& c : v.components()) comps.push_back(to_json(c));
    for (const auto& d : v.differentials()) diffs.push_back(to_json(d));
    return json{{"m", v.period()}, {"components", comps}, {"differentials", diffs}};
}

json to_json(const GroupInvariants& g) {
    json torsion = json::array();
    for (const auto& t : g.torsion) torsion.push_back(t.fits_slong_p() ? json(t.get_si()) : json(t.get_str()));
    return json{{"free_rank", g.free_rank}, {"torsion", torsion}};
}

json to_json(const K0Class& c) {
    return json{{"parity", c.parity == Parity::Even ? "even" : "odd"}, {"vector", c.vector}};
}

json to_json(const K0Report& r) {
    json cert = r.certificate.ok ? json("ok") : json{{"failure", r.certificate.failure}};
    json out = to_json(r.group);
    out.update(json{{"n_objects", r.n_objects},
                    {"n_relations", r.n_relations},
                    {"n_cones", r.n_cones},
                    {"n_gorsky", r.n_gorsky},
                    {"n_two_torsion_checked", r.n_two_torsion_checked},
                    {"certificate", cert}});
    return out;
}

json witness_summary(const GorskyWitness& w, const WitnessCheck& check) {
    json nodes = json::array();
    for (const auto& n : w.nodes) {
        nodes.push_back(json{{"pivot", n.pivot},
                             {"support_v", n.v.support_size()},
                             {"support_w", n.w.support_size()},
                             {"cycles_dims", n.z.component(n.pivot).dims()},
                             {"quotient_dims", n.q.component(n.pivot).dims()}});
    }
    return json{{"m", w.root.period()},
                {"depth", w.nodes.size()},
                {"nodes", nodes},
                {"leaf_support", w.leaf.support_size()},
                {"verified", check.ok},
                {"failure", check.ok ? json(nullptr) : json(check.failure)}};
}

json to_json(const OrthogonalSearch& s) {
    json sets = json::array();
    for (const auto& t : s.sets) {
        json summands = json::array();
        for (const auto& x : t.summands) {
            const auto& mod = s.modules[x.interval];
            summands.push_back(json{{"interval", {mod.first_vertex + 1, mod.last_vertex + 1}}, {"degree", x.degree}});
        }
        sets.push_back(json{{"summands", summands}, {"size", t.summands.size()}, {"end_dim", t.end_dim}});
    }
    return sets;
}

json error_json(const std::string& kind, const std::string& message) {
    return json{{"error", kind}, {"message", message}};
}

}  // namespace periodk::io
