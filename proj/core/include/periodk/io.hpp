#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "periodk/complex.hpp"
#include "periodk/derived.hpp"
#include "periodk/gorsky.hpp"
#include "periodk/grothendieck.hpp"

namespace periodk::io {

using nlohmann::json;

/// Parse failures and shape errors raise Error(Parse); semantic problems
/// (d^2 != 0, bad relations, ...) keep the kind thrown by the constructors.
json load_file(const std::string& path);

// Quiver file: {"vertices": n, "arrows": [[src, tgt, "label"], ...],
//               "relations": [["a", "b"], ...], "field": "Q" | {"Fp": p}}
// Vertices are 1-based in files. A relation ["a", "b"] is the path ab.
Field parse_field(const json& j);
json to_json(const Field& f);
AlgebraPtr parse_algebra(const json& j);
json to_json(const QuiverAlgebra& a);

/// Rationals as "a/b" strings (integers also accepted on input), F_p as integers.
Matrix parse_matrix(const json& j, const Field& f, std::size_t rows, std::size_t cols);
json to_json(const Matrix& m);

// Representation: {"dims": [...], "maps": {"label": matrix, ...}}
Representation parse_representation(const json& j, const AlgebraPtr& algebra);
json to_json(const Representation& r);

/// Array of per-vertex matrices.
ModuleMap parse_module_map(const json& j, const Representation& from, const Representation& to);
json to_json(const ModuleMap& f);

// Complex: {"m": m, "components": [...], "differentials": [...]}
PeriodicComplex parse_complex(const json& j, const AlgebraPtr& algebra);
json to_json(const PeriodicComplex& v);

json to_json(const GroupInvariants& g);
json to_json(const K0Class& c);
json to_json(const K0Report& r);
json witness_summary(const GorskyWitness& w, const WitnessCheck& check);
json to_json(const OrthogonalSearch& s);

json error_json(const std::string& kind, const std::string& message);

}  // namespace periodk::io
