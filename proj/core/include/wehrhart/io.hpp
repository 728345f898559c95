#pragma once

#include <filesystem>
#include <memory>
#include <string>

#include <nlohmann/json.hpp>

#include "wehrhart/character_sum.hpp"
#include "wehrhart/ehrhart.hpp"
#include "wehrhart/face_lattice.hpp"
#include "wehrhart/homog_poly.hpp"
#include "wehrhart/laurent_poly.hpp"
#include "wehrhart/polytope.hpp"
#include "wehrhart/stanley.hpp"
#include "wehrhart/verify.hpp"
#include "wehrhart/weights.hpp"
#include "wehrhart/zpoly.hpp"

/// JSON encodings. Readers throw ParseError for malformed documents and
/// ValidationError for well-formed documents that violate a precondition.
namespace wehrhart::io {

using nlohmann::json;

json read_json_file(const std::filesystem::path& path);
/// Two-space indented, trailing newline.
std::string dump(const json& doc);

/// [{"exp": k, "coeff": "p/q"}, ...] in increasing exponent order.
json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j);

/// {"vertices": [[int, ...], ...]}; extra keys are ignored on input.
json to_json(const LatticePolytope& p);
LatticePolytope polytope_from_json(const json& j);

/// {"polytope_hash", "dim", "vertices", "facets", "f_vector",
///  "faces": [{"id", "dim", "vertices", "tight_facets"}], "order": [[a, b], ...]}
json to_json(const FaceLattice& lattice);
/// Rebuilds the lattice from the embedded vertices and checks that faces and
/// order match the document.
std::shared_ptr<const FaceLattice> face_lattice_from_json(const json& j);

/// {"polytope_hash": "...", "values": {"<face_id>": [laurent terms]}}
json to_json(const WeightFunction& f);
WeightFunction weights_from_json(const json& j, std::shared_ptr<const FaceLattice> lattice);

/// {"n": d, "monomials": [{"exps": [...], "coeff": "p/q"}]}; homogeneity is validated.
json to_json(const HomogPoly& phi);
HomogPoly phi_from_json(const json& j);

/// {"n": d, "terms": [{"m": [...], "coeff": [laurent terms]}]}, terms lexicographic in m.
json to_json(const CharacterSum& s);
CharacterSum charsum_from_json(const json& j);

json to_json(const ZPoly& z);
ZPoly zpoly_from_json(const json& j);

json to_json(const PolyT& p);

json to_json(const CheckResult& c);
json to_json(const EhrhartReport& r);

}  // namespace wehrhart::io
