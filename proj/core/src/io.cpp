#include "wehrhart/io.hpp"

#include <fstream>
#include <sstream>

#include "wehrhart/error.hpp"

namespace wehrhart::io {
namespace {

template <typename Fn>
auto guarded(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

Point point_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an integer vector");
  Point p;
  for (const auto& c : j) {
    if (!c.is_number_integer()) throw ParseError("expected integer coordinates");
    p.push_back(c.get<std::int64_t>());
  }
  return p;
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

json to_json(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& [k, c] : p.terms()) out.push_back({{"exp", k}, {"coeff", to_string(c)}});
  return out;
}

LaurentPoly laurent_from_json(const json& j) {
  return guarded("Laurent polynomial", [&] {
    if (!j.is_array()) throw ParseError("Laurent polynomial must be an array of terms");
    LaurentPoly p;
    for (const auto& term : j) {
      const json& coeff = require(term, "coeff");
      const Rat c = coeff.is_string() ? parse_rat(coeff.get<std::string>())
                                      : Rat(coeff.get<long>());
      p += LaurentPoly::monomial(c, require(term, "exp").get<int>());
    }
    return p;
  });
}

json to_json(const LatticePolytope& p) {
  json facets = json::array();
  for (const auto& f : p.facets()) facets.push_back({{"normal", f.normal}, {"offset", f.offset}});
  return {{"vertices", p.vertices()}, {"facets", facets}};
}

LatticePolytope polytope_from_json(const json& j) {
  const json& verts = require(j, "vertices");
  if (!verts.is_array()) throw ParseError("'vertices' must be an array");
  std::vector<Point> points;
  for (const auto& v : verts) points.push_back(point_from_json(v));
  return facet_presentation(points);
}

json to_json(const FaceLattice& lattice) {
  json faces = json::array();
  for (const auto& f : lattice.faces()) {
    faces.push_back({{"id", f.id}, {"dim", f.dim}, {"vertices", f.vertices},
                     {"tight_facets", f.tight_facets}});
  }
  json order = json::array();
  for (const auto& [a, b] : lattice.strict_order()) order.push_back({a, b});
  json out = to_json(lattice.polytope());
  out["polytope_hash"] = lattice.polytope().hash();
  out["dim"] = lattice.dim();
  out["f_vector"] = lattice.f_vector();
  out["faces"] = std::move(faces);
  out["order"] = std::move(order);
  return out;
}

std::shared_ptr<const FaceLattice> face_lattice_from_json(const json& j) {
  auto lattice = build_face_lattice(polytope_from_json(j));
  guarded("face lattice", [&] {
    if (to_json(*lattice) != j) {
      throw ValidationError("face lattice document does not match its vertices");
    }
    return 0;
  });
  return lattice;
}

json to_json(const WeightFunction& f) {
  json values = json::object();
  for (const auto& [face, v] : f.values()) values[std::to_string(face)] = to_json(v);
  return {{"polytope_hash", f.lattice().polytope().hash()}, {"values", values}};
}

WeightFunction weights_from_json(const json& j, std::shared_ptr<const FaceLattice> lattice) {
  return guarded("weight function", [&] {
    const auto hash = require(j, "polytope_hash").get<std::string>();
    if (hash != lattice->polytope().hash()) {
      throw ValidationError("weight function belongs to polytope " + hash + ", not " +
                            lattice->polytope().hash());
    }
    const json& values = require(j, "values");
    if (!values.is_object()) throw ParseError("'values' must be an object");
    WeightFunction::Values out;
    for (const auto& [key, v] : values.items()) {
      std::size_t used = 0;
      int face = 0;
      try {
        face = std::stoi(key, &used);
      } catch (const std::exception&) {
        throw ParseError("face id '" + key + "' is not an integer");
      }
      if (used != key.size()) throw ParseError("face id '" + key + "' is not an integer");
      out.emplace(face, laurent_from_json(v));
    }
    return WeightFunction(std::move(lattice), std::move(out));
  });
}

json to_json(const HomogPoly& phi) {
  json monos = json::array();
  for (const auto& m : phi.monomials()) {
    monos.push_back({{"exps", m.exponents}, {"coeff", to_string(m.coeff)}});
  }
  return {{"n", phi.dim()}, {"monomials", monos}};
}

HomogPoly phi_from_json(const json& j) {
  return guarded("phi", [&] {
    const int n = require(j, "n").get<int>();
    std::vector<Monomial> monos;
    for (const auto& m : require(j, "monomials")) {
      const json& coeff = require(m, "coeff");
      monos.push_back({require(m, "exps").get<std::vector<int>>(),
                       coeff.is_string() ? parse_rat(coeff.get<std::string>())
                                         : Rat(coeff.get<long>())});
    }
    return HomogPoly(n, std::move(monos));
  });
}

json to_json(const CharacterSum& s) {
  json terms = json::array();
  for (const auto& [m, c] : s.terms()) terms.push_back({{"m", m}, {"coeff", to_json(c)}});
  return {{"n", s.dim()}, {"terms", terms}};
}

CharacterSum charsum_from_json(const json& j) {
  return guarded("character sum", [&] {
    CharacterSum s(require(j, "n").get<int>());
    for (const auto& t : require(j, "terms")) {
      s.add(point_from_json(require(t, "m")), laurent_from_json(require(t, "coeff")));
    }
    return s;
  });
}

json to_json(const ZPoly& z) {
  json coeffs = json::array();
  for (const auto& c : z.coefficients()) coeffs.push_back(to_json(c));
  return {{"degree", z.degree()}, {"coefficients", coeffs}, {"rendered", z.to_string()}};
}

ZPoly zpoly_from_json(const json& j) {
  return guarded("z-polynomial", [&] {
    std::vector<LaurentPoly> coeffs;
    for (const auto& c : require(j, "coefficients")) coeffs.push_back(laurent_from_json(c));
    return ZPoly(std::move(coeffs));
  });
}

json to_json(const PolyT& p) {
  json coeffs = json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(to_string(c));
  return {{"coefficients", coeffs}, {"rendered", p.to_string()}};
}

json to_json(const CheckResult& c) {
  json params = json::object();
  for (const auto& [k, v] : c.params) params[k] = v;
  return {{"identity", c.identity},
          {"params", params},
          {"status", c.passed ? "pass" : "fail"},
          {"lhs", c.lhs},
          {"rhs", c.rhs}};
}

json to_json(const EhrhartReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"polytope_hash", r.polytope_hash},
          {"total", r.checks.size()},
          {"failures", r.failures()},
          {"passed", r.passed()},
          {"checks", checks}};
}

}  // namespace wehrhart::io
