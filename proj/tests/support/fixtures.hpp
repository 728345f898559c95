#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "wehrhart/corpus.hpp"
#include "wehrhart/face_lattice.hpp"
#include "wehrhart/ehrhart.hpp"
#include "wehrhart/homog_poly.hpp"
#include "wehrhart/stanley.hpp"

namespace fixtures {

struct Named {
  std::string name;
  std::shared_ptr<const wehrhart::FaceLattice> lattice;
};

inline const std::vector<Named>& corpus() {
  static const std::vector<Named> all = [] {
    std::vector<Named> out;
    for (const auto& e : wehrhart::corpus::standard()) {
      out.push_back({e.name, wehrhart::build_face_lattice(wehrhart::facet_presentation(e.points))});
    }
    return out;
  }();
  return all;
}

inline std::shared_ptr<const wehrhart::FaceLattice> lattice(const std::string& name) {
  for (const auto& c : corpus())
    if (c.name == name) return c.lattice;
  throw std::out_of_range(name);
}

/// The oracle's view of a corpus polytope, built from the raw input points.
struct Reference {
  std::set<oracle::Halfspace> facets;
  std::set<wehrhart::Point> vertices;
};

inline const Reference& reference(const std::string& name) {
  static std::map<std::string, Reference> cache;
  if (auto it = cache.find(name); it != cache.end()) return it->second;
  for (const auto& e : wehrhart::corpus::standard()) {
    if (e.name != name) continue;
    // Normals come from 2x2 minors of vertex differences: entries of size at
    // most 2 * range^2, with range 3 for the random polytope and 1 otherwise.
    const auto facets = oracle::facets_by_normal_search(e.points, name == "random3" ? 18 : 2);
    return cache[name] = Reference{facets, oracle::vertices(e.points, facets)};
  }
  throw std::out_of_range(name);
}

/// m_1 - 2 m_2 + 3 m_3 - ...: a fixed linear form with distinct coefficients.
inline wehrhart::HomogPoly linear_form(int n) {
  std::vector<wehrhart::Rat> c;
  for (int i = 0; i < n; ++i) c.emplace_back(i % 2 == 0 ? i + 1 : -(i + 1));
  return wehrhart::HomogPoly::linear(c);
}

/// sum m_i^2 + m_1 m_n (the cross term only when n > 1).
inline wehrhart::HomogPoly quadratic_form(int n) {
  std::vector<wehrhart::Monomial> monos;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 2;
    monos.push_back({e, 1});
  }
  if (n > 1) {
    std::vector<int> e(n, 0);
    e[0] = 1;
    e[n - 1] = 1;
    monos.push_back({e, wehrhart::Rat(-1, 2)});
  }
  return wehrhart::HomogPoly(n, monos);
}

}  // namespace fixtures

namespace fixtures {

inline oracle::Poset to_oracle(const wehrhart::GradedPoset& p) {
  oracle::Poset out;
  out.rank = p.rank;
  for (const auto& row : p.leq) out.le.emplace_back(row.begin(), row.end());
  return out;
}

inline oracle::IntPoly to_int_poly(const wehrhart::PolyT& p) {
  oracle::IntPoly out;
  for (const auto& c : p.coefficients()) {
    if (c.get_den() != 1 || !c.get_num().fits_slong_p()) throw std::domain_error("non-integer coefficient");
    out.push_back(c.get_num().get_si());
  }
  return out;
}

}  // namespace fixtures

namespace fixtures {

/// Weighted Ehrhart value at l > 0 from the oracle's own point classification:
/// sum over m in l*P of f(carrier(m)) (1+y)^{dim carrier (+deg)} phi(m).
inline wehrhart::LaurentPoly brute_value(const std::string& name, const wehrhart::WeightFunction& f,
                                         const wehrhart::HomogPoly& phi, std::int64_t l,
                                         wehrhart::Variant variant) {
  const auto& ref = reference(name);
  const auto& lat = f.lattice();
  std::map<std::set<wehrhart::Point>, const wehrhart::Face*> by_vertices;
  for (const auto& face : lat.faces()) {
    std::set<wehrhart::Point> vs;
    for (int v : face.vertices) vs.insert(lat.polytope().vertices()[v]);
    by_vertices[vs] = &face;
  }
  const int extra = variant == wehrhart::Variant::E ? phi.degree() : 0;
  wehrhart::LaurentPoly total;
  for (const auto& m : oracle::lattice_points(ref.vertices, ref.facets, l)) {
    const wehrhart::Face* face = by_vertices.at(oracle::carrier(m, ref.vertices, ref.facets, l));
    total += f.value(face->id) * wehrhart::LaurentPoly::one_plus_y_pow(face->dim + extra) * phi(m);
  }
  return total;
}

}  // namespace fixtures
