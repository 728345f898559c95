#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wehrhart/character_sum.hpp"
#include "wehrhart/homog_poly.hpp"
#include "wehrhart/stanley.hpp"
#include "wehrhart/weights.hpp"
#include "wehrhart/zpoly.hpp"

namespace wehrhart {

/// E carries the extra factor (1+y)^{deg phi}; Etilde is the renormalized form.
enum class Variant { E, Etilde };

std::string_view to_string(Variant v);
/// Accepts "E" and "Etilde"; throws ParseError otherwise.
Variant parse_variant(std::string_view text);

/// Equivariant Hodge character sum of the weighted polytope at dilation l:
///   l > 0:  sum_Q f_Q (1+y)^{dim Q} sum_{m in relint(lQ)} chi^{-m}
///   l = -k: sum_Q f_Q (-1-y)^{dim Q} sum_{m in kQ} chi^{+m}
///   l = 0:  (sum_Q f_Q (-1-y)^{dim Q}) chi^0
CharacterSum hodge_character_sum(const WeightFunction& f, std::int64_t dilation);

/// Etilde(chi^m) = phi(-m); E(chi^m) = (1+y)^{deg phi} phi(-m).
LaurentPoly apply_phi(const CharacterSum& s, const HomogPoly& phi, Variant variant);

/// sum_{m in relint(lQ) ∩ M} phi(m) for every face id (zero for the empty face).
std::vector<Rat> relint_phi_sums(const FaceLattice& lattice, const HomogPoly& phi,
                                 std::int64_t dilation);
/// sum_{m in lQ ∩ M} phi(m), assembled from the relative interiors of subfaces.
std::vector<Rat> closed_phi_sums(const FaceLattice& lattice, const HomogPoly& phi,
                                 std::int64_t dilation);

/// Weighted Ehrhart value at a positive dilation, by per-face sums.
LaurentPoly weighted_ehrhart_value(const WeightFunction& f, const HomogPoly& phi,
                                   std::int64_t dilation, Variant variant);

/// Closed-face formula for the value at -l (l > 0):
///   E:      sum_Q f_Q (-1-y)^{dim Q + deg} sum_{lQ} phi
///   Etilde: sum_Q f_Q (-1-y)^{dim Q} (-1)^{deg} sum_{lQ} phi
LaurentPoly closed_face_value(const WeightFunction& f, const HomogPoly& phi,
                              std::int64_t dilation, Variant variant);

/// Value at l = 0 from the constant-term formula (phi(0) replaces the sum).
LaurentPoly constant_term(const WeightFunction& f, const HomogPoly& phi, Variant variant);

/// Degree bound in z: n + deg phi.
int ehrhart_degree_bound(const FaceLattice& lattice, const HomogPoly& phi);

/// Interpolates the weighted Ehrhart polynomial at l = 1..bound+1, then
/// checks it against direct values at l = bound+2, bound+3 and against the
/// constant-term formula. Any mismatch throws PolynomialityError.
ZPoly ehrhart_polynomial(const WeightFunction& f, const HomogPoly& phi, Variant variant);

struct CheckResult {
  std::string identity;
  std::vector<std::pair<std::string, std::string>> params;
  bool passed = false;
  std::string lhs;
  std::string rhs;
};

/// E(-l, y) from the interpolated polynomial against the closed-face formula.
CheckResult verify_reciprocity(const WeightFunction& f, const HomogPoly& phi, std::int64_t l,
                               Variant variant);
CheckResult verify_reciprocity(const ZPoly& poly, const WeightFunction& f, const HomogPoly& phi,
                               std::int64_t l, Variant variant);

/// E_f(-l, y) = (-y)^{deg} E_{D f}(l, 1/y), resp. Etilde with (-1)^{deg}.
CheckResult verify_duality_reciprocity(const WeightFunction& f, const HomogPoly& phi,
                                       std::int64_t l, Variant variant);
CheckResult verify_duality_reciprocity(const ZPoly& poly, const WeightFunction& f,
                                       const HomogPoly& phi, std::int64_t l, Variant variant);

/// chi_y(l; D f) = chi_{1/y}(-l; f) with m -> -m, as character sums.
CheckResult verify_hodge_duality(const WeightFunction& f, std::int64_t l);

/// With f the g-weights of Q' (n' = dim Q'):
///   E(-l, y) = (-y)^{n' + deg} E(l, 1/y), resp. Etilde with (-y)^{n'} (-1)^{deg}.
CheckResult verify_purity(const PolarGTable& table, int q_prime, const HomogPoly& phi,
                          std::int64_t l, Variant variant);

}  // namespace wehrhart
