#include "wehrhart/ehrhart.hpp"

#include "wehrhart/error.hpp"

namespace wehrhart {
namespace {

void require_dimension(const FaceLattice& lattice, const HomogPoly& phi) {
  if (phi.dim() != lattice.dim()) {
    throw ValidationError("phi has dimension " + std::to_string(phi.dim()) +
                          " but the polytope has dimension " + std::to_string(lattice.dim()));
  }
}

Point negated(const Point& m) {
  Point out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = -m[i];
  return out;
}

/// Factor multiplying f_Q * S_Q at a positive dilation.
LaurentPoly positive_factor(int dim_q, int deg, Variant variant) {
  return LaurentPoly::one_plus_y_pow(dim_q + (variant == Variant::E ? deg : 0));
}

/// Factor multiplying f_Q * S_Q at a negative or zero dilation.
LaurentPoly negative_factor(int dim_q, int deg, Variant variant) {
  if (variant == Variant::E) return LaurentPoly::minus_one_minus_y_pow(dim_q + deg);
  return LaurentPoly::minus_one_minus_y_pow(dim_q) * sign_power(deg);
}

std::string dilation_string(std::int64_t l) { return std::to_string(l); }

}  // namespace

std::string_view to_string(Variant v) { return v == Variant::E ? "E" : "Etilde"; }

Variant parse_variant(std::string_view text) {
  if (text == "E") return Variant::E;
  if (text == "Etilde") return Variant::Etilde;
  throw ParseError("unknown variant '" + std::string(text) + "' (expected E or Etilde)");
}

CharacterSum hodge_character_sum(const WeightFunction& f, std::int64_t dilation) {
  const FaceLattice& lattice = f.lattice();
  const int n = lattice.dim();
  CharacterSum out(n);
  if (dilation == 0) {
    LaurentPoly total;
    for (const auto& [q, fq] : f.values()) {
      total += fq * LaurentPoly::minus_one_minus_y_pow(lattice.face(q).dim);
    }
    out.add(Point(static_cast<std::size_t>(n), 0), total);
    return out;
  }
  if (dilation > 0) {
    const FacePartition& part = lattice.partition(dilation);
    for (const auto& [q, fq] : f.values()) {
      const LaurentPoly c = fq * LaurentPoly::one_plus_y_pow(lattice.face(q).dim);
      for (const auto& m : part.by_face[static_cast<std::size_t>(q)]) out.add(negated(m), c);
    }
    return out;
  }
  const FacePartition& part = lattice.partition(-dilation);
  for (const auto& [q, fq] : f.values()) {
    const LaurentPoly c = fq * LaurentPoly::minus_one_minus_y_pow(lattice.face(q).dim);
    for (int e : lattice.down_set(q)) {
      for (const auto& m : part.by_face[static_cast<std::size_t>(e)]) out.add(m, c);
    }
  }
  return out;
}

LaurentPoly apply_phi(const CharacterSum& s, const HomogPoly& phi, Variant variant) {
  if (phi.dim() != s.dim()) throw ValidationError("phi and character sum differ in dimension");
  LaurentPoly total;
  for (const auto& [m, c] : s.terms()) total += c * phi(negated(m));
  if (variant == Variant::E) total *= LaurentPoly::one_plus_y_pow(phi.degree());
  return total;
}

std::vector<Rat> relint_phi_sums(const FaceLattice& lattice, const HomogPoly& phi,
                                 std::int64_t dilation) {
  require_dimension(lattice, phi);
  const FacePartition& part = lattice.partition(dilation);
  std::vector<Rat> sums(static_cast<std::size_t>(lattice.size()), Rat(0));
  for (std::size_t q = 0; q < sums.size(); ++q) {
    for (const auto& m : part.by_face[q]) sums[q] += phi(m);
  }
  return sums;
}

std::vector<Rat> closed_phi_sums(const FaceLattice& lattice, const HomogPoly& phi,
                                 std::int64_t dilation) {
  const auto relint = relint_phi_sums(lattice, phi, dilation);
  std::vector<Rat> sums(relint.size(), Rat(0));
  for (int q = 0; q < lattice.size(); ++q) {
    for (int e : lattice.down_set(q)) sums[static_cast<std::size_t>(q)] += relint[static_cast<std::size_t>(e)];
  }
  return sums;
}

LaurentPoly weighted_ehrhart_value(const WeightFunction& f, const HomogPoly& phi,
                                   std::int64_t dilation, Variant variant) {
  if (dilation <= 0) throw ValidationError("weighted_ehrhart_value needs a positive dilation");
  const FaceLattice& lattice = f.lattice();
  const auto sums = relint_phi_sums(lattice, phi, dilation);
  LaurentPoly total;
  for (const auto& [q, fq] : f.values()) {
    const Rat& s = sums[static_cast<std::size_t>(q)];
    if (s == 0) continue;
    total += fq * positive_factor(lattice.face(q).dim, phi.degree(), variant) * s;
  }
  return total;
}

LaurentPoly closed_face_value(const WeightFunction& f, const HomogPoly& phi,
                              std::int64_t dilation, Variant variant) {
  if (dilation <= 0) throw ValidationError("closed_face_value needs a positive dilation");
  const FaceLattice& lattice = f.lattice();
  const auto sums = closed_phi_sums(lattice, phi, dilation);
  LaurentPoly total;
  for (const auto& [q, fq] : f.values()) {
    const Rat& s = sums[static_cast<std::size_t>(q)];
    if (s == 0) continue;
    total += fq * negative_factor(lattice.face(q).dim, phi.degree(), variant) * s;
  }
  return total;
}

LaurentPoly constant_term(const WeightFunction& f, const HomogPoly& phi, Variant variant) {
  const FaceLattice& lattice = f.lattice();
  require_dimension(lattice, phi);
  const Rat phi0 = phi(Point(static_cast<std::size_t>(lattice.dim()), 0));
  LaurentPoly total;
  if (phi0 == 0) return total;
  for (const auto& [q, fq] : f.values()) {
    total += fq * negative_factor(lattice.face(q).dim, phi.degree(), variant) * phi0;
  }
  return total;
}

int ehrhart_degree_bound(const FaceLattice& lattice, const HomogPoly& phi) {
  return lattice.dim() + phi.degree();
}

ZPoly ehrhart_polynomial(const WeightFunction& f, const HomogPoly& phi, Variant variant) {
  const int bound = ehrhart_degree_bound(f.lattice(), phi);
  std::vector<InterpolationSample> samples;
  for (int l = 1; l <= bound + 1; ++l) {
    samples.push_back({Rat(l), weighted_ehrhart_value(f, phi, l, variant)});
  }
  ZPoly poly = lagrange_interpolate(samples, bound);

  for (int l = bound + 2; l <= bound + 3; ++l) {
    const LaurentPoly direct = weighted_ehrhart_value(f, phi, l, variant);
    const LaurentPoly interpolated = poly(Rat(l));
    if (direct != interpolated) {
      throw PolynomialityError("overdetermination sample l=" + std::to_string(l) +
                               " disagrees: interpolated " + interpolated.to_string() +
                               ", direct " + direct.to_string());
    }
  }
  const LaurentPoly expected0 = constant_term(f, phi, variant);
  const LaurentPoly at0 = poly(Rat(0));
  if (expected0 != at0) {
    throw PolynomialityError("constant term disagrees: interpolated " + at0.to_string() +
                             ", formula " + expected0.to_string());
  }
  return poly;
}

CheckResult verify_reciprocity(const WeightFunction& f, const HomogPoly& phi, std::int64_t l,
                               Variant variant) {
  return verify_reciprocity(ehrhart_polynomial(f, phi, variant), f, phi, l, variant);
}

CheckResult verify_reciprocity(const ZPoly& poly, const WeightFunction& f, const HomogPoly& phi,
                               std::int64_t l, Variant variant) {
  const LaurentPoly lhs = poly(Rat(-l));
  const LaurentPoly rhs = closed_face_value(f, phi, l, variant);
  return {"reciprocity",
          {{"l", dilation_string(l)}, {"variant", std::string(to_string(variant))}},
          lhs == rhs,
          lhs.to_string(),
          rhs.to_string()};
}

CheckResult verify_duality_reciprocity(const WeightFunction& f, const HomogPoly& phi,
                                       std::int64_t l, Variant variant) {
  return verify_duality_reciprocity(ehrhart_polynomial(f, phi, variant), f, phi, l, variant);
}

CheckResult verify_duality_reciprocity(const ZPoly& poly, const WeightFunction& f,
                                       const HomogPoly& phi, std::int64_t l, Variant variant) {
  const LaurentPoly lhs = poly(Rat(-l));
  const LaurentPoly dual_value =
      substitute_inverse(weighted_ehrhart_value(dualize(f), phi, l, variant));
  const int deg = phi.degree();
  const LaurentPoly factor = variant == Variant::E ? LaurentPoly::minus_y_pow(deg)
                                                   : LaurentPoly(sign_power(deg));
  const LaurentPoly rhs = factor * dual_value;
  return {"duality_reciprocity",
          {{"l", dilation_string(l)}, {"variant", std::string(to_string(variant))}},
          lhs == rhs,
          lhs.to_string(),
          rhs.to_string()};
}

CheckResult verify_hodge_duality(const WeightFunction& f, std::int64_t l) {
  if (l <= 0) throw ValidationError("verify_hodge_duality needs a positive dilation");
  const CharacterSum lhs = hodge_character_sum(dualize(f), l);
  const CharacterSum rhs = negate_characters(substitute_inverse(hodge_character_sum(f, -l)));
  return {"hodge_duality", {{"l", dilation_string(l)}}, lhs == rhs, lhs.to_string(),
          rhs.to_string()};
}

CheckResult verify_purity(const PolarGTable& table, int q_prime, const HomogPoly& phi,
                          std::int64_t l, Variant variant) {
  if (l <= 0) throw ValidationError("verify_purity needs a positive dilation");
  const WeightFunction f = table.g_weights(q_prime);
  const ZPoly poly = ehrhart_polynomial(f, phi, variant);
  const LaurentPoly lhs = poly(Rat(-l));
  const int n_prime = table.lattice().face(q_prime).dim;
  const int deg = phi.degree();
  const LaurentPoly factor = variant == Variant::E
                                 ? LaurentPoly::minus_y_pow(n_prime + deg)
                                 : LaurentPoly::minus_y_pow(n_prime) * sign_power(deg);
  const LaurentPoly rhs =
      factor * substitute_inverse(weighted_ehrhart_value(f, phi, l, variant));
  return {"purity",
          {{"face", std::to_string(q_prime)},
           {"l", dilation_string(l)},
           {"variant", std::string(to_string(variant))}},
          lhs == rhs,
          lhs.to_string(),
          rhs.to_string()};
}

}  // namespace wehrhart
