#include "wehrhart/weights.hpp"

#include <random>

#include "wehrhart/error.hpp"

namespace wehrhart {

WeightFunction::WeightFunction(std::shared_ptr<const FaceLattice> lattice, Values values)
    : lattice_(std::move(lattice)) {
  if (!lattice_) throw ValidationError("weight function needs a face lattice");
  for (auto& [face, value] : values) {
    if (face <= lattice_->empty_face() || face >= lattice_->size()) {
      throw ValidationError("weight assigned to invalid face id " + std::to_string(face));
    }
    if (!value.is_zero()) values_.emplace(face, std::move(value));
  }
}

LaurentPoly WeightFunction::value(int face) const {
  auto it = values_.find(face);
  return it == values_.end() ? LaurentPoly() : it->second;
}

bool same_lattice(const WeightFunction& a, const WeightFunction& b) {
  return a.lattice_ptr() == b.lattice_ptr() ||
         a.lattice().polytope() == b.lattice().polytope();
}

bool operator==(const WeightFunction& a, const WeightFunction& b) {
  return same_lattice(a, b) && a.values_ == b.values_;
}

std::string WeightFunction::to_string() const {
  if (values_.empty()) return "{}";
  std::string out = "{";
  for (const auto& [face, v] : values_) {
    if (out.size() > 1) out += ", ";
    out += std::to_string(face) + ": " + v.to_string();
  }
  return out + "}";
}

WeightFunction delta_weight(std::shared_ptr<const FaceLattice> lattice, int q_prime) {
  if (q_prime == lattice->empty_face()) {
    throw ValidationError("delta weight at the empty face is not a weight function");
  }
  return WeightFunction(std::move(lattice), {{q_prime, LaurentPoly(1)}});
}

WeightFunction all_ones_weight(std::shared_ptr<const FaceLattice> lattice) {
  WeightFunction::Values values;
  for (int q = 1; q < lattice->size(); ++q) values.emplace(q, LaurentPoly(1));
  return WeightFunction(std::move(lattice), std::move(values));
}

WeightFunction dualize(const WeightFunction& f) {
  const FaceLattice& lattice = f.lattice();
  std::map<int, LaurentPoly> inverted;
  for (const auto& [face, v] : f.values()) inverted.emplace(face, substitute_inverse(v));

  WeightFunction::Values out;
  for (int q = 1; q < lattice.size(); ++q) {
    const int dim_q = lattice.face(q).dim;
    LaurentPoly total;
    for (int e : lattice.up_set(q)) {
      auto it = inverted.find(e);
      if (it == inverted.end()) continue;
      const int dim_e = lattice.face(e).dim;
      total += LaurentPoly::one_plus_y_pow(dim_e - dim_q) * LaurentPoly::minus_y_pow(-dim_e) *
               it->second;
    }
    out.emplace(q, std::move(total));
  }
  return WeightFunction(f.lattice_ptr(), std::move(out));
}

WeightFunction scale(const LaurentPoly& p, const WeightFunction& f) {
  WeightFunction::Values out;
  for (const auto& [face, v] : f.values()) out.emplace(face, p * v);
  return WeightFunction(f.lattice_ptr(), std::move(out));
}

WeightFunction add(const WeightFunction& f, const WeightFunction& g) {
  if (!same_lattice(f, g)) throw ValidationError("weight functions live on different polytopes");
  WeightFunction::Values out = f.values();
  for (const auto& [face, v] : g.values()) out[face] += v;
  return WeightFunction(f.lattice_ptr(), std::move(out));
}

WeightFunction random_weight(std::shared_ptr<const FaceLattice> lattice, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  WeightFunction::Values values;
  for (int q = 1; q < lattice->size(); ++q) {
    if (coin(rng) == 0) continue;
    LaurentPoly p;
    for (int k = -2; k <= 2; ++k) p += LaurentPoly::monomial(coeff(rng), k);
    values.emplace(q, std::move(p));
  }
  return WeightFunction(std::move(lattice), std::move(values));
}

}  // namespace wehrhart
