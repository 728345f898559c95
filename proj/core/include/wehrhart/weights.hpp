#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>

#include "wehrhart/face_lattice.hpp"
#include "wehrhart/laurent_poly.hpp"

namespace wehrhart {

/// Laurent-polynomial weight on the nonempty faces of one face lattice.
/// Absent faces carry weight zero; zero values are never stored.
class WeightFunction {
 public:
  using Values = std::map<int, LaurentPoly>;

  explicit WeightFunction(std::shared_ptr<const FaceLattice> lattice, Values values = {});

  const FaceLattice& lattice() const { return *lattice_; }
  const std::shared_ptr<const FaceLattice>& lattice_ptr() const { return lattice_; }
  const Values& values() const { return values_; }
  LaurentPoly value(int face) const;
  bool is_zero() const { return values_.empty(); }

  /// Same lattice (identity or identical polytope) and equal values.
  friend bool operator==(const WeightFunction& a, const WeightFunction& b);

  std::string to_string() const;

 private:
  std::shared_ptr<const FaceLattice> lattice_;
  Values values_;
};

/// Weight functions are comparable iff their lattices describe the same polytope.
bool same_lattice(const WeightFunction& a, const WeightFunction& b);

/// Kronecker weight: 1 at q_prime, zero elsewhere.
WeightFunction delta_weight(std::shared_ptr<const FaceLattice> lattice, int q_prime);

/// Weight 1 on every nonempty face.
WeightFunction all_ones_weight(std::shared_ptr<const FaceLattice> lattice);

/// D(f)_Q(y) = sum_{Q <= E <= P, E nonempty} (1+y)^{dim E - dim Q} (-y)^{-dim E} f_E(1/y)
WeightFunction dualize(const WeightFunction& f);

WeightFunction scale(const LaurentPoly& p, const WeightFunction& f);
/// Throws ValidationError on lattice mismatch.
WeightFunction add(const WeightFunction& f, const WeightFunction& g);

/// Seeded pseudo-random weight: each nonempty face independently gets a
/// nonzero chance 1/2 of a value sum_{k=-2..2} c_k y^k with c_k uniform in
/// {-3..3}. Deterministic for a given seed.
WeightFunction random_weight(std::shared_ptr<const FaceLattice> lattice, std::uint64_t seed);

}  // namespace wehrhart
