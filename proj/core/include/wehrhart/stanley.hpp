#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "wehrhart/face_lattice.hpp"
#include "wehrhart/laurent_poly.hpp"
#include "wehrhart/weights.hpp"

namespace wehrhart {

/// Polynomial in an abstract variable t, dense and trimmed.
class PolyT {
 public:
  PolyT() = default;
  explicit PolyT(std::vector<Rat> coeffs);
  static PolyT one() { return PolyT({Rat(1)}); }

  const std::vector<Rat>& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rat coeff(int i) const;

  /// t -> -y, producing a Laurent polynomial in y.
  LaurentPoly at_minus_y() const;
  /// Identifies t with y; throws ValidationError on negative exponents.
  static PolyT from_laurent(const LaurentPoly& p);

  /// "1 + 1*t + 1*t^2"
  std::string to_string() const;

  friend bool operator==(const PolyT&, const PolyT&) = default;

 private:
  std::vector<Rat> coeffs_;
};

/// True iff p(t) = t^degree p(1/t).
bool is_palindromic(const PolyT& p, int degree);

struct StanleyPolys {
  PolyT f;
  PolyT g;
};

/// Memoized toric f/g polynomials of every interval [bottom, top] of an
/// Eulerian graded poset. For a single-element interval f = g = 1; otherwise
/// with rank(top) - rank(bottom) = r + 1,
///   f = sum_{bottom <= x < top} g([bottom, x]) (t - 1)^{r - rank[bottom, x]},
///   g = sum_{i <= r/2} (f_i - f_{i-1}) t^i.
/// Thread-safe: the memo table behaves as a single map with idempotent inserts.
class StanleyTable {
 public:
  /// Throws ValidationError if the poset is not Eulerian.
  explicit StanleyTable(GradedPoset poset);

  const GradedPoset& poset() const { return poset_; }
  StanleyPolys interval(int bottom, int top) const;
  PolyT g(int bottom, int top) const { return interval(bottom, top).g; }
  PolyT f(int bottom, int top) const { return interval(bottom, top).f; }

 private:
  const StanleyPolys& compute(int bottom, int top) const;

  GradedPoset poset_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<int, int>, StanleyPolys> memo_;
};

/// f and g of a poset with a unique minimum and maximum. Throws
/// ValidationError when the poset is not Eulerian or not bounded.
StanleyPolys stanley_fg(const GradedPoset& poset);

/// g-polynomials of polar faces of one lattice: g_{Q°} is read off the
/// reversed interval [Q, Q'], with Q' as its minimum.
class PolarGTable {
 public:
  explicit PolarGTable(std::shared_ptr<const FaceLattice> lattice);

  const FaceLattice& lattice() const { return *lattice_; }

  /// Requires q <= q_prime, both nonempty.
  PolyT polar_g(int q, int q_prime) const;
  /// f_Q(y) = g_{Q°}(-y) for Q <= Q', zero otherwise.
  WeightFunction g_weights(int q_prime) const;
  /// Toric h-polynomial of the polar polytope: the f-polynomial of the whole
  /// reversed lattice.
  PolyT h_polynomial() const;

 private:
  std::shared_ptr<const FaceLattice> lattice_;
  StanleyTable reversed_;
};

PolyT polar_g(const std::shared_ptr<const FaceLattice>& lattice, int q, int q_prime);
WeightFunction g_weight_function(const std::shared_ptr<const FaceLattice>& lattice, int q_prime);
PolyT h_polynomial(const std::shared_ptr<const FaceLattice>& lattice);

}  // namespace wehrhart
