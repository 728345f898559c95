#pragma once

#include <span>
#include <string>
#include <vector>

#include "wehrhart/rational.hpp"

namespace wehrhart {

struct Monomial {
  std::vector<int> exponents;
  Rat coeff;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Homogeneous polynomial function phi on M_R = R^n with rational
/// coefficients. Construction merges repeated exponent vectors, drops zero
/// terms and rejects mixed total degree. The zero polynomial has degree 0.
class HomogPoly {
 public:
  HomogPoly(int n, std::vector<Monomial> monomials);

  static HomogPoly constant(int n, const Rat& c = 1);
  /// sum_i coeffs[i] * m_i
  static HomogPoly linear(std::span<const Rat> coeffs);
  /// sum_i m_i^2
  static HomogPoly sum_of_squares(int n);

  int dim() const { return n_; }
  int degree() const { return degree_; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  bool is_zero() const { return monomials_.empty(); }

  /// Exact value at an integer point; throws ValidationError on length mismatch.
  Rat operator()(std::span<const std::int64_t> m) const;

  std::string to_string() const;

  friend bool operator==(const HomogPoly&, const HomogPoly&) = default;

 private:
  int n_ = 0;
  int degree_ = 0;
  std::vector<Monomial> monomials_;
};

}  // namespace wehrhart
