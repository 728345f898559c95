#pragma once

#include <span>
#include <string>
#include <vector>

#include "wehrhart/laurent_poly.hpp"

namespace wehrhart {

/// Polynomial sum_k c_k(y) z^k in the dilation variable z with Laurent
/// polynomial coefficients. The leading coefficient is nonzero unless the
/// polynomial is zero, in which case degree() is -1.
class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(std::vector<LaurentPoly> coeffs);

  const std::vector<LaurentPoly>& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Horner evaluation at z.
  LaurentPoly operator()(const Rat& z) const;

  friend bool operator==(const ZPoly&, const ZPoly&) = default;

  std::string to_string() const;

 private:
  std::vector<LaurentPoly> coeffs_;
};

struct InterpolationSample {
  Rat node;
  LaurentPoly value;
};

/// Exact Lagrange interpolation, coefficientwise in y. Requires pairwise
/// distinct nodes and exactly degree_bound + 1 samples.
ZPoly lagrange_interpolate(std::span<const InterpolationSample> samples, int degree_bound);

}  // namespace wehrhart
