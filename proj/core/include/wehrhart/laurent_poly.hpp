#pragma once

#include <concepts>
#include <map>
#include <optional>
#include <string>

#include "wehrhart/rational.hpp"

namespace wehrhart {

/// Laurent polynomial sum_k c_k y^k over Q. Zero coefficients are never
/// stored, so structural equality is mathematical equality.
class LaurentPoly {
 public:
  using Terms = std::map<int, Rat>;

  LaurentPoly() = default;
  LaurentPoly(const Rat& constant);  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  LaurentPoly(I constant) : LaurentPoly(Rat(static_cast<long>(constant))) {}  // NOLINT
  explicit LaurentPoly(Terms terms);

  /// c * y^exponent
  static LaurentPoly monomial(const Rat& c, int exponent);
  /// (1 + y)^k for k >= 0
  static LaurentPoly one_plus_y_pow(int k);
  /// (-1 - y)^k for k >= 0
  static LaurentPoly minus_one_minus_y_pow(int k);
  /// (-y)^k for any integer k
  static LaurentPoly minus_y_pow(int k);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coeff(int exponent) const;
  std::optional<int> min_exponent() const;
  std::optional<int> max_exponent() const;

  /// Value at a rational point; throws ValidationError at y = 0 when a
  /// negative exponent is present.
  Rat evaluate(const Rat& y) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rat& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rat& c) { return a *= c; }
  friend LaurentPoly operator*(const Rat& c, LaurentPoly a) { return a *= c; }
  template <std::integral I>
  friend LaurentPoly operator*(I c, LaurentPoly a) {
    return a *= Rat(static_cast<long>(c));
  }
  template <std::integral I>
  friend LaurentPoly operator*(LaurentPoly a, I c) {
    return a *= Rat(static_cast<long>(c));
  }
  LaurentPoly operator-() const;

  LaurentPoly pow(unsigned k) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  /// Increasing exponent order joined by " + ", e.g. "-1*y^-1 + 2 + 3*y^2".
  /// The zero polynomial renders as "0".
  std::string to_string() const;

 private:
  void add_term(int exponent, const Rat& c);

  Terms terms_;
};

/// p(y) -> p(1/y)
LaurentPoly substitute_inverse(const LaurentPoly& p);

/// p(y) -> p(-y)
LaurentPoly substitute_negated(const LaurentPoly& p);

/// True iff p(y) = y^degree * p(1/y).
bool is_palindromic(const LaurentPoly& p, int degree);

}  // namespace wehrhart
