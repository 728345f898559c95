#pragma once

#include <functional>
#include <map>
#include <string>

#include "wehrhart/laurent_poly.hpp"
#include "wehrhart/rational.hpp"

namespace wehrhart {

/// Finitely supported map M -> Q[y, 1/y], i.e. an element sum_m c_m(y) chi^m of
/// Q[M][y^{+-1}]. Keys are ordered lexicographically; zero values are dropped.
class CharacterSum {
 public:
  using Terms = std::map<Point, LaurentPoly>;

  explicit CharacterSum(int n) : n_(n) {}

  int dim() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(const Point& m) const;

  /// Accumulates c * chi^m.
  void add(const Point& m, const LaurentPoly& c);

  CharacterSum& operator+=(const CharacterSum& o);
  friend CharacterSum operator+(CharacterSum a, const CharacterSum& b) { return a += b; }
  /// Scales every coefficient by p.
  friend CharacterSum operator*(const LaurentPoly& p, const CharacterSum& s);

  /// Applies fn to every coefficient, renormalizing afterwards.
  CharacterSum map_values(const std::function<LaurentPoly(const LaurentPoly&)>& fn) const;

  friend bool operator==(const CharacterSum&, const CharacterSum&) = default;

  std::string to_string() const;

 private:
  int n_;
  Terms terms_;
};

/// chi^m -> chi^{-m}
CharacterSum negate_characters(const CharacterSum& s);

/// y -> 1/y on every coefficient.
CharacterSum substitute_inverse(const CharacterSum& s);

}  // namespace wehrhart
