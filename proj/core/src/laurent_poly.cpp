#include "wehrhart/laurent_poly.hpp"

#include <cstdlib>

#include "wehrhart/error.hpp"

namespace wehrhart {

LaurentPoly::LaurentPoly(const Rat& constant) { add_term(0, constant); }

LaurentPoly::LaurentPoly(Terms terms) {
  for (auto& [k, c] : terms) add_term(k, c);
}

LaurentPoly LaurentPoly::monomial(const Rat& c, int exponent) {
  LaurentPoly p;
  p.add_term(exponent, c);
  return p;
}

LaurentPoly LaurentPoly::one_plus_y_pow(int k) {
  if (k < 0) throw ValidationError("(1+y)^k requires k >= 0");
  // binomial expansion
  LaurentPoly p;
  mpz_class binom = 1;
  for (int i = 0; i <= k; ++i) {
    p.add_term(i, Rat(binom));
    binom = binom * (k - i) / (i + 1);
  }
  return p;
}

LaurentPoly LaurentPoly::minus_one_minus_y_pow(int k) {
  LaurentPoly p = one_plus_y_pow(k);
  if (k % 2 != 0) p = -p;
  return p;
}

LaurentPoly LaurentPoly::minus_y_pow(int k) { return monomial(sign_power(k), k); }

Rat LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rat(0) : it->second;
}

std::optional<int> LaurentPoly::min_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::optional<int> LaurentPoly::max_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

Rat LaurentPoly::evaluate(const Rat& y) const {
  if (y == 0) {
    if (!terms_.empty() && terms_.begin()->first < 0) {
      throw ValidationError("cannot evaluate a Laurent polynomial with negative exponents at y = 0");
    }
    return coeff(0);
  }
  Rat total = 0;
  for (const auto& [k, c] : terms_) {
    Rat power = 1;
    const Rat base = k >= 0 ? y : Rat(1 / y);
    for (int i = 0; i < std::abs(k); ++i) power *= base;
    total += c * power;
  }
  return total;
}

void LaurentPoly::add_term(int exponent, const Rat& c) {
  Rat v = c;
  v.canonicalize();
  if (v == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, std::move(v));
  if (!inserted) {
    it->second += v;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, Rat(-c));
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rat& scalar) {
  Rat c = scalar;
  c.canonicalize();
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) out.add_term(ka + kb, Rat(ca * cb));
  }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [k, v] : out.terms_) v = -v;
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += wehrhart::to_string(c);
    if (k == 1) {
      out += "*y";
    } else if (k != 0) {
      out += "*y^" + std::to_string(k);
    }
  }
  return out;
}

LaurentPoly substitute_inverse(const LaurentPoly& p) {
  LaurentPoly::Terms t;
  for (const auto& [k, c] : p.terms()) t.emplace(-k, c);
  return LaurentPoly(std::move(t));
}

LaurentPoly substitute_negated(const LaurentPoly& p) {
  LaurentPoly::Terms t;
  for (const auto& [k, c] : p.terms()) t.emplace(k, k % 2 == 0 ? c : Rat(-c));
  return LaurentPoly(std::move(t));
}

bool is_palindromic(const LaurentPoly& p, int degree) {
  return p == LaurentPoly::monomial(1, degree) * substitute_inverse(p);
}

}  // namespace wehrhart
