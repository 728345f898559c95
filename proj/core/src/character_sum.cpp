#include "wehrhart/character_sum.hpp"

#include "wehrhart/error.hpp"

namespace wehrhart {

LaurentPoly CharacterSum::coeff(const Point& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void CharacterSum::add(const Point& m, const LaurentPoly& c) {
  if (static_cast<int>(m.size()) != n_) {
    throw ValidationError("character key has dimension " + std::to_string(m.size()) +
                          ", expected " + std::to_string(n_));
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CharacterSum& CharacterSum::operator+=(const CharacterSum& o) {
  if (o.n_ != n_) throw ValidationError("character sums of different dimension");
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

CharacterSum operator*(const LaurentPoly& p, const CharacterSum& s) {
  CharacterSum out(s.n_);
  for (const auto& [m, c] : s.terms_) out.add(m, p * c);
  return out;
}

CharacterSum CharacterSum::map_values(
    const std::function<LaurentPoly(const LaurentPoly&)>& fn) const {
  CharacterSum out(n_);
  for (const auto& [m, c] : terms_) out.add(m, fn(c));
  return out;
}

std::string CharacterSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")*chi^(";
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i > 0) out += ",";
      out += std::to_string(m[i]);
    }
    out += ")";
  }
  return out;
}

CharacterSum negate_characters(const CharacterSum& s) {
  CharacterSum out(s.dim());
  for (const auto& [m, c] : s.terms()) {
    Point neg(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) neg[i] = -m[i];
    out.add(neg, c);
  }
  return out;
}

CharacterSum substitute_inverse(const CharacterSum& s) {
  return s.map_values([](const LaurentPoly& p) { return substitute_inverse(p); });
}

}  // namespace wehrhart
