#include "wehrhart/homog_poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include "wehrhart/error.hpp"

namespace wehrhart {

HomogPoly::HomogPoly(int n, std::vector<Monomial> monomials) : n_(n) {
  if (n < 1) throw ValidationError("polynomial dimension must be positive");
  std::map<std::vector<int>, Rat> merged;
  std::optional<int> degree;
  for (auto& mono : monomials) {
    if (static_cast<int>(mono.exponents.size()) != n) {
      throw ValidationError("monomial exponent vector has length " +
                            std::to_string(mono.exponents.size()) + ", expected " +
                            std::to_string(n));
    }
    if (std::any_of(mono.exponents.begin(), mono.exponents.end(), [](int e) { return e < 0; })) {
      throw ValidationError("negative exponent in polynomial");
    }
    const int d = std::accumulate(mono.exponents.begin(), mono.exponents.end(), 0);
    mono.coeff.canonicalize();
    if (mono.coeff == 0) continue;
    if (degree && *degree != d) {
      throw ValidationError("polynomial is not homogeneous (degrees " + std::to_string(*degree) +
                            " and " + std::to_string(d) + ")");
    }
    degree = d;
    merged[mono.exponents] += mono.coeff;
  }
  for (auto& [exps, c] : merged) {
    if (c != 0) monomials_.push_back({exps, c});
  }
  degree_ = monomials_.empty() ? 0 : *degree;
}

HomogPoly HomogPoly::constant(int n, const Rat& c) {
  return HomogPoly(n, {Monomial{std::vector<int>(static_cast<std::size_t>(n), 0), c}});
}

HomogPoly HomogPoly::linear(std::span<const Rat> coeffs) {
  const int n = static_cast<int>(coeffs.size());
  std::vector<Monomial> monos;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    monos.push_back({std::move(e), coeffs[static_cast<std::size_t>(i)]});
  }
  return HomogPoly(n, std::move(monos));
}

HomogPoly HomogPoly::sum_of_squares(int n) {
  std::vector<Monomial> monos;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 2;
    monos.push_back({std::move(e), Rat(1)});
  }
  return HomogPoly(n, std::move(monos));
}

Rat HomogPoly::operator()(std::span<const std::int64_t> m) const {
  if (static_cast<int>(m.size()) != n_) {
    throw ValidationError("point has dimension " + std::to_string(m.size()) +
                          ", polynomial expects " + std::to_string(n_));
  }
  Rat total = 0;
  for (const auto& mono : monomials_) {
    mpz_class term = 1;
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (int e = 0; e < mono.exponents[i]; ++e) term *= static_cast<long>(m[i]);
    }
    total += mono.coeff * term;
  }
  return total;
}

std::string HomogPoly::to_string() const {
  if (monomials_.empty()) return "0";
  std::string out;
  for (const auto& mono : monomials_) {
    if (!out.empty()) out += " + ";
    out += wehrhart::to_string(mono.coeff);
    for (std::size_t i = 0; i < mono.exponents.size(); ++i) {
      if (mono.exponents[i] == 0) continue;
      out += "*m" + std::to_string(i + 1);
      if (mono.exponents[i] > 1) out += "^" + std::to_string(mono.exponents[i]);
    }
  }
  return out;
}

}  // namespace wehrhart
