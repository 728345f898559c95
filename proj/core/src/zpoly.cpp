#include "wehrhart/zpoly.hpp"

#include <set>

#include "wehrhart/error.hpp"

namespace wehrhart {

ZPoly::ZPoly(std::vector<LaurentPoly> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

LaurentPoly ZPoly::operator()(const Rat& z) const {
  LaurentPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= z;
    acc += *it;
  }
  return acc;
}

std::string ZPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[k].to_string() + ")";
    if (k == 1) out += "*z";
    if (k > 1) out += "*z^" + std::to_string(k);
  }
  return out;
}

ZPoly lagrange_interpolate(std::span<const InterpolationSample> samples, int degree_bound) {
  if (samples.empty()) throw ValidationError("interpolation needs at least one sample");
  if (degree_bound < 0 || samples.size() != static_cast<std::size_t>(degree_bound) + 1) {
    throw ValidationError("interpolation needs exactly degree_bound + 1 samples");
  }
  std::set<Rat> nodes;
  for (const auto& s : samples) {
    if (!nodes.insert(s.node).second) {
      throw ValidationError("duplicate interpolation node " + to_string(s.node));
    }
  }

  const std::size_t count = samples.size();
  std::vector<LaurentPoly> coeffs(count);
  for (std::size_t i = 0; i < count; ++i) {
    // basis_i(z) = prod_{j != i} (z - x_j) / (x_i - x_j), dense in z
    std::vector<Rat> basis{Rat(1)};
    Rat denom = 1;
    for (std::size_t j = 0; j < count; ++j) {
      if (j == i) continue;
      std::vector<Rat> next(basis.size() + 1, Rat(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * samples[j].node;
      }
      basis = std::move(next);
      denom *= samples[i].node - samples[j].node;
    }
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (basis[k] == 0) continue;
      coeffs[k] += samples[i].value * Rat(basis[k] / denom);
    }
  }
  return ZPoly(std::move(coeffs));
}

}  // namespace wehrhart
