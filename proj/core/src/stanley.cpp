#include "wehrhart/stanley.hpp"

#include "wehrhart/error.hpp"

namespace wehrhart {
namespace {

std::vector<Rat> multiply(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rat> out(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

/// (t - 1)^k
std::vector<Rat> t_minus_one_pow(int k) {
  std::vector<Rat> out{Rat(1)};
  for (int i = 0; i < k; ++i) out = multiply(out, {Rat(-1), Rat(1)});
  return out;
}

}  // namespace

PolyT::PolyT(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat PolyT::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

LaurentPoly PolyT::at_minus_y() const {
  LaurentPoly out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out += LaurentPoly::monomial(Rat(coeffs_[i] * sign_power(static_cast<int>(i))),
                                 static_cast<int>(i));
  }
  return out;
}

PolyT PolyT::from_laurent(const LaurentPoly& p) {
  if (p.is_zero()) return PolyT();
  if (*p.min_exponent() < 0) throw ValidationError("Laurent polynomial has negative exponents");
  std::vector<Rat> c(static_cast<std::size_t>(*p.max_exponent()) + 1, Rat(0));
  for (const auto& [k, v] : p.terms()) c[static_cast<std::size_t>(k)] = v;
  return PolyT(std::move(c));
}

std::string PolyT::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += wehrhart::to_string(coeffs_[i]);
    if (i == 1) out += "*t";
    if (i > 1) out += "*t^" + std::to_string(i);
  }
  return out;
}

bool is_palindromic(const PolyT& p, int degree) {
  if (p.degree() > degree) return false;
  for (int i = 0; i <= degree; ++i) {
    if (p.coeff(i) != p.coeff(degree - i)) return false;
  }
  return true;
}

StanleyTable::StanleyTable(GradedPoset poset) : poset_(std::move(poset)) {
  if (!validate_eulerian(poset_)) throw ValidationError("poset is not Eulerian");
}

StanleyPolys StanleyTable::interval(int bottom, int top) const {
  const auto n = static_cast<int>(poset_.size());
  if (bottom < 0 || top < 0 || bottom >= n || top >= n) {
    throw ValidationError("interval endpoint out of range");
  }
  if (!poset_.leq[static_cast<std::size_t>(bottom)][static_cast<std::size_t>(top)]) {
    throw ValidationError("interval endpoints are not comparable");
  }
  std::lock_guard lock(mutex_);
  return compute(bottom, top);
}

const StanleyPolys& StanleyTable::compute(int bottom, int top) const {
  if (auto it = memo_.find({bottom, top}); it != memo_.end()) return it->second;
  StanleyPolys result{PolyT::one(), PolyT::one()};
  if (bottom != top) {
    const auto b = static_cast<std::size_t>(bottom);
    const auto t = static_cast<std::size_t>(top);
    const int r = poset_.rank[t] - poset_.rank[b] - 1;
    std::vector<Rat> f;
    for (std::size_t x = 0; x < poset_.size(); ++x) {
      if (x == t || !poset_.leq[b][x] || !poset_.leq[x][t]) continue;
      const PolyT gx = compute(bottom, static_cast<int>(x)).g;
      const int rank_x = poset_.rank[x] - poset_.rank[b];
      auto term = multiply(gx.coefficients(), t_minus_one_pow(r - rank_x));
      if (term.size() > f.size()) f.resize(term.size(), Rat(0));
      for (std::size_t i = 0; i < term.size(); ++i) f[i] += term[i];
    }
    result.f = PolyT(f);
    std::vector<Rat> g;
    for (int i = 0; i <= r / 2; ++i) g.push_back(result.f.coeff(i) - result.f.coeff(i - 1));
    result.g = PolyT(std::move(g));
  }
  return memo_.emplace(std::pair{bottom, top}, std::move(result)).first->second;
}

StanleyPolys stanley_fg(const GradedPoset& poset) {
  if (poset.size() == 0) throw ValidationError("empty poset");
  int bottom = -1;
  int top = -1;
  for (std::size_t x = 0; x < poset.size(); ++x) {
    bool is_min = true;
    bool is_max = true;
    for (std::size_t y = 0; y < poset.size(); ++y) {
      is_min = is_min && poset.leq[x][y];
      is_max = is_max && poset.leq[y][x];
    }
    if (is_min) bottom = static_cast<int>(x);
    if (is_max) top = static_cast<int>(x);
  }
  if (bottom < 0 || top < 0) throw ValidationError("poset lacks a unique minimum or maximum");
  return StanleyTable(poset).interval(bottom, top);
}

PolarGTable::PolarGTable(std::shared_ptr<const FaceLattice> lattice)
    : lattice_(std::move(lattice)), reversed_(lattice_->reversed_poset()) {}

PolyT PolarGTable::polar_g(int q, int q_prime) const {
  if (q == lattice_->empty_face() || q_prime == lattice_->empty_face()) {
    throw ValidationError("polar_g needs nonempty faces");
  }
  if (!lattice_->leq(q, q_prime)) {
    throw ValidationError("face " + std::to_string(q) + " is not contained in face " +
                          std::to_string(q_prime));
  }
  return reversed_.g(q_prime, q);
}

WeightFunction PolarGTable::g_weights(int q_prime) const {
  if (q_prime == lattice_->empty_face()) throw ValidationError("g-weights need a nonempty face");
  std::map<int, LaurentPoly> values;
  for (int q : lattice_->down_set(q_prime)) {
    if (q == lattice_->empty_face()) continue;
    values.emplace(q, polar_g(q, q_prime).at_minus_y());
  }
  return WeightFunction(lattice_, std::move(values));
}

PolyT PolarGTable::h_polynomial() const {
  return reversed_.f(lattice_->top(), lattice_->empty_face());
}

PolyT polar_g(const std::shared_ptr<const FaceLattice>& lattice, int q, int q_prime) {
  return PolarGTable(lattice).polar_g(q, q_prime);
}

WeightFunction g_weight_function(const std::shared_ptr<const FaceLattice>& lattice, int q_prime) {
  return PolarGTable(lattice).g_weights(q_prime);
}

PolyT h_polynomial(const std::shared_ptr<const FaceLattice>& lattice) {
  return PolarGTable(lattice).h_polynomial();
}

}  // namespace wehrhart
