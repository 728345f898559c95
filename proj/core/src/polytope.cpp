#include "wehrhart/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "wehrhart/error.hpp"

namespace wehrhart {
namespace {

/// Rank of an integer matrix given as rows, by exact elimination over Q.
int matrix_rank(std::vector<std::vector<Rat>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    auto pivot = std::find_if(rows.begin() + rank, rows.end(),
                              [c](const std::vector<Rat>& r) { return r[c] != 0; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, pivot);
    const auto& p = rows[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const Rat factor = rows[r][c] / p[c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * p[k];
    }
    ++rank;
  }
  return rank;
}

mpz_class determinant(std::vector<std::vector<mpz_class>> a) {
  // Bareiss fraction-free elimination.
  const std::size_t n = a.size();
  if (n == 0) return 1;
  mpz_class sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

/// Normal of the hyperplane through n points of R^n via the generalized
/// cross product of the n-1 difference vectors; zero if they are dependent.
std::vector<mpz_class> hyperplane_normal(std::span<const Point* const> pts) {
  const std::size_t n = pts.front()->size();
  std::vector<std::vector<mpz_class>> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<mpz_class> d(n);
    for (std::size_t k = 0; k < n; ++k) {
      d[k] = static_cast<long>((*pts[i])[k] - (*pts[0])[k]);
    }
    diffs.push_back(std::move(d));
  }
  std::vector<mpz_class> normal(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<mpz_class>> minor;
    for (const auto& row : diffs) {
      std::vector<mpz_class> r;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != col) r.push_back(row[k]);
      }
      minor.push_back(std::move(r));
    }
    normal[col] = determinant(std::move(minor));
    if (col % 2 == 1) normal[col] = -normal[col];
  }
  return normal;
}

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Calls fn on every k-subset of {0..n-1} as a sorted index vector.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

int affine_dimension(std::span<const Point> points) {
  if (points.empty()) return -1;
  std::vector<std::vector<Rat>> rows;
  for (std::size_t i = 1; i < points.size(); ++i) {
    std::vector<Rat> r(points[i].size());
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = static_cast<long>(points[i][k] - points[0][k]);
    rows.push_back(std::move(r));
  }
  return matrix_rank(std::move(rows));
}

std::int64_t LatticePolytope::slack(std::span<const std::int64_t> m, std::size_t facet,
                                    std::int64_t dilation) const {
  const Facet& f = facets_[facet];
  return dot(m, f.normal) + dilation * f.offset;
}

bool LatticePolytope::contains(std::span<const std::int64_t> m, std::int64_t dilation) const {
  for (std::size_t f = 0; f < facets_.size(); ++f) {
    if (slack(m, f, dilation) < 0) return false;
  }
  return true;
}

std::string LatticePolytope::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  };
  mix(static_cast<std::uint64_t>(n_));
  for (const auto& v : vertices_) {
    for (auto c : v) mix(static_cast<std::uint64_t>(c));
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kHex[h & 0xfU];
    h >>= 4;
  }
  return out;
}

LatticePolytope facet_presentation(std::span<const Point> input) {
  if (input.empty()) throw ValidationError("polytope needs at least one point");
  const std::size_t n = input.front().size();
  if (n == 0) throw ValidationError("points must have positive dimension");
  if (n > static_cast<std::size_t>(kMaxDimension)) {
    throw ValidationError("dimension " + std::to_string(n) + " exceeds the supported maximum " +
                          std::to_string(kMaxDimension));
  }
  for (const auto& p : input) {
    if (p.size() != n) throw ValidationError("points have inconsistent dimensions");
  }
  std::set<Point> unique(input.begin(), input.end());
  std::vector<Point> points(unique.begin(), unique.end());
  if (points.size() < n + 1 || affine_dimension(points) != static_cast<int>(n)) {
    throw ValidationError("points do not affinely span R^" + std::to_string(n) +
                          " (polytope is not full-dimensional)");
  }

  std::set<Facet> facets;
  std::vector<const Point*> chosen(n);
  for_each_subset(points.size(), n, [&](const std::vector<std::size_t>& idx) {
    for (std::size_t i = 0; i < n; ++i) chosen[i] = &points[idx[i]];
    std::vector<mpz_class> normal = hyperplane_normal(chosen);
    mpz_class g = 0;
    for (const auto& c : normal) g = gcd(g, c);
    if (g == 0) return;
    Point u(n);
    for (std::size_t k = 0; k < n; ++k) u[k] = mpz_class(normal[k] / g).get_si();
    const std::int64_t level = dot(points[idx[0]], u);
    bool above = false;
    bool below = false;
    for (const auto& p : points) {
      const std::int64_t v = dot(p, u);
      above |= v > level;
      below |= v < level;
    }
    if (above && below) return;
    if (below) {
      for (auto& c : u) c = -c;
      facets.insert({u, level});
    } else {
      facets.insert({u, -level});
    }
  });

  LatticePolytope poly;
  poly.n_ = static_cast<int>(n);
  poly.facets_.assign(facets.begin(), facets.end());
  // A point is a vertex iff the normals of its tight facets span R^n.
  for (const auto& p : points) {
    std::vector<std::vector<Rat>> normals;
    for (const auto& f : poly.facets_) {
      if (dot(p, f.normal) + f.offset == 0) {
        normals.emplace_back(f.normal.begin(), f.normal.end());
      }
    }
    if (matrix_rank(std::move(normals)) == static_cast<int>(n)) poly.vertices_.push_back(p);
  }
  return poly;
}

bool is_simple(const LatticePolytope& polytope) {
  for (const auto& v : polytope.vertices()) {
    std::size_t tight = 0;
    for (std::size_t f = 0; f < polytope.facets().size(); ++f) {
      if (polytope.slack(v, f) == 0) ++tight;
    }
    if (tight != static_cast<std::size_t>(polytope.dim())) return false;
  }
  return true;
}

}  // namespace wehrhart
