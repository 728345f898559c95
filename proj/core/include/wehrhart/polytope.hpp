#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wehrhart/rational.hpp"

namespace wehrhart {

/// Facet inequality <m, normal> >= -offset with a primitive inward normal.
struct Facet {
  Point normal;
  std::int64_t offset = 0;

  friend auto operator<=>(const Facet&, const Facet&) = default;
};

/// Largest supported ambient dimension.
inline constexpr int kMaxDimension = 6;

/// Full-dimensional lattice polytope with its unique facet presentation.
/// Vertices are stored in lexicographic order, facets in lexicographic
/// (normal, offset) order.
class LatticePolytope {
 public:
  int dim() const { return n_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }

  /// <m, u_F> + dilation * a_F; zero exactly on the facet of dilation * P.
  std::int64_t slack(std::span<const std::int64_t> m, std::size_t facet,
                     std::int64_t dilation = 1) const;
  bool contains(std::span<const std::int64_t> m, std::int64_t dilation = 1) const;

  /// Stable 64-bit FNV-1a digest of the vertex list, hex encoded.
  std::string hash() const;

  friend bool operator==(const LatticePolytope&, const LatticePolytope&) = default;

 private:
  friend LatticePolytope facet_presentation(std::span<const Point> points);

  int n_ = 0;
  std::vector<Point> vertices_;
  std::vector<Facet> facets_;
};

/// Convex hull of an integer point set in facet form. Duplicates are removed
/// and points that are not vertices are dropped. Throws ValidationError when
/// the points do not affinely span R^n or n exceeds kMaxDimension.
LatticePolytope facet_presentation(std::span<const Point> points);

/// Every vertex lies on exactly n facets.
bool is_simple(const LatticePolytope& polytope);

/// Dimension of the affine hull of the points (-1 for the empty set).
int affine_dimension(std::span<const Point> points);

}  // namespace wehrhart
