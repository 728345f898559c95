#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "wehrhart/polytope.hpp"

namespace wehrhart {

struct Face {
  int id = 0;
  std::vector<int> vertices;      ///< sorted vertex indices
  std::vector<int> tight_facets;  ///< sorted facet indices containing the face
  int dim = -1;

  friend bool operator==(const Face&, const Face&) = default;
};

/// Finite graded poset given by an explicit order matrix. Used for the face
/// lattice, its reversal, and arbitrary test posets.
struct GradedPoset {
  std::vector<int> rank;
  std::vector<std::vector<char>> leq;  ///< leq[a][b] iff a <= b

  std::size_t size() const { return rank.size(); }
  /// Drops one element (used to build deliberately broken posets).
  GradedPoset without(std::size_t element) const;
};

/// Every nontrivial interval [a, b] has equally many elements of even and odd rank.
bool validate_eulerian(const GradedPoset& poset);

/// Lattice points of a dilation l*P, partitioned by the face whose relative
/// interior contains them. Indexed by face id; each list is lexicographic.
struct FacePartition {
  std::int64_t dilation = 0;
  std::vector<std::vector<Point>> by_face;

  std::size_t total() const;
};

/// Face lattice of a lattice polytope, including the empty face and P.
/// Faces are sorted by (dim, vertex set); the empty face has id 0 and P has
/// the last id. Instances are immutable apart from an internal, thread-safe
/// cache of lattice-point partitions.
class FaceLattice {
 public:
  explicit FaceLattice(LatticePolytope polytope);
  FaceLattice(const FaceLattice&) = delete;
  FaceLattice& operator=(const FaceLattice&) = delete;

  const LatticePolytope& polytope() const { return polytope_; }
  int dim() const { return polytope_.dim(); }
  std::span<const Face> faces() const { return faces_; }
  const Face& face(int id) const { return faces_.at(static_cast<std::size_t>(id)); }
  int size() const { return static_cast<int>(faces_.size()); }
  int empty_face() const { return 0; }
  int top() const { return size() - 1; }

  bool leq(int a, int b) const {
    return leq_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != 0;
  }
  /// Faces above q (inclusive), in id order.
  const std::vector<int>& up_set(int q) const { return up_[static_cast<std::size_t>(q)]; }
  /// Faces below q (inclusive), in id order.
  const std::vector<int>& down_set(int q) const { return down_[static_cast<std::size_t>(q)]; }

  /// All pairs a <= b with a != b.
  std::vector<std::pair<int, int>> strict_order() const;
  /// f-vector indexed by dim + 1, from the empty face to P.
  std::vector<int> f_vector() const;
  std::optional<int> find_by_tight_facets(std::span<const int> tight) const;

  /// rank = dim + 1
  GradedPoset poset() const;
  /// Reversed order with rank n - dim; the face poset of the polar polytope.
  GradedPoset reversed_poset() const;

  /// Cached points_by_face.
  const FacePartition& partition(std::int64_t dilation) const;

 private:
  LatticePolytope polytope_;
  std::vector<Face> faces_;
  std::vector<std::vector<char>> leq_;
  std::vector<std::vector<int>> up_;
  std::vector<std::vector<int>> down_;
  std::map<std::vector<int>, int> by_tight_;

  mutable std::mutex cache_mutex_;
  mutable std::map<std::int64_t, std::unique_ptr<FacePartition>> partitions_;
};

std::shared_ptr<const FaceLattice> build_face_lattice(LatticePolytope polytope);

/// Scans the integer bounding box of l*P and assigns each lattice point to
/// the face whose tight-facet set matches the point's. Throws for l <= 0.
FacePartition points_by_face(const FaceLattice& lattice, std::int64_t dilation);

bool validate_eulerian(const FaceLattice& lattice);

}  // namespace wehrhart
