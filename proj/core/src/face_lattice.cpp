#include "wehrhart/face_lattice.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "wehrhart/error.hpp"

namespace wehrhart {

GradedPoset GradedPoset::without(std::size_t element) const {
  GradedPoset out;
  for (std::size_t a = 0; a < size(); ++a) {
    if (a == element) continue;
    out.rank.push_back(rank[a]);
    std::vector<char> row;
    for (std::size_t b = 0; b < size(); ++b) {
      if (b != element) row.push_back(leq[a][b]);
    }
    out.leq.push_back(std::move(row));
  }
  return out;
}

bool validate_eulerian(const GradedPoset& poset) {
  const std::size_t n = poset.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !poset.leq[a][b]) continue;
      int balance = 0;
      for (std::size_t e = 0; e < n; ++e) {
        if (poset.leq[a][e] && poset.leq[e][b]) balance += (poset.rank[e] % 2 == 0) ? 1 : -1;
      }
      if (balance != 0) return false;
    }
  }
  return true;
}

std::size_t FacePartition::total() const {
  std::size_t t = 0;
  for (const auto& pts : by_face) t += pts.size();
  return t;
}

FaceLattice::FaceLattice(LatticePolytope polytope) : polytope_(std::move(polytope)) {
  const auto& verts = polytope_.vertices();
  const auto& facets = polytope_.facets();
  const int nv = static_cast<int>(verts.size());

  std::vector<std::vector<int>> facet_vertices(facets.size());
  for (std::size_t f = 0; f < facets.size(); ++f) {
    for (int v = 0; v < nv; ++v) {
      if (polytope_.slack(verts[static_cast<std::size_t>(v)], f) == 0) {
        facet_vertices[f].push_back(v);
      }
    }
  }

  // Close {all vertices} under intersection with facets.
  std::vector<int> all(static_cast<std::size_t>(nv));
  for (int v = 0; v < nv; ++v) all[static_cast<std::size_t>(v)] = v;
  std::set<std::vector<int>> seen{all};
  std::deque<std::vector<int>> queue{all};
  while (!queue.empty()) {
    std::vector<int> current = std::move(queue.front());
    queue.pop_front();
    for (const auto& fv : facet_vertices) {
      std::vector<int> next;
      std::set_intersection(current.begin(), current.end(), fv.begin(), fv.end(),
                            std::back_inserter(next));
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }

  for (const auto& vs : seen) {
    Face face;
    face.vertices = vs;
    std::vector<Point> pts;
    for (int v : vs) pts.push_back(verts[static_cast<std::size_t>(v)]);
    face.dim = affine_dimension(pts);
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (std::includes(facet_vertices[f].begin(), facet_vertices[f].end(), vs.begin(), vs.end())) {
        face.tight_facets.push_back(static_cast<int>(f));
      }
    }
    faces_.push_back(std::move(face));
  }
  std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
    return std::tie(a.dim, a.vertices) < std::tie(b.dim, b.vertices);
  });

  const std::size_t count = faces_.size();
  leq_.assign(count, std::vector<char>(count, 0));
  up_.resize(count);
  down_.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    faces_[i].id = static_cast<int>(i);
    by_tight_.emplace(faces_[i].tight_facets, static_cast<int>(i));
  }
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      const auto& va = faces_[a].vertices;
      const auto& vb = faces_[b].vertices;
      if (std::includes(vb.begin(), vb.end(), va.begin(), va.end())) {
        leq_[a][b] = 1;
        up_[a].push_back(static_cast<int>(b));
        down_[b].push_back(static_cast<int>(a));
      }
    }
  }
}

std::vector<std::pair<int, int>> FaceLattice::strict_order() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size(); ++a) {
    for (int b : up_set(a)) {
      if (a != b) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<int> FaceLattice::f_vector() const {
  std::vector<int> f(static_cast<std::size_t>(dim()) + 2, 0);
  for (const auto& face : faces_) ++f[static_cast<std::size_t>(face.dim + 1)];
  return f;
}

std::optional<int> FaceLattice::find_by_tight_facets(std::span<const int> tight) const {
  auto it = by_tight_.find(std::vector<int>(tight.begin(), tight.end()));
  if (it == by_tight_.end()) return std::nullopt;
  return it->second;
}

GradedPoset FaceLattice::poset() const {
  GradedPoset p;
  for (const auto& face : faces_) p.rank.push_back(face.dim + 1);
  p.leq = leq_;
  return p;
}

GradedPoset FaceLattice::reversed_poset() const {
  GradedPoset p;
  const std::size_t count = faces_.size();
  for (const auto& face : faces_) p.rank.push_back(dim() - face.dim);
  p.leq.assign(count, std::vector<char>(count, 0));
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) p.leq[a][b] = leq_[b][a];
  }
  return p;
}

const FacePartition& FaceLattice::partition(std::int64_t dilation) const {
  {
    std::lock_guard lock(cache_mutex_);
    auto it = partitions_.find(dilation);
    if (it != partitions_.end()) return *it->second;
  }
  auto computed = std::make_unique<FacePartition>(points_by_face(*this, dilation));
  std::lock_guard lock(cache_mutex_);
  auto [it, inserted] = partitions_.try_emplace(dilation, std::move(computed));
  return *it->second;
}

std::shared_ptr<const FaceLattice> build_face_lattice(LatticePolytope polytope) {
  return std::make_shared<const FaceLattice>(std::move(polytope));
}

FacePartition points_by_face(const FaceLattice& lattice, std::int64_t dilation) {
  if (dilation <= 0) throw ValidationError("dilation must be positive");
  const auto& poly = lattice.polytope();
  const std::size_t n = static_cast<std::size_t>(poly.dim());
  Point lo(n, 0);
  Point hi(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    lo[k] = hi[k] = poly.vertices().front()[k];
    for (const auto& v : poly.vertices()) {
      lo[k] = std::min(lo[k], v[k]);
      hi[k] = std::max(hi[k], v[k]);
    }
    lo[k] *= dilation;
    hi[k] *= dilation;
  }

  FacePartition out;
  out.dilation = dilation;
  out.by_face.resize(static_cast<std::size_t>(lattice.size()));
  Point m = lo;
  std::vector<int> tight;
  while (true) {
    tight.clear();
    bool inside = true;
    for (std::size_t f = 0; f < poly.facets().size(); ++f) {
      const std::int64_t s = poly.slack(m, f, dilation);
      if (s < 0) {
        inside = false;
        break;
      }
      if (s == 0) tight.push_back(static_cast<int>(f));
    }
    if (inside) {
      auto id = lattice.find_by_tight_facets(tight);
      if (!id || *id == lattice.empty_face()) {
        throw std::logic_error("lattice point with no matching face");
      }
      out.by_face[static_cast<std::size_t>(*id)].push_back(m);
    }
    // odometer, last coordinate fastest: lexicographic scan order
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (m[k] < hi[k]) {
        ++m[k];
        break;
      }
      m[k] = lo[k];
      if (k == 0) return out;
    }
  }
}

bool validate_eulerian(const FaceLattice& lattice) { return validate_eulerian(lattice.poset()); }

}  // namespace wehrhart
