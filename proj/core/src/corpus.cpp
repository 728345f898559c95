#include "wehrhart/corpus.hpp"

#include <random>

namespace wehrhart::corpus {

std::vector<Point> segment() { return {{0}, {1}}; }

std::vector<Point> unit_square() { return {{0, 0}, {1, 0}, {0, 1}, {1, 1}}; }

std::vector<Point> unit_cube() {
  std::vector<Point> pts;
  for (int x = 0; x <= 1; ++x) {
    for (int y = 0; y <= 1; ++y) {
      for (int z = 0; z <= 1; ++z) pts.push_back({x, y, z});
    }
  }
  return pts;
}

std::vector<Point> standard_simplex(int n) {
  std::vector<Point> pts{Point(static_cast<std::size_t>(n), 0)};
  for (int i = 0; i < n; ++i) {
    Point e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    pts.push_back(std::move(e));
  }
  return pts;
}

std::vector<Point> square_pyramid() {
  return {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}};
}

std::vector<Point> random_points(std::uint64_t seed, int n, int count, int range) {
  std::mt19937_64 rng(seed);
  std::vector<Point> pts;
  for (int i = 0; i < count; ++i) {
    Point p(static_cast<std::size_t>(n));
    for (auto& c : p) c = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(range + 1));
    pts.push_back(std::move(p));
  }
  return pts;
}

std::vector<Entry> standard() {
  std::vector<Entry> out{
      {"segment", segment()},
      {"square", unit_square()},
      {"cube", unit_cube()},
  };
  for (int n = 1; n <= 4; ++n) out.push_back({"simplex" + std::to_string(n), standard_simplex(n)});
  out.push_back({"pyramid", square_pyramid()});
  out.push_back({"random3", random_points(kRandomPolytopeSeed, 3, 9, 3)});
  return out;
}

}  // namespace wehrhart::corpus
