#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wehrhart/rational.hpp"

namespace wehrhart::corpus {

struct Entry {
  std::string name;
  std::vector<Point> points;
};

inline constexpr std::uint64_t kRandomPolytopeSeed = 20261016;

std::vector<Point> segment();
std::vector<Point> unit_square();
std::vector<Point> unit_cube();
/// conv{0, e_1, ..., e_n}
std::vector<Point> standard_simplex(int n);
/// Pyramid over the unit square with apex (0,0,1).
std::vector<Point> square_pyramid();
/// count points drawn from {0..range}^n with a portable mt19937_64 stream.
std::vector<Point> random_points(std::uint64_t seed, int n, int count, int range);

/// segment, square, cube, simplex1..4, pyramid, random3.
std::vector<Entry> standard();

}  // namespace wehrhart::corpus
