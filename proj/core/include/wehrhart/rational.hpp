#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace wehrhart {

/// Arbitrary-precision rational, always kept canonical (lowest terms, q > 0).
using Rat = mpq_class;

/// Integer lattice vector; an element of M = Z^n.
using Point = std::vector<std::int64_t>;

/// "p/q", or "p" when q = 1.
std::string to_string(const Rat& r);

/// Inverse of to_string. Accepts "p", "p/q" and a leading sign; throws ParseError.
Rat parse_rat(std::string_view text);

/// (-1)^k as a rational.
inline Rat sign_power(int k) { return (k % 2 == 0) ? Rat(1) : Rat(-1); }

}  // namespace wehrhart
