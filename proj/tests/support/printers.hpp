#pragma once

// gtest value printers.

#include <ostream>

#include "wehrhart/character_sum.hpp"
#include "wehrhart/laurent_poly.hpp"
#include "wehrhart/stanley.hpp"
#include "wehrhart/weights.hpp"
#include "wehrhart/zpoly.hpp"

namespace wehrhart {

inline void PrintTo(const LaurentPoly& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const ZPoly& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const CharacterSum& s, std::ostream* os) { *os << s.to_string(); }
inline void PrintTo(const WeightFunction& f, std::ostream* os) { *os << f.to_string(); }
inline void PrintTo(const PolyT& p, std::ostream* os) { *os << p.to_string(); }

}  // namespace wehrhart
