#include "wehrhart/rational.hpp"

#include <cctype>

#include "wehrhart/error.hpp"

namespace wehrhart {

std::string to_string(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  return c.get_str();
}

Rat parse_rat(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational literal");
  std::size_t slash = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '/') {
      ++slash;
      continue;
    }
    if ((c == '-' || c == '+') && (i == 0)) continue;
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("invalid rational literal '" + s + "'");
    }
  }
  if (slash > 1 || s.back() == '/' || s.front() == '/') {
    throw ParseError("invalid rational literal '" + s + "'");
  }
  if (s.front() == '+') s.erase(0, 1);
  Rat r;
  if (r.set_str(s, 10) != 0) throw ParseError("invalid rational literal '" + s + "'");
  if (r.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

}  // namespace wehrhart
