#pragma once

#include <stdexcept>
#include <string>

namespace wehrhart {

/// Malformed input text (JSON syntax, wrong field types, unparsable numbers).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed input that violates a domain precondition.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An interpolated Ehrhart polynomial disagreed with a direct evaluation.
class PolynomialityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace wehrhart
