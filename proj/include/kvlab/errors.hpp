#pragma once

#include <stdexcept>
#include <string>

namespace kvlab {

// Operand shapes disagree (vector lengths, tensor sizes, ambient dimensions).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input outside the mathematical domain of an operation (e.g. a 0-cochain
// not in J(A), a non-KV base algebra, violated side conditions).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Degree or dimension the operation does not support.
class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed textual input (JSON, rationals, expressions).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed input carrying an invalid value (zero denominator, ...).
class ValueError : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace kvlab
