#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bjcalc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live in different phase-space dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

class UnknownVariableError : public Error {
 public:
  using Error::Error;
};

// A computation was refused because it would exceed a configured size cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

class GridError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  enum class Kind { lexical, syntax, dimension, exponent };

  ParseError(Kind kind, std::size_t position, const std::string& message)
      : Error(message), kind_(kind), position_(position) {}

  Kind kind() const { return kind_; }
  std::size_t position() const { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

}  // namespace bjcalc
