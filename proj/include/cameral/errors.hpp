#pragma once

#include <stdexcept>
#include <string>

namespace cameral {

// Bad inputs: malformed JSON, unknown group, arity mismatches in user data.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Numerics gave up: Newton divergence, step underflow, contour inconsistency.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Chart rejected: non-simple branch points or other genericity failures.
class GenericityError : public std::runtime_error {
 public:
  explicit GenericityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cameral
