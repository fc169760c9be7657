#pragma once

#include <stdexcept>
#include <string>

namespace tpcone {

// Bad arguments: shape mismatches, out-of-range indices, malformed input.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Refused because the computation would exceed a configured size cap.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure: singular solve, non-convergence, failed validation.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// A verification routine was handed a matrix outside its class precondition.
class ClassificationError : public std::runtime_error {
 public:
  explicit ClassificationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tpcone
