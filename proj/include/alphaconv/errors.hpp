#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace alphaconv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mixed Scalar modes, or an Exact-mode request for an irrational quantity.
class ModeError : public Error {
 public:
  using Error::Error;
};

// Invalid box, point outside the open box, dimension mismatch.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An oracle or modulus could not produce a value (off-carrier lookup, bad parameters).
class EvaluationError : public Error {
 public:
  using Error::Error;
};

// Difference quotients increased along t -> 0+, which no convex function allows.
class NonConvexOracle : public EvaluationError {
 public:
  using EvaluationError::EvaluationError;
};

// Malformed problem spec; path is a JSON pointer to the offending node.
class SpecError : public Error {
 public:
  SpecError(std::string path, const std::string& message)
      : Error(path + ": " + message), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace alphaconv
