#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropdyn {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad dimensions, duplicate arcs, non-finite weights,
/// zero rows in a transition matrix, unknown state indices.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// The input is well formed but violates a modelling assumption
/// (non-surjective, acyclic, reducible, non-deterministic where required).
class AssumptionViolation : public Error {
 public:
  using Error::Error;
};

/// Raised when a closure is requested for a matrix with a cycle of
/// positive mean; carries one offending cycle.
class PositiveCycleError : public AssumptionViolation {
 public:
  PositiveCycleError(const std::string& what, std::vector<std::size_t> cycle)
      : AssumptionViolation(what), cycle_(std::move(cycle)) {}

  const std::vector<std::size_t>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<std::size_t> cycle_;
};

/// Spectral computations need a single strongly connected component.
class ReducibleSystemError : public AssumptionViolation {
 public:
  ReducibleSystemError(const std::string& what,
                       std::vector<std::vector<std::size_t>> components)
      : AssumptionViolation(what), components_(std::move(components)) {}

  const std::vector<std::vector<std::size_t>>& components() const noexcept {
    return components_;
  }

 private:
  std::vector<std::vector<std::size_t>> components_;
};

/// Zero-temperature limits and the rate function are only defined when the
/// critical graph has a single class.
class MultipleClassesError : public Error {
 public:
  MultipleClassesError(const std::string& what, std::size_t classes)
      : Error(what), classes_(classes) {}

  std::size_t classes() const noexcept { return classes_; }

 private:
  std::size_t classes_;
};

/// An iterative procedure hit its iteration cap.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace tropdyn
