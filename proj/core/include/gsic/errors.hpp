#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gsic {

/// Shape or dimension of an argument does not fit the operation.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A scalar parameter lies outside its admissible range (q, f, x, a, d ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An object failed a numerical invariant check (Hermiticity, unit trace,
/// positivity, POVM identities).
class ValidationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The construction parameter t produced a POVM element with a negative
/// eigenvalue.
class InfeasibleParameterError : public std::domain_error {
 public:
  InfeasibleParameterError(const std::string& what, std::size_t element,
                           double min_eigenvalue)
      : std::domain_error(what),
        element_(element),
        min_eigenvalue_(min_eigenvalue) {}

  std::size_t element() const noexcept { return element_; }
  double min_eigenvalue() const noexcept { return min_eigenvalue_; }

 private:
  std::size_t element_;
  double min_eigenvalue_;
};

}  // namespace gsic
