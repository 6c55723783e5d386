#include "gsic/gellmann.hpp"

#include <cmath>
#include <string>

#include "gsic/errors.hpp"

namespace gsic {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

ComplexMatrix symmetric(std::size_t d, std::size_t j, std::size_t k) {
  ComplexMatrix m(d, d);
  m(j, k) = kInvSqrt2;
  m(k, j) = kInvSqrt2;
  return m;
}

ComplexMatrix antisymmetric(std::size_t d, std::size_t j, std::size_t k) {
  ComplexMatrix m(d, d);
  m(j, k) = Complex(0.0, -kInvSqrt2);
  m(k, j) = Complex(0.0, kInvSqrt2);
  return m;
}

// diag(1, ..., 1, -r, 0, ...) / sqrt(r (r + 1)) with r leading ones.
ComplexMatrix diagonal_op(std::size_t d, std::size_t r) {
  ComplexMatrix m(d, d);
  const double norm = 1.0 / std::sqrt(static_cast<double>(r * (r + 1)));
  for (std::size_t i = 0; i < r; ++i) m(i, i) = norm;
  m(r, r) = -static_cast<double>(r) * norm;
  return m;
}

}  // namespace

HermitianBasis gellmann_basis(std::size_t d) {
  if (d < 2) {
    throw ParameterError("gellmann_basis: dimension must be >= 2, got " +
                         std::to_string(d));
  }

  std::vector<ComplexMatrix> elements;
  elements.reserve(d * d - 1);
  if (d == 3) {
    elements.push_back(diagonal_op(3, 1));
    elements.push_back(symmetric(3, 0, 1));
    elements.push_back(symmetric(3, 0, 2));
    elements.push_back(antisymmetric(3, 0, 1));
    elements.push_back(diagonal_op(3, 2));
    elements.push_back(symmetric(3, 1, 2));
    elements.push_back(antisymmetric(3, 0, 2));
    elements.push_back(antisymmetric(3, 1, 2));
  } else {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = j + 1; k < d; ++k) {
        elements.push_back(symmetric(d, j, k));
      }
    }
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = j + 1; k < d; ++k) {
        elements.push_back(antisymmetric(d, j, k));
      }
    }
    for (std::size_t r = 1; r < d; ++r) elements.push_back(diagonal_op(d, r));
  }

  ComplexMatrix sum(d, d);
  for (const auto& f : elements) sum += f;
  return HermitianBasis{d, std::move(elements), std::move(sum)};
}

}  // namespace gsic
