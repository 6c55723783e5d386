#pragma once

#include <cstddef>
#include <vector>

#include "gsic/linalg.hpp"

namespace gsic {

/// Orthonormal basis of the traceless Hermitian operators on C^d,
/// normalized so that Tr(F_a F_b) = delta_ab, together with F = sum_a F_a.
struct HermitianBasis {
  std::size_t d;
  std::vector<ComplexMatrix> elements;  // d^2 - 1 operators
  ComplexMatrix sum;
};

/// Normalized generalized Gell-Mann matrices.
///
/// Ordering:
///  - d = 3 uses the qutrit order
///      diag(1,-1,0), sym(0,1), sym(0,2), asym(0,1),
///      diag(1,1,-2), sym(1,2), asym(0,2), asym(1,2),
///    whose sum is the matrix commonly called G9 in the qutrit examples.
///  - every other d uses symmetric pairs in lexicographic (j,k) order, then
///    antisymmetric pairs in lexicographic order, then the diagonal operators
///    diag(1,...,1,-r,0,...)/sqrt(r(r+1)) for r = 1..d-1.
///
/// sym(j,k) = (|j><k| + |k><j|)/sqrt(2) and asym(j,k) = (-i|j><k| + i|k><j|)/sqrt(2),
/// with j < k. Throws ParameterError for d < 2.
HermitianBasis gellmann_basis(std::size_t d);

}  // namespace gsic
