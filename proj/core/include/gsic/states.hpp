#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "gsic/linalg.hpp"

namespace gsic {

/// Bipartite dimension split of a state on C^dA (x) C^dB.
struct Split {
  std::size_t dA;
  std::size_t dB;

  friend bool operator==(const Split&, const Split&) = default;
};

/// Acceptance tolerances for DensityMatrix.
struct StateTolerances {
  double hermitian = 1e-12;
  double trace = 1e-12;
  double positivity = 1e-10;
};

/// Unit-trace positive semidefinite Hermitian operator, checked on
/// construction. Immutable afterwards.
class DensityMatrix {
 public:
  /// Throws DimensionError for non-square input or a split that does not
  /// factor the dimension, ValidationError when an invariant fails.
  explicit DensityMatrix(ComplexMatrix m, std::optional<Split> split = {},
                         StateTolerances tol = {});

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept { return matrix_.rows(); }
  const std::optional<Split>& split() const noexcept { return split_; }

  /// Split or DimensionError naming the caller.
  Split require_split(const char* op) const;

  /// Tr(rho^2).
  double purity() const;

 private:
  ComplexMatrix matrix_;
  std::optional<Split> split_;
};

/// |psi><psi| / <psi|psi>. Throws ParameterError for a zero vector.
DensityMatrix pure_state(std::span<const Complex> psi,
                         std::optional<Split> split = {});

/// rho_A (x) rho_B with split (dim A, dim B).
DensityMatrix product_state(const DensityMatrix& a, const DensityMatrix& b);

/// Maximally mixed state I/dim.
DensityMatrix maximally_mixed(std::size_t dim, std::optional<Split> split = {});

/// |Phi+><Phi+| with |Phi+> = sum_i |ii> / sqrt(d).
DensityMatrix max_entangled(std::size_t d);

/// q |Phi+><Phi+| + (1 - q) I / d^2, 0 <= q <= 1.
DensityMatrix isotropic(std::size_t d, double q);

/// Swap operator V = sum_ij |ij><ji| on C^d (x) C^d.
ComplexMatrix swap_operator(std::size_t d);

/// ((d - f) I + (d f - 1) V) / (d^3 - d), -1 <= f <= 1. Tr(V W) = f.
DensityMatrix werner(std::size_t d, double f);

/// The 3x3 PPT entangled family rho^x, 0 < x < 1, entered entry by entry.
DensityMatrix horodecki_3x3(double x);

/// q rho + (1 - q) I / dim, 0 <= q <= 1. Keeps the split of rho.
DensityMatrix mix_white_noise(const DensityMatrix& rho, double q);

}  // namespace gsic
