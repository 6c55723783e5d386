#include "gsic/states.hpp"

#include <cmath>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gsic/errors.hpp"

namespace gsic {

namespace {

void require_unit_interval(double v, const char* name, const char* op) {
  if (!(v >= 0.0 && v <= 1.0)) {
    std::ostringstream msg;
    msg << op << ": " << name << " must lie in [0, 1], got " << v;
    throw ParameterError(msg.str());
  }
}

void require_dimension(std::size_t d, const char* op) {
  if (d < 2) {
    throw ParameterError(std::string(op) + ": dimension must be >= 2, got " +
                         std::to_string(d));
  }
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix m, std::optional<Split> split,
                             StateTolerances tol)
    : matrix_(std::move(m)), split_(split) {
  if (!matrix_.is_square()) {
    throw DimensionError("DensityMatrix: matrix must be square");
  }
  if (split_ && split_->dA * split_->dB != matrix_.rows()) {
    std::ostringstream msg;
    msg << "DensityMatrix: split " << split_->dA << "x" << split_->dB
        << " does not factor dimension " << matrix_.rows();
    throw DimensionError(msg.str());
  }

  const double asym = hermitian_asymmetry(matrix_);
  if (asym > tol.hermitian) {
    std::ostringstream msg;
    msg << "DensityMatrix: not Hermitian (max asymmetry " << asym << ")";
    throw ValidationError(msg.str());
  }
  const Complex tr = trace(matrix_);
  if (std::abs(tr - 1.0) > tol.trace) {
    std::ostringstream msg;
    msg << "DensityMatrix: trace " << tr.real() << "+" << tr.imag()
        << "i differs from 1";
    throw ValidationError(msg.str());
  }
  const double lo = min_eigenvalue(matrix_, tol.hermitian);
  if (lo < -tol.positivity) {
    std::ostringstream msg;
    msg << "DensityMatrix: not positive semidefinite (min eigenvalue " << lo
        << ")";
    throw ValidationError(msg.str());
  }
}

Split DensityMatrix::require_split(const char* op) const {
  if (!split_) {
    throw DimensionError(std::string(op) +
                         ": state carries no bipartite split");
  }
  return *split_;
}

double DensityMatrix::purity() const {
  return trace_of_product(matrix_, matrix_).real();
}

DensityMatrix pure_state(std::span<const Complex> psi,
                         std::optional<Split> split) {
  double norm_sq = 0.0;
  for (const auto& z : psi) norm_sq += std::norm(z);
  if (psi.empty() || norm_sq == 0.0) {
    throw ParameterError("pure_state: zero vector");
  }
  const std::size_t n = psi.size();
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = psi[i] * std::conj(psi[j]) / norm_sq;
    }
  }
  return DensityMatrix(std::move(m), split);
}

DensityMatrix product_state(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix(kron(a.matrix(), b.matrix()), Split{a.dim(), b.dim()},
                       StateTolerances{1e-12, 1e-11, 1e-10});
}

DensityMatrix maximally_mixed(std::size_t dim, std::optional<Split> split) {
  return DensityMatrix(
      ComplexMatrix::identity(dim) * Complex(1.0 / static_cast<double>(dim)),
      split);
}

DensityMatrix max_entangled(std::size_t d) {
  require_dimension(d, "max_entangled");
  std::vector<Complex> psi(d * d);
  for (std::size_t i = 0; i < d; ++i) psi[i * d + i] = 1.0;
  return pure_state(psi, Split{d, d});
}

DensityMatrix isotropic(std::size_t d, double q) {
  require_dimension(d, "isotropic");
  require_unit_interval(q, "q", "isotropic");
  const std::size_t n = d * d;
  ComplexMatrix m(n, n);
  const double noise = (1.0 - q) / static_cast<double>(n);
  const double ent = q / static_cast<double>(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m(i * d + i, j * d + j) = ent;
  }
  for (std::size_t i = 0; i < n; ++i) m(i, i) += noise;
  return DensityMatrix(std::move(m), Split{d, d});
}

ComplexMatrix swap_operator(std::size_t d) {
  ComplexMatrix v(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) v(i * d + j, j * d + i) = 1.0;
  }
  return v;
}

DensityMatrix werner(std::size_t d, double f) {
  require_dimension(d, "werner");
  if (!(f >= -1.0 && f <= 1.0)) {
    std::ostringstream msg;
    msg << "werner: f must lie in [-1, 1], got " << f;
    throw ParameterError(msg.str());
  }
  const double dd = static_cast<double>(d);
  const double norm = 1.0 / (dd * dd * dd - dd);
  ComplexMatrix m = swap_operator(d) * Complex((dd * f - 1.0) * norm);
  for (std::size_t i = 0; i < d * d; ++i) m(i, i) += (dd - f) * norm;
  return DensityMatrix(std::move(m), Split{d, d});
}

DensityMatrix horodecki_3x3(double x) {
  if (!(x > 0.0 && x < 1.0)) {
    std::ostringstream msg;
    msg << "horodecki_3x3: x must lie in (0, 1), got " << x;
    throw ParameterError(msg.str());
  }
  const double n = 8.0 * x + 1.0;
  const double base = x / n;
  const double corner = (x + 1.0) / (2.0 * n);
  const double off = std::sqrt(1.0 - x * x) / (2.0 * n);

  // Zero-based indices; the printed table is one-based.
  ComplexMatrix m(9, 9);
  for (std::size_t i = 0; i < 9; ++i) m(i, i) = base;
  for (auto [i, j] : {std::pair{0, 4}, std::pair{0, 8}, std::pair{4, 8}}) {
    m(i, j) = base;
    m(j, i) = base;
  }
  m(6, 6) = corner;
  m(8, 8) = corner;
  m(6, 8) = off;
  m(8, 6) = off;
  return DensityMatrix(std::move(m), Split{3, 3});
}

DensityMatrix mix_white_noise(const DensityMatrix& rho, double q) {
  require_unit_interval(q, "q", "mix_white_noise");
  const std::size_t n = rho.dim();
  ComplexMatrix m = rho.matrix() * Complex(q);
  const double noise = (1.0 - q) / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) += noise;
  return DensityMatrix(std::move(m), rho.split());
}

}  // namespace gsic
