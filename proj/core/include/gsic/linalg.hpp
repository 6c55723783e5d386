#pragma once

// Dense complex linear algebra sized for the operators used in this library
// (at most 81 x 81). Everything here is a pure function of its arguments.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace gsic {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Never empty: rows >= 1 and cols >= 1.
class ComplexMatrix {
 public:
  /// Zero matrix of the given shape.
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols,
                std::vector<Complex> entries);
  /// Row-by-row literal, e.g. ComplexMatrix{{1, 0}, {0, 1}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  std::span<const Complex> entries() const noexcept { return entries_; }
  std::span<Complex> entries() noexcept { return entries_; }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  /// Largest entry modulus.
  double max_abs() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(ComplexMatrix a, Complex scale);
ComplexMatrix operator*(Complex scale, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// max_{ij} |a_ij - b_ij|. Shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
/// Entrywise comparison with an explicit absolute tolerance; false on shape
/// mismatch.
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b,
                  double abs_tol);

ComplexMatrix transpose(const ComplexMatrix& m);
ComplexMatrix adjoint(const ComplexMatrix& m);
/// Entrywise complex conjugate (not the adjoint).
ComplexMatrix conjugate_matrix(const ComplexMatrix& m);

Complex trace(const ComplexMatrix& m);
/// Tr(a b) without forming the product.
Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product: block (i, j) of the result is a(i, j) * b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// max_{ij} |m_ij - conj(m_ji)|.
double hermitian_asymmetry(const ComplexMatrix& m);

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k belongs to values[k]
};

/// Cyclic complex Jacobi eigensolver for Hermitian matrices. Throws
/// DimensionError for non-square input and ValidationError when the input's
/// asymmetry exceeds hermitian_tol.
EigenDecomposition hermitian_eig(const ComplexMatrix& m,
                                 double hermitian_tol = 1e-10);
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m,
                                          double hermitian_tol = 1e-10);
double min_eigenvalue(const ComplexMatrix& m, double hermitian_tol = 1e-10);

/// Singular values in descending order, computed by one-sided (Hestenes)
/// Jacobi on the columns. Values below clamp are reported as zero.
std::vector<double> singular_values(const ComplexMatrix& m,
                                    double clamp = 1e-12);

/// Sum of singular values, Tr sqrt(m m^dagger).
double trace_norm(const ComplexMatrix& m, double clamp = 1e-12);

/// Transpose on the first tensor factor: entry ((i,k),(j,l)) of the result is
/// entry ((j,k),(i,l)) of rho.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, std::size_t dA,
                                std::size_t dB);

/// Realignment R(rho) of shape dA^2 x dB^2 with
/// R((i,j),(k,l)) = rho((i,k),(j,l)).
ComplexMatrix realign(const ComplexMatrix& rho, std::size_t dA,
                      std::size_t dB);

/// Tr_A rho, a dB x dB matrix.
ComplexMatrix partial_trace_a(const ComplexMatrix& rho, std::size_t dA,
                              std::size_t dB);
/// Tr_B rho, a dA x dA matrix.
ComplexMatrix partial_trace_b(const ComplexMatrix& rho, std::size_t dA,
                              std::size_t dB);

}  // namespace gsic
