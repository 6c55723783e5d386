#include "gsic/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <utility>

#include "gsic/errors.hpp"

namespace gsic {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b,
                        const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    std::ostringstream msg;
    msg << op << ": shape mismatch " << a.rows() << "x" << a.cols() << " vs "
        << b.rows() << "x" << b.cols();
    throw DimensionError(msg.str());
  }
}

void require_square(const ComplexMatrix& m, const char* op) {
  if (!m.is_square()) {
    std::ostringstream msg;
    msg << op << ": expected a square matrix, got " << m.rows() << "x"
        << m.cols();
    throw DimensionError(msg.str());
  }
}

void require_bipartite(const ComplexMatrix& rho, std::size_t dA,
                       std::size_t dB, const char* op) {
  if (dA == 0 || dB == 0 || !rho.is_square() || rho.rows() != dA * dB) {
    std::ostringstream msg;
    msg << op << ": matrix " << rho.rows() << "x" << rho.cols()
        << " does not match split " << dA << "x" << dB;
    throw DimensionError(msg.str());
  }
}

double frobenius_sq(const ComplexMatrix& m) {
  double s = 0.0;
  for (const auto& z : m.entries()) s += std::norm(z);
  return s;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
  if (rows == 0 || cols == 0) {
    throw DimensionError("ComplexMatrix: rows and cols must be >= 1");
  }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) {
    throw DimensionError("ComplexMatrix: rows and cols must be >= 1");
  }
  if (entries_.size() != rows * cols) {
    std::ostringstream msg;
    msg << "ComplexMatrix: " << entries_.size() << " entries for shape "
        << rows << "x" << cols;
    throw DimensionError(msg.str());
  }
}

ComplexMatrix::ComplexMatrix(
    std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  if (rows_ == 0 || cols_ == 0) {
    throw DimensionError("ComplexMatrix: empty literal");
  }
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw DimensionError("ComplexMatrix: ragged literal");
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator+=");
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    entries_[k] += other.entries_[k];
  }
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator-=");
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    entries_[k] -= other.entries_[k];
  }
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& z : entries_) z *= scale;
  return *this;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : entries_) m = std::max(m, std::abs(z));
  return m;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
  a += b;
  return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
  a -= b;
  return a;
}

ComplexMatrix operator*(ComplexMatrix a, Complex scale) {
  a *= scale;
  return a;
}

ComplexMatrix operator*(Complex scale, ComplexMatrix a) {
  a *= scale;
  return a;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    std::ostringstream msg;
    msg << "operator*: inner dimensions " << a.cols() << " and " << b.rows()
        << " differ";
    throw DimensionError(msg.str());
  }
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t k = 0; k < ea.size(); ++k) {
    m = std::max(m, std::abs(ea[k] - eb[k]));
  }
  return m;
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b,
                  double abs_tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return max_abs_diff(a, b) <= abs_tol;
}

ComplexMatrix transpose(const ComplexMatrix& m) {
  ComplexMatrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  }
  return t;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
  ComplexMatrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = std::conj(m(i, j));
  }
  return t;
}

ComplexMatrix conjugate_matrix(const ComplexMatrix& m) {
  ComplexMatrix c = m;
  for (auto& z : c.entries()) z = std::conj(z);
  return c;
}

Complex trace(const ComplexMatrix& m) {
  require_square(m, "trace");
  Complex s{};
  for (std::size_t i = 0; i < m.rows(); ++i) s += m(i, i);
  return s;
}

Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) {
    throw DimensionError("trace_of_product: shapes do not form a square product");
  }
  Complex s{};
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, i);
  }
  return s;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t br = b.rows();
  const std::size_t bc = b.cols();
  ComplexMatrix k(a.rows() * br, a.cols() * bc);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      for (std::size_t r = 0; r < br; ++r) {
        for (std::size_t c = 0; c < bc; ++c) {
          k(i * br + r, j * bc + c) = aij * b(r, c);
        }
      }
    }
  }
  return k;
}

double hermitian_asymmetry(const ComplexMatrix& m) {
  require_square(m, "hermitian_asymmetry");
  double worst = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i; j < m.cols(); ++j) {
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return worst;
}

EigenDecomposition hermitian_eig(const ComplexMatrix& m,
                                 double hermitian_tol) {
  require_square(m, "hermitian_eig");
  const double asym = hermitian_asymmetry(m);
  if (asym > hermitian_tol) {
    std::ostringstream msg;
    msg << "hermitian_eig: input is not Hermitian (max asymmetry " << asym
        << " > " << hermitian_tol << ")";
    throw ValidationError(msg.str());
  }

  const std::size_t n = m.rows();
  // Work on the exactly Hermitian part so the rotations stay unitary.
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
      a(j, i) = std::conj(a(i, j));
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double frob = std::sqrt(frobenius_sq(a));
  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps && frob > 0.0; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    }
    if (std::sqrt(off) <= 1e-15 * frob) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double g = std::abs(apq);
        if (g <= 1e-18 * frob) continue;

        // Phase-rotate column q so that a(p, q) becomes real, then apply a
        // real Jacobi rotation. Combined unitary on (p, q):
        //   [ c            s          ]
        //   [ -s e^{-iphi} c e^{-iphi} ]
        const Complex phase = apq / g;  // e^{i phi}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * g);
        const double t =
            (theta >= 0.0 ? 1.0 : -1.0) /
            (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Complex uqp = -s * std::conj(phase);
        const Complex uqq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * c + akq * uqp;
          a(k, q) = akp * s + akq * uqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk + std::conj(uqp) * aqk;
          a(q, k) = s * apk + std::conj(uqq) * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * c + vkq * uqp;
          v(k, q) = vkp * s + vkq * uqq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() < a(y, y).real();
  });

  EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m,
                                          double hermitian_tol) {
  return hermitian_eig(m, hermitian_tol).values;
}

double min_eigenvalue(const ComplexMatrix& m, double hermitian_tol) {
  return hermitian_eig(m, hermitian_tol).values.front();
}

std::vector<double> singular_values(const ComplexMatrix& m, double clamp) {
  // Orthogonalize the columns of W, where W is m or m^dagger (whichever is
  // taller). At convergence the column norms are the singular values.
  const bool tall = m.rows() >= m.cols();
  const std::size_t len = tall ? m.rows() : m.cols();
  const std::size_t ncols = tall ? m.cols() : m.rows();

  std::vector<std::vector<Complex>> w(ncols, std::vector<Complex>(len));
  for (std::size_t c = 0; c < ncols; ++c) {
    for (std::size_t r = 0; r < len; ++r) {
      w[c][r] = tall ? m(r, c) : std::conj(m(c, r));
    }
  }

  constexpr int kMaxSweeps = 100;
  constexpr double kOrthTol = 1e-15;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < ncols; ++p) {
      for (std::size_t q = p + 1; q < ncols; ++q) {
        auto& wp = w[p];
        auto& wq = w[q];
        double alpha = 0.0;
        double beta = 0.0;
        Complex gamma{};
        for (std::size_t k = 0; k < len; ++k) {
          alpha += std::norm(wp[k]);
          beta += std::norm(wq[k]);
          gamma += std::conj(wp[k]) * wq[k];
        }
        const double g = std::abs(gamma);
        if (alpha == 0.0 || beta == 0.0 ||
            g <= kOrthTol * std::sqrt(alpha * beta)) {
          continue;
        }
        rotated = true;
        const Complex unphase = std::conj(gamma / g);  // e^{-i phi}
        const double zeta = (beta - alpha) / (2.0 * g);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t k = 0; k < len; ++k) {
          const Complex xp = wp[k];
          const Complex xq = wq[k] * unphase;
          wp[k] = c * xp - s * xq;
          wq[k] = s * xp + c * xq;
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sv(ncols);
  for (std::size_t c = 0; c < ncols; ++c) {
    double norm_sq = 0.0;
    for (const auto& z : w[c]) norm_sq += std::norm(z);
    sv[c] = std::sqrt(norm_sq);
    if (sv[c] < clamp) sv[c] = 0.0;
  }
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

double trace_norm(const ComplexMatrix& m, double clamp) {
  double s = 0.0;
  for (double x : singular_values(m, clamp)) s += x;
  return s;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, std::size_t dA,
                                std::size_t dB) {
  require_bipartite(rho, dA, dB, "partial_transpose");
  ComplexMatrix out(dA * dB, dA * dB);
  for (std::size_t i = 0; i < dA; ++i) {
    for (std::size_t k = 0; k < dB; ++k) {
      for (std::size_t j = 0; j < dA; ++j) {
        for (std::size_t l = 0; l < dB; ++l) {
          out(i * dB + k, j * dB + l) = rho(j * dB + k, i * dB + l);
        }
      }
    }
  }
  return out;
}

ComplexMatrix realign(const ComplexMatrix& rho, std::size_t dA,
                      std::size_t dB) {
  require_bipartite(rho, dA, dB, "realign");
  ComplexMatrix out(dA * dA, dB * dB);
  for (std::size_t i = 0; i < dA; ++i) {
    for (std::size_t j = 0; j < dA; ++j) {
      for (std::size_t k = 0; k < dB; ++k) {
        for (std::size_t l = 0; l < dB; ++l) {
          out(i * dA + j, k * dB + l) = rho(i * dB + k, j * dB + l);
        }
      }
    }
  }
  return out;
}

ComplexMatrix partial_trace_a(const ComplexMatrix& rho, std::size_t dA,
                              std::size_t dB) {
  require_bipartite(rho, dA, dB, "partial_trace_a");
  ComplexMatrix out(dB, dB);
  for (std::size_t i = 0; i < dA; ++i) {
    for (std::size_t k = 0; k < dB; ++k) {
      for (std::size_t l = 0; l < dB; ++l) {
        out(k, l) += rho(i * dB + k, i * dB + l);
      }
    }
  }
  return out;
}

ComplexMatrix partial_trace_b(const ComplexMatrix& rho, std::size_t dA,
                              std::size_t dB) {
  require_bipartite(rho, dA, dB, "partial_trace_b");
  ComplexMatrix out(dA, dA);
  for (std::size_t i = 0; i < dA; ++i) {
    for (std::size_t j = 0; j < dA; ++j) {
      for (std::size_t k = 0; k < dB; ++k) {
        out(i, j) += rho(i * dB + k, j * dB + k);
      }
    }
  }
  return out;
}

}  // namespace gsic
