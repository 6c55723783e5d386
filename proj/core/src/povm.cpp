#include "gsic/povm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <utility>

#include "gsic/errors.hpp"
#include "gsic/gellmann.hpp"

namespace gsic {

namespace {

constexpr double kAnyAsymmetry = std::numeric_limits<double>::infinity();

void require_dimension(std::size_t d, const char* op) {
  if (d < 2) {
    std::ostringstream msg;
    msg << op << ": dimension must be >= 2, got " << d;
    throw ParameterError(msg.str());
  }
}

double cube(double x) { return x * x * x; }

bool feasible(std::size_t d, double t, double psd_tol) {
  return povm_min_eigenvalue(gellmann_povm_elements(d, t)).value >= -psd_tol;
}

// Feasible end of the bracket for the boundary in direction `sign`.
double bisect_endpoint(std::size_t d, double sign, double width,
                       double psd_tol) {
  double lo = 0.0;
  double hi = 1.0 / cube(static_cast<double>(d));
  while (feasible(d, sign * hi, psd_tol)) {
    lo = hi;
    hi *= 2.0;
  }
  while (hi - lo > width) {
    const double mid = 0.5 * (lo + hi);
    if (feasible(d, sign * mid, psd_tol)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return sign * lo;
}

}  // namespace

double purity_parameter(std::size_t d, double t) {
  const double dd = static_cast<double>(d);
  return 1.0 / cube(dd) + t * t * (dd - 1.0) * cube(dd + 1.0);
}

double cross_overlap(std::size_t d, double a) {
  const double dd = static_cast<double>(d);
  return (1.0 - dd * a) / (dd * (dd * dd - 1.0));
}

GeneralSicPovm::GeneralSicPovm(std::size_t d, std::optional<double> t,
                               double a, std::vector<ComplexMatrix> elements)
    : d_(d), t_(t), a_(a), elements_(std::move(elements)) {}

GeneralSicPovm GeneralSicPovm::from_elements(
    std::size_t d, std::optional<double> t, double a,
    std::vector<ComplexMatrix> elements) {
  if (d == 0) throw ParameterError("GeneralSicPovm: dimension must be >= 1");
  return GeneralSicPovm(d, t, a, std::move(elements));
}

std::vector<ComplexMatrix> gellmann_povm_elements(std::size_t d, double t) {
  require_dimension(d, "gellmann_povm_elements");
  const HermitianBasis basis = gellmann_basis(d);
  const double dd = static_cast<double>(d);
  const ComplexMatrix base =
      ComplexMatrix::identity(d) * Complex(1.0 / (dd * dd));

  std::vector<ComplexMatrix> out;
  out.reserve(d * d);
  for (const auto& f : basis.elements) {
    out.push_back(base + (basis.sum - f * Complex(dd * (dd + 1.0))) *
                             Complex(t));
  }
  out.push_back(base + basis.sum * Complex(t * (dd + 1.0)));
  return out;
}

MinEigenvalue povm_min_eigenvalue(std::span<const ComplexMatrix> elements) {
  MinEigenvalue worst{std::numeric_limits<double>::infinity(), 0};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const double lo = min_eigenvalue(elements[i], kAnyAsymmetry);
    if (lo < worst.value) worst = {lo, i};
  }
  return worst;
}

GeneralSicPovm GeneralSicPovm::construct(std::size_t d, double t,
                                         double psd_tol) {
  require_dimension(d, "GeneralSicPovm::construct");
  if (!std::isfinite(t)) {
    throw ParameterError("GeneralSicPovm::construct: t is not finite");
  }
  auto elements = gellmann_povm_elements(d, t);
  const MinEigenvalue worst = povm_min_eigenvalue(elements);
  if (worst.value < -psd_tol) {
    std::ostringstream msg;
    msg << "GeneralSicPovm::construct: t = " << t
        << " is infeasible for d = " << d << ": element "
        << worst.element + 1 << " has min eigenvalue " << worst.value;
    throw InfeasibleParameterError(msg.str(), worst.element, worst.value);
  }
  return GeneralSicPovm(d, t, purity_parameter(d, t), std::move(elements));
}

TRange feasible_t_range(std::size_t d, double width, double psd_tol) {
  require_dimension(d, "feasible_t_range");
  if (!(width > 0.0)) throw ParameterError("feasible_t_range: width must be > 0");
  return TRange{bisect_endpoint(d, -1.0, width, psd_tol),
                bisect_endpoint(d, 1.0, width, psd_tol)};
}

GeneralSicPovm conjugate_povm(const GeneralSicPovm& p) {
  std::vector<ComplexMatrix> conj;
  conj.reserve(p.size());
  for (const auto& e : p.elements()) conj.push_back(conjugate_matrix(e));
  return GeneralSicPovm::from_elements(p.d(), p.t(), p.a(), std::move(conj));
}

std::vector<std::string> ValidationReport::failures() const {
  std::vector<std::string> out;
  if (!well_formed) out.emplace_back("shape");
  if (completeness > tol) out.emplace_back("completeness");
  if (self_overlap > tol) out.emplace_back("self-overlap");
  if (cross_overlap > tol) out.emplace_back("cross-overlap");
  if (trace > tol) out.emplace_back("trace");
  if (positivity > tol) out.emplace_back("positivity");
  if (hermiticity > tol) out.emplace_back("hermiticity");
  if (a_range > tol) out.emplace_back("a-range");
  return out;
}

ValidationReport validate(const GeneralSicPovm& p, double tol) {
  ValidationReport r;
  r.tol = tol;
  const std::size_t d = p.d();
  const double dd = static_cast<double>(d);

  r.well_formed = p.size() == d * d;
  for (const auto& e : p.elements()) {
    r.well_formed = r.well_formed && e.rows() == d && e.cols() == d;
  }
  if (!r.well_formed) {
    r.passed = false;
    return r;
  }

  ComplexMatrix total(d, d);
  const double expected_cross = cross_overlap(d, p.a());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& pi = p[i];
    total += pi;
    r.hermiticity = std::max(r.hermiticity, hermitian_asymmetry(pi));
    r.trace = std::max(r.trace, std::abs(trace(pi) - 1.0 / dd));
    r.self_overlap = std::max(
        r.self_overlap, std::abs(trace_of_product(pi, pi) - p.a()));
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      r.cross_overlap =
          std::max(r.cross_overlap,
                   std::abs(trace_of_product(pi, p[j]) - expected_cross));
    }
    r.positivity =
        std::max(r.positivity, -min_eigenvalue(pi, kAnyAsymmetry));
  }
  r.completeness = max_abs_diff(total, ComplexMatrix::identity(d));

  const double a_lo = 1.0 / cube(dd);
  const double a_hi = 1.0 / (dd * dd);
  r.a_range = std::max({0.0, a_lo - p.a(), p.a() - a_hi});

  r.passed = r.failures().empty();
  return r;
}

double ProbabilityVector::sum() const {
  double s = 0.0;
  for (double v : values) s += v;
  return s;
}

double ProbabilityVector::sum_of_squares() const {
  double s = 0.0;
  for (double v : values) s += v * v;
  return s;
}

double purity_bound(std::size_t d, double a) {
  const double dd = static_cast<double>(d);
  return (a * dd * dd + 1.0) / (dd * (dd + 1.0));
}

double predicted_sum_of_squares(std::size_t d, double a, double purity) {
  const double dd = static_cast<double>(d);
  return ((a * cube(dd) - 1.0) * purity + dd * (1.0 - a * dd)) /
         (dd * (dd * dd - 1.0));
}

ProbabilityVector probabilities(const GeneralSicPovm& p,
                                const DensityMatrix& rho) {
  if (rho.dim() != p.d()) {
    std::ostringstream msg;
    msg << "probabilities: state dimension " << rho.dim()
        << " does not match POVM dimension " << p.d();
    throw DimensionError(msg.str());
  }
  ProbabilityVector out{{}, p.d(), p.a()};
  out.values.reserve(p.size());
  for (const auto& e : p.elements()) {
    out.values.push_back(trace_of_product(e, rho.matrix()).real());
  }
  return out;
}

DensityMatrix reconstruct(const GeneralSicPovm& p,
                          const ProbabilityVector& probs,
                          StateTolerances tol) {
  const std::size_t d = p.d();
  if (probs.povm_d != d || probs.values.size() != p.size() ||
      std::abs(probs.povm_a - p.a()) > 1e-12) {
    throw DimensionError(
        "reconstruct: probability vector was not produced by this POVM");
  }
  const double dd = static_cast<double>(d);
  const double denom = p.a() * cube(dd) - 1.0;
  if (std::abs(denom) <= 1e-12) {
    throw ParameterError(
        "reconstruct: a d^3 - 1 vanishes (a = 1/d^3, t = 0); the POVM is "
        "informationally degenerate");
  }

  ComplexMatrix m(d, d);
  for (std::size_t i = 0; i < p.size(); ++i) {
    m += p[i] * Complex(probs.values[i]);
  }
  m *= Complex(dd * (dd * dd - 1.0) / denom);
  const double shift = dd * (1.0 - p.a() * dd) / denom;
  for (std::size_t i = 0; i < d; ++i) m(i, i) -= shift;
  return DensityMatrix(std::move(m), std::nullopt, tol);
}

GeneralSicPovm sic_fiducial_povm(std::size_t d) {
  std::vector<std::vector<Complex>> kets;
  if (d == 2) {
    // Tetrahedral Bloch vectors; the ket for direction (theta, phi) is
    // (cos(theta/2), e^{i phi} sin(theta/2)).
    const double n[4][3] = {
        {0.0, 0.0, 1.0},
        {2.0 * std::numbers::sqrt2 / 3.0, 0.0, -1.0 / 3.0},
        {-std::numbers::sqrt2 / 3.0, std::sqrt(2.0 / 3.0), -1.0 / 3.0},
        {-std::numbers::sqrt2 / 3.0, -std::sqrt(2.0 / 3.0), -1.0 / 3.0}};
    for (const auto& v : n) {
      const double theta = std::acos(std::clamp(v[2], -1.0, 1.0));
      const double phi = std::atan2(v[1], v[0]);
      kets.push_back({std::cos(theta / 2.0),
                      std::polar(std::sin(theta / 2.0), phi)});
    }
  } else if (d == 3) {
    const Complex omega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    const std::vector<Complex> fiducial = {0.0, 1.0 / std::numbers::sqrt2,
                                           -1.0 / std::numbers::sqrt2};
    // X^j Z^k |fiducial>, X|m> = |m+1>, Z|m> = omega^m |m>.
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t k = 0; k < 3; ++k) {
        std::vector<Complex> v(3);
        for (std::size_t m = 0; m < 3; ++m) {
          v[(m + j) % 3] = std::pow(omega, static_cast<double>(k * m)) *
                           fiducial[m];
        }
        kets.push_back(std::move(v));
      }
    }
  } else {
    throw ParameterError("sic_fiducial_povm: only d = 2 and d = 3 are built in, got " +
                         std::to_string(d));
  }

  const double dd = static_cast<double>(d);
  std::vector<ComplexMatrix> elements;
  for (const auto& v : kets) {
    ComplexMatrix e(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        e(i, j) = v[i] * std::conj(v[j]) / dd;
      }
    }
    elements.push_back(std::move(e));
  }
  auto povm = GeneralSicPovm::from_elements(d, std::nullopt, 1.0 / (dd * dd),
                                            std::move(elements));
  const ValidationReport report = validate(povm, 1e-10);
  if (!report.passed) {
    throw ValidationError("sic_fiducial_povm: built-in fiducial failed validation");
  }
  return povm;
}

}  // namespace gsic
