#include "gsic/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gsic/errors.hpp"

namespace gsic {

namespace {

void require_povm_matches(const GeneralSicPovm& p, std::size_t d,
                          const char* side, const char* op) {
  if (p.d() != d || p.size() != d * d) {
    std::ostringstream msg;
    msg << op << ": " << side << "-side POVM has dimension " << p.d()
        << " and " << p.size() << " elements; state side has dimension "
        << d;
    throw DimensionError(msg.str());
  }
}

double local_factor(std::size_t d, double a) {
  const double dd = static_cast<double>(d);
  const double lo = 1.0 / (dd * dd * dd);
  const double hi = 1.0 / (dd * dd);
  constexpr double kSlack = 1e-12;
  if (!(a >= lo - kSlack && a <= hi + kSlack)) {
    std::ostringstream msg;
    msg << "theorem1_threshold: a = " << a << " outside [1/d^3, 1/d^2] for d = "
        << d;
    throw ParameterError(msg.str());
  }
  return std::sqrt((a * dd * dd + 1.0) / (dd * (dd + 1.0)));
}

std::vector<std::pair<std::string, double>> povm_params(
    const GeneralSicPovm& a, const GeneralSicPovm& b) {
  std::vector<std::pair<std::string, double>> params;
  if (a.t()) params.emplace_back("tA", *a.t());
  params.emplace_back("aA", a.a());
  if (b.t()) params.emplace_back("tB", *b.t());
  params.emplace_back("aB", b.a());
  return params;
}

}  // namespace

ComplexMatrix CorrelationMatrix::as_matrix() const {
  std::vector<Complex> z(entries.begin(), entries.end());
  return ComplexMatrix(rows, cols, std::move(z));
}

CorrelationMatrix correlation_matrix(const GeneralSicPovm& povm_a,
                                     const GeneralSicPovm& povm_b,
                                     const DensityMatrix& rho) {
  const Split split = rho.require_split("correlation_matrix");
  require_povm_matches(povm_a, split.dA, "A", "correlation_matrix");
  require_povm_matches(povm_b, split.dB, "B", "correlation_matrix");

  const std::size_t dA = split.dA;
  const std::size_t dB = split.dB;
  const ComplexMatrix& r = rho.matrix();

  CorrelationMatrix out{povm_a.size(), povm_b.size(), {},
                        {dA, povm_a.a(), povm_a.t(), dB, povm_b.a(),
                         povm_b.t()}};
  out.entries.resize(out.rows * out.cols);

  // reduced(k, l) = sum_{a,c} P_i(a, c) rho((c,k), (a,l)) = Tr_A((P_i (x) I) rho)
  // entry(i, j)   = Tr(Q_j reduced)
  ComplexMatrix reduced(dB, dB);
  for (std::size_t i = 0; i < out.rows; ++i) {
    const ComplexMatrix& pi = povm_a[i];
    for (auto& z : reduced.entries()) z = 0.0;
    for (std::size_t a = 0; a < dA; ++a) {
      for (std::size_t c = 0; c < dA; ++c) {
        const Complex pac = pi(a, c);
        if (pac == Complex{}) continue;
        for (std::size_t k = 0; k < dB; ++k) {
          for (std::size_t l = 0; l < dB; ++l) {
            reduced(k, l) += pac * r(c * dB + k, a * dB + l);
          }
        }
      }
    }
    for (std::size_t j = 0; j < out.cols; ++j) {
      out.entries[i * out.cols + j] =
          trace_of_product(povm_b[j], reduced).real();
    }
  }
  return out;
}

CriterionReport make_report(std::string criterion, double value,
                            double threshold,
                            std::vector<std::pair<std::string, double>> params) {
  CriterionReport r;
  r.criterion = std::move(criterion);
  r.value = value;
  r.threshold = threshold;
  r.margin = value - threshold;
  r.detected = r.margin > kDetectionTolerance;
  r.params = std::move(params);
  return r;
}

double theorem1_threshold(std::size_t dA, double aA, std::size_t dB,
                          double aB) {
  if (dA < 2 || dB < 2) {
    throw ParameterError("theorem1_threshold: dimensions must be >= 2");
  }
  return local_factor(dA, aA) * local_factor(dB, aB);
}

CriterionReport detect_theorem1(const DensityMatrix& rho,
                                const GeneralSicPovm& povm_a,
                                const GeneralSicPovm& povm_b) {
  const CorrelationMatrix corr = correlation_matrix(povm_a, povm_b, rho);
  const double value = trace_norm(corr.as_matrix());
  const double threshold =
      theorem1_threshold(povm_a.d(), povm_a.a(), povm_b.d(), povm_b.a());
  return make_report("theorem1", value, threshold,
                     povm_params(povm_a, povm_b));
}

CriterionReport detect_theorem1(const DensityMatrix& rho,
                                const GeneralSicPovm& povm) {
  return detect_theorem1(rho, povm, conjugate_povm(povm));
}

CriterionReport ja_value(const DensityMatrix& rho,
                         const GeneralSicPovm& povm_a,
                         const GeneralSicPovm& povm_b) {
  if (povm_a.d() != povm_b.d() || povm_a.size() != povm_b.size()) {
    throw DimensionError("ja_value: both POVMs must act on the same dimension");
  }
  if (std::abs(povm_a.a() - povm_b.a()) > 1e-12) {
    throw ParameterError("ja_value: both POVMs must share the parameter a");
  }
  const CorrelationMatrix corr = correlation_matrix(povm_a, povm_b, rho);
  double value = 0.0;
  for (std::size_t j = 0; j < corr.rows; ++j) value += corr(j, j);

  const double d = static_cast<double>(povm_a.d());
  const double threshold = (povm_a.a() * d * d + 1.0) / (d * (d + 1.0));
  return make_report("ja", value, threshold, povm_params(povm_a, povm_b));
}

CriterionReport ja_value(const DensityMatrix& rho, const GeneralSicPovm& povm) {
  return ja_value(rho, povm, conjugate_povm(povm));
}

CriterionReport detect_ppt(const DensityMatrix& rho) {
  const Split s = rho.require_split("detect_ppt");
  const double lo =
      min_eigenvalue(partial_transpose(rho.matrix(), s.dA, s.dB), 1e-9);
  return make_report("ppt", -lo, 0.0);
}

CriterionReport detect_realignment(const DensityMatrix& rho) {
  const Split s = rho.require_split("detect_realignment");
  return make_report("realignment",
                     trace_norm(realign(rho.matrix(), s.dA, s.dB)), 1.0);
}

TSweepResult best_margin_over_t(const DensityMatrix& rho, std::size_t d,
                                std::span<const double> t_grid) {
  if (t_grid.empty()) {
    throw ParameterError("best_margin_over_t: empty t grid");
  }
  const Split s = rho.require_split("best_margin_over_t");
  if (s.dA != d || s.dB != d) {
    throw DimensionError("best_margin_over_t: state split does not match d");
  }

  std::optional<TSweepResult> best;
  std::vector<double> margins;
  margins.reserve(t_grid.size());
  for (const double t : t_grid) {
    const auto povm = GeneralSicPovm::construct(d, t);
    CriterionReport rep = detect_theorem1(rho, povm);
    margins.push_back(rep.margin);
    const bool better =
        !best || rep.margin > best->report.margin ||
        (rep.margin == best->report.margin && std::abs(t) < std::abs(best->t_best));
    if (better) best = TSweepResult{t, std::move(rep), {}};
  }
  best->margins = std::move(margins);
  return std::move(*best);
}

std::optional<std::pair<double, double>> detected_t_span(
    std::span<const double> t_grid, std::span<const double> margins) {
  if (t_grid.size() != margins.size()) {
    throw DimensionError("detected_t_span: grid and margins differ in length");
  }
  std::optional<std::pair<double, double>> span;
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (margins[i] <= kDetectionTolerance) continue;
    if (!span) {
      span = std::pair{t_grid[i], t_grid[i]};
    } else {
      span->first = std::min(span->first, t_grid[i]);
      span->second = std::max(span->second, t_grid[i]);
    }
  }
  return span;
}

}  // namespace gsic
