#pragma once

// Separability tests on bipartite density matrices. Every test is one-sided:
// a positive margin certifies entanglement, a non-positive margin is
// inconclusive.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gsic/povm.hpp"
#include "gsic/states.hpp"

namespace gsic {

/// Margin a report must exceed to count as a detection.
inline constexpr double kDetectionTolerance = 1e-10;

struct CorrelationSource {
  std::size_t dA;
  double aA;
  std::optional<double> tA;
  std::size_t dB;
  double aB;
  std::optional<double> tB;
};

/// Joint outcome probabilities [P]_ij = Tr((P_i^A (x) P_j^B) rho), stored
/// row-major with shape dA^2 x dB^2.
struct CorrelationMatrix {
  std::size_t rows;
  std::size_t cols;
  std::vector<double> entries;
  CorrelationSource source;

  double operator()(std::size_t i, std::size_t j) const {
    return entries[i * cols + j];
  }
  ComplexMatrix as_matrix() const;
};

CorrelationMatrix correlation_matrix(const GeneralSicPovm& povm_a,
                                     const GeneralSicPovm& povm_b,
                                     const DensityMatrix& rho);

struct CriterionReport {
  std::string criterion;
  double value = 0.0;
  double threshold = 0.0;
  double margin = 0.0;  // value - threshold
  bool detected = false;
  std::vector<std::pair<std::string, double>> params;
};

CriterionReport make_report(std::string criterion, double value,
                            double threshold,
                            std::vector<std::pair<std::string, double>> params = {});

/// sqrt((aA dA^2 + 1)/(dA(dA+1))) * sqrt((aB dB^2 + 1)/(dB(dB+1))).
/// Accepts a in [1/d^3, 1/d^2] (the closed lower end is the t = 0 POVM);
/// throws ParameterError otherwise.
double theorem1_threshold(std::size_t dA, double aA, std::size_t dB,
                          double aB);

/// Trace norm of the correlation matrix against theorem1_threshold.
CriterionReport detect_theorem1(const DensityMatrix& rho,
                                const GeneralSicPovm& povm_a,
                                const GeneralSicPovm& povm_b);
/// Same, with the B side measured by the conjugate POVM.
CriterionReport detect_theorem1(const DensityMatrix& rho,
                                const GeneralSicPovm& povm);

/// J_a = sum_j Tr((P_j (x) Q_j) rho) against (a d^2 + 1)/(d(d + 1)).
/// Requires equal dimensions and equal a on both sides.
CriterionReport ja_value(const DensityMatrix& rho,
                         const GeneralSicPovm& povm_a,
                         const GeneralSicPovm& povm_b);
CriterionReport ja_value(const DensityMatrix& rho, const GeneralSicPovm& povm);

/// -(min eigenvalue of the partial transpose) against 0.
CriterionReport detect_ppt(const DensityMatrix& rho);

/// Trace norm of the realigned matrix against 1.
CriterionReport detect_realignment(const DensityMatrix& rho);

struct TSweepResult {
  double t_best;
  CriterionReport report;      // at t_best
  std::vector<double> margins;  // one per grid point, grid order
};

/// Evaluates detect_theorem1 with the pair (P(t), conj P(t)) on every grid
/// point and keeps the largest margin. Ties go to the smaller |t|, then to the
/// earlier grid point. Throws ParameterError on an empty grid and
/// InfeasibleParameterError on an infeasible t.
TSweepResult best_margin_over_t(const DensityMatrix& rho, std::size_t d,
                                std::span<const double> t_grid);

/// Smallest and largest grid t whose margin exceeds kDetectionTolerance.
std::optional<std::pair<double, double>> detected_t_span(
    std::span<const double> t_grid, std::span<const double> margins);

}  // namespace gsic
