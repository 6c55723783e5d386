#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gsic/linalg.hpp"
#include "gsic/states.hpp"

namespace gsic {

/// Purity parameter of the Gell-Mann general SIC-POVM:
/// a = 1/d^3 + t^2 (d - 1)(d + 1)^3.
double purity_parameter(std::size_t d, double t);

/// Common pairwise overlap Tr(P_a P_b), a != b, of a general SIC-POVM:
/// (1 - d a) / (d (d^2 - 1)).
double cross_overlap(std::size_t d, double a);

/// A set of d^2 operators {P_a} on C^d with parameters (d, t, a).
///
/// `construct` builds the Gell-Mann family
///   P_a     = I/d^2 + t [F - d(d+1) F_a],  a = 1 .. d^2 - 1
///   P_{d^2} = I/d^2 + t (d+1) F
/// and rejects any t that makes an element indefinite. `from_elements` wraps
/// arbitrary operators (loaded files, fiducial SICs) without checking them;
/// run `validate` on the result.
class GeneralSicPovm {
 public:
  static GeneralSicPovm construct(std::size_t d, double t,
                                  double psd_tol = 1e-10);
  static GeneralSicPovm from_elements(std::size_t d, std::optional<double> t,
                                      double a,
                                      std::vector<ComplexMatrix> elements);

  std::size_t d() const noexcept { return d_; }
  /// Construction parameter; empty for POVMs not built from the Gell-Mann
  /// family (e.g. rank-one fiducial SICs).
  std::optional<double> t() const noexcept { return t_; }
  double a() const noexcept { return a_; }
  std::span<const ComplexMatrix> elements() const noexcept {
    return elements_;
  }
  std::size_t size() const noexcept { return elements_.size(); }
  const ComplexMatrix& operator[](std::size_t i) const {
    return elements_[i];
  }

 private:
  GeneralSicPovm(std::size_t d, std::optional<double> t, double a,
                 std::vector<ComplexMatrix> elements);

  std::size_t d_;
  std::optional<double> t_;
  double a_;
  std::vector<ComplexMatrix> elements_;
};

/// Elements of the Gell-Mann construction with no positivity check. Used by
/// the feasibility search.
std::vector<ComplexMatrix> gellmann_povm_elements(std::size_t d, double t);

/// Smallest eigenvalue over all elements and the element that attains it.
struct MinEigenvalue {
  double value;
  std::size_t element;
};
MinEigenvalue povm_min_eigenvalue(std::span<const ComplexMatrix> elements);

struct TRange {
  double t_min;
  double t_max;
};

/// Largest interval around t = 0 on which every constructed element has
/// min eigenvalue >= -psd_tol. Each endpoint is located by bisection to a
/// bracket width of `width`; the returned endpoints are the feasible ends of
/// their brackets.
TRange feasible_t_range(std::size_t d, double width = 1e-8,
                        double psd_tol = 1e-10);

/// Elementwise complex conjugate; same d, t and a.
GeneralSicPovm conjugate_povm(const GeneralSicPovm& p);

/// Per-identity worst-case violations of a general SIC-POVM.
struct ValidationReport {
  double completeness = 0.0;   // max |sum_a P_a - I|
  double self_overlap = 0.0;   // max_a |Tr(P_a^2) - a|
  double cross_overlap = 0.0;  // max_{a!=b} |Tr(P_a P_b) - (1-da)/(d(d^2-1))|
  double trace = 0.0;          // max_a |Tr(P_a) - 1/d|
  double positivity = 0.0;     // max(0, -min eigenvalue)
  double hermiticity = 0.0;    // max_a asymmetry of P_a
  double a_range = 0.0;        // distance of a outside [1/d^3, 1/d^2]
  bool well_formed = true;     // d^2 elements, each d x d
  double tol = 0.0;
  bool passed = false;

  /// Names of the identities whose violation exceeds tol.
  std::vector<std::string> failures() const;
};

ValidationReport validate(const GeneralSicPovm& p, double tol = 1e-10);

/// Outcome probabilities p_a = Tr(P_a rho).
struct ProbabilityVector {
  std::vector<double> values;
  std::size_t povm_d;
  double povm_a;

  double sum() const;
  double sum_of_squares() const;
};

/// Upper bound on sum_a p_a^2, attained exactly by pure states:
/// (a d^2 + 1) / (d (d + 1)).
double purity_bound(std::size_t d, double a);

/// Predicted sum_a p_a^2 for a state of purity Tr(rho^2) = s:
/// ((a d^3 - 1) s + d (1 - a d)) / (d (d^2 - 1)).
double predicted_sum_of_squares(std::size_t d, double a, double purity);

ProbabilityVector probabilities(const GeneralSicPovm& p,
                                const DensityMatrix& rho);

/// Inverts `probabilities`:
///   rho = d(d^2-1)/(a d^3-1) sum_a p_a P_a - d(1-a d)/(a d^3-1) I.
/// Throws ParameterError when a d^3 - 1 vanishes (t = 0) and DimensionError
/// when (d, a) do not match the POVM.
DensityMatrix reconstruct(const GeneralSicPovm& p,
                          const ProbabilityVector& probs,
                          StateTolerances tol = {1e-9, 1e-9, 1e-9});

/// Rank-one SIC-POVM for d = 2 (tetrahedron on the Bloch sphere) or d = 3
/// (Weyl-Heisenberg orbit of (0, 1, -1)/sqrt(2)). a = 1/d^2; t is empty.
GeneralSicPovm sic_fiducial_povm(std::size_t d);

}  // namespace gsic
