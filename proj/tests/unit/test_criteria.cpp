#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numeric>

#include "gsic/criteria.hpp"
#include "gsic/errors.hpp"
#include "test_support.hpp"

using namespace gsic;
using gsic::testing::Rng;

namespace {

double kron_entry(const GeneralSicPovm& a, const GeneralSicPovm& b,
                  const DensityMatrix& rho, std::size_t i, std::size_t j) {
  return trace_of_product(kron(a[i], b[j]), rho.matrix()).real();
}

double eigen_trace_norm(const CorrelationMatrix& c) {
  Eigen::MatrixXd m(c.rows, c.cols);
  for (std::size_t i = 0; i < c.rows; ++i)
    for (std::size_t j = 0; j < c.cols; ++j) m(i, j) = c(i, j);
  return Eigen::JacobiSVD<Eigen::MatrixXd>(m).singularValues().sum();
}

DensityMatrix random_product(Rng& rng, std::size_t dA, std::size_t dB) {
  std::bernoulli_distribution coin(0.5);
  const auto a = coin(rng) ? testing::random_pure_state(rng, dA)
                           : testing::random_mixed_state(rng, dA);
  const auto b = coin(rng) ? testing::random_pure_state(rng, dB)
                           : testing::random_mixed_state(rng, dB);
  return product_state(a, b);
}

}  // namespace

TEST_CASE("correlation matrix agrees with the Kronecker-product definition") {
  Rng rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    const auto pa = GeneralSicPovm::construct(3, testing::random_nonzero_t(rng));
    const auto pb = GeneralSicPovm::construct(2, 0.03);
    const auto rho = testing::random_mixed_state(rng, 6, Split{3, 2});
    const auto c = correlation_matrix(pa, pb, rho);
    REQUIRE(c.rows == 9);
    REQUIRE(c.cols == 4);
    for (std::size_t i = 0; i < 9; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        CHECK(std::abs(c(i, j) - kron_entry(pa, pb, rho, i, j)) <= 1e-14);
    const double total = std::accumulate(c.entries.begin(), c.entries.end(), 0.0);
    CHECK(std::abs(total - 1.0) <= 1e-13);
  }
}

TEST_CASE("correlation matrix marginals are the local probabilities") {
  Rng rng(62);
  const auto p = GeneralSicPovm::construct(3, 0.01);
  const auto q = conjugate_povm(p);
  const auto rho = testing::random_mixed_state(rng, 9, Split{3, 3});
  const auto c = correlation_matrix(p, q, rho);
  const auto rho_b = DensityMatrix(partial_trace_a(rho.matrix(), 3, 3));
  const auto rho_a = DensityMatrix(partial_trace_b(rho.matrix(), 3, 3));
  const auto pb = probabilities(q, rho_b);
  const auto pa = probabilities(p, rho_a);
  for (std::size_t j = 0; j < 9; ++j) {
    double col = 0.0;
    double row = 0.0;
    for (std::size_t i = 0; i < 9; ++i) {
      col += c(i, j);
      row += c(j, i);
    }
    CHECK(std::abs(col - pb.values[j]) <= 1e-14);
    CHECK(std::abs(row - pa.values[j]) <= 1e-14);
  }
}

TEST_CASE("product states give an outer product of local probabilities") {
  Rng rng(63);
  const auto a = testing::random_pure_state(rng, 3);
  const auto b = testing::random_mixed_state(rng, 3);
  const auto p = GeneralSicPovm::construct(3, -0.008);
  const auto c = correlation_matrix(p, p, product_state(a, b));
  const auto pa = probabilities(p, a);
  const auto pb = probabilities(p, b);
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j)
      CHECK(std::abs(c(i, j) - pa.values[i] * pb.values[j]) <= 1e-15);
}

TEST_CASE("t = 0: uniform correlations and a zero margin") {
  Rng rng(64);
  const auto p0 = GeneralSicPovm::construct(3, 0.0);
  for (int trial = 0; trial < 5; ++trial) {
    const auto rho = testing::random_mixed_state(rng, 9, Split{3, 3});
    const auto c = correlation_matrix(p0, p0, rho);
    for (double v : c.entries) CHECK(std::abs(v - 1.0 / 81.0) <= 1e-15);
    const auto r = detect_theorem1(rho, p0);
    CHECK(std::abs(r.value - 1.0 / 9.0) <= 1e-14);
    CHECK(std::abs(r.threshold - 1.0 / 9.0) <= 1e-15);
    CHECK_FALSE(r.detected);
  }
}

TEST_CASE("threshold values") {
  const double a = purity_parameter(3, 0.01);
  CHECK(std::abs(theorem1_threshold(3, a, 3, a) - (9 * a + 1) / 12) <= 1e-15);
  CHECK(std::abs(theorem1_threshold(3, 1.0 / 27, 3, 1.0 / 27) - 1.0 / 9) <= 1e-15);
  CHECK(std::abs(theorem1_threshold(3, 1.0 / 9, 3, 1.0 / 9) - 1.0 / 6) <= 1e-15);
  const double a2 = purity_parameter(2, 0.05);
  CHECK(std::abs(theorem1_threshold(3, a, 2, a2) -
                 std::sqrt((9 * a + 1) / 12) * std::sqrt((4 * a2 + 1) / 6)) <= 1e-15);
  CHECK_THROWS_AS(theorem1_threshold(3, 0.2, 3, a), ParameterError);
  CHECK_THROWS_AS(theorem1_threshold(3, 0.01, 3, a), ParameterError);
  CHECK_THROWS_AS(theorem1_threshold(1, 0.5, 3, a), ParameterError);
}

TEST_CASE("trace norm of the correlation matrix agrees with Eigen") {
  Rng rng(65);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = GeneralSicPovm::construct(3, testing::random_nonzero_t(rng));
    const auto rho = testing::random_mixed_state(rng, 9, Split{3, 3});
    const auto r = detect_theorem1(rho, p);
    CHECK(std::abs(r.value - eigen_trace_norm(correlation_matrix(p, conjugate_povm(p), rho))) <=
          1e-13);
    CHECK(r.margin == r.value - r.threshold);
  }
}

TEST_CASE("isotropic closed form") {
  for (double t : {-0.012, -0.004, 0.001, 0.008, 0.012}) {
    const auto p = GeneralSicPovm::construct(3, t);
    for (int k = 0; k <= 20; ++k) {
      const double q = 0.05 * k;
      const auto r = detect_theorem1(isotropic(3, q), p);
      CHECK(std::abs(r.margin - 96 * t * t * (4 * q - 1)) <= 1e-12);
    }
  }
}

TEST_CASE("Werner closed forms") {
  for (double t : {-0.012, -0.004, 0.001, 0.008, 0.012}) {
    const auto p = GeneralSicPovm::construct(3, t);
    for (int k = 0; k <= 40; ++k) {
      const double f = -1.0 + 0.05 * k;
      const auto w = werner(3, f);
      CHECK(std::abs(detect_theorem1(w, p).margin -
                     48 * t * t * (std::abs(3 * f - 1) - 2)) <= 1e-12);
      CHECK(std::abs(ja_value(w, p).margin - 36 * (f - 3) * t * t) <= 1e-12);
    }
  }
}

TEST_CASE("noisy Horodecki J_a closed form") {
  for (double t : {-0.012, 0.004, 0.012}) {
    const auto p = GeneralSicPovm::construct(3, t);
    for (double x : {0.05, 0.3, 0.7, 0.95}) {
      for (double q : {0.0, 0.5, 0.99, 1.0}) {
        const auto r = ja_value(mix_white_noise(horodecki_3x3(x), q), p);
        CHECK(std::abs(r.margin - 24 * t * t * (-4 + (q + 35 * q * x) / (1 + 8 * x))) <=
              1e-12);
        CHECK_FALSE(r.detected);
      }
    }
  }
}

TEST_CASE("soundness: no product state is ever detected") {
  Rng rng(66);
  for (int trial = 0; trial < 500; ++trial) {
    const double t = testing::random_nonzero_t(rng);
    const auto p = GeneralSicPovm::construct(3, t);
    const auto rho = random_product(rng, 3, 3);
    CHECK(detect_theorem1(rho, p).margin <= kDetectionTolerance);
    CHECK(ja_value(rho, p).margin <= kDetectionTolerance);
  }
  for (int trial = 0; trial < 100; ++trial) {
    const auto pa = GeneralSicPovm::construct(3, testing::random_nonzero_t(rng));
    const auto pb = GeneralSicPovm::construct(2, testing::random_nonzero_t(rng, 0.001, 0.06));
    CHECK(detect_theorem1(random_product(rng, 3, 2), pa, pb).margin <= kDetectionTolerance);
  }
}

TEST_CASE("soundness extends to convex mixtures of products") {
  Rng rng(67);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    ComplexMatrix m(9, 9);
    double total = 0.0;
    for (int k = 0; k < 4; ++k) {
      const double w = u(rng);
      m += random_product(rng, 3, 3).matrix() * Complex(w);
      total += w;
    }
    m *= Complex(1.0 / total);
    const DensityMatrix rho((m + adjoint(m)) * Complex(0.5), Split{3, 3});
    const auto p = GeneralSicPovm::construct(3, testing::random_nonzero_t(rng));
    CHECK(detect_theorem1(rho, p).margin <= kDetectionTolerance);
  }
}

TEST_CASE("relabeling POVM elements leaves the criterion unchanged") {
  Rng rng(68);
  const auto p = GeneralSicPovm::construct(3, 0.009);
  const auto q = conjugate_povm(p);
  std::vector<ComplexMatrix> shuffled(q.elements().begin(), q.elements().end());
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  const auto q2 = GeneralSicPovm::from_elements(3, q.t(), q.a(), shuffled);
  for (int trial = 0; trial < 10; ++trial) {
    const auto rho = testing::random_mixed_state(rng, 9, Split{3, 3});
    CHECK(std::abs(detect_theorem1(rho, p, q).value - detect_theorem1(rho, p, q2).value) <=
          1e-13);
  }
}

TEST_CASE("report carries the POVM parameters") {
  const auto p = GeneralSicPovm::construct(3, 0.01);
  const auto r = detect_theorem1(isotropic(3, 0.6), p);
  CHECK(r.detected);
  CHECK(r.params.size() == 4);
  CHECK(r.params[0].first == "tA");
  CHECK(r.params[0].second == 0.01);
}

TEST_CASE("rank-one SIC pair") {
  const auto s = sic_fiducial_povm(3);
  const auto r = detect_theorem1(isotropic(3, 0.5), s, conjugate_povm(s));
  CHECK(std::abs(r.threshold - 1.0 / 6.0) <= 1e-15);
  CHECK(r.detected);
  CHECK_FALSE(detect_theorem1(isotropic(3, 0.2), s, conjugate_povm(s)).detected);
}

TEST_CASE("J_a rejects mismatched POVMs") {
  const auto p = GeneralSicPovm::construct(3, 0.01);
  CHECK_THROWS_AS(ja_value(isotropic(3, 0.5), p, GeneralSicPovm::construct(3, 0.005)),
                  ParameterError);
  CHECK_THROWS_AS(ja_value(isotropic(3, 0.5), p, GeneralSicPovm::construct(2, 0.01)),
                  DimensionError);
}

TEST_CASE("PPT and realignment reference values") {
  CHECK(std::abs(detect_realignment(maximally_mixed(9, Split{3, 3})).value - 1.0 / 3.0) <=
        1e-14);
  CHECK(std::abs(detect_realignment(max_entangled(3)).value - 3.0) <= 1e-13);
  const std::vector<Complex> e0{{1, 0}, {0, 0}, {0, 0}};
  const std::vector<Complex> e1{{0, 0}, {1, 0}, {0, 0}};
  const auto prod = product_state(pure_state(e0), pure_state(e1));
  CHECK(std::abs(detect_realignment(prod).value - 1.0) <= 1e-14);
  CHECK_FALSE(detect_realignment(prod).detected);

  const auto ppt = detect_ppt(max_entangled(3));
  CHECK(std::abs(ppt.value - 1.0 / 3.0) <= 1e-13);
  CHECK(ppt.detected);
  CHECK_FALSE(detect_ppt(horodecki_3x3(0.4)).detected);
  CHECK(detect_ppt(werner(3, -0.5)).detected);
  CHECK_FALSE(detect_ppt(werner(3, 0.5)).detected);
  CHECK_THROWS_AS(detect_ppt(maximally_mixed(9)), DimensionError);
}

TEST_CASE("best margin over t") {
  const std::vector<double> grid{-0.01, -0.005, 0.0, 0.005, 0.01};
  const auto iso = isotropic(3, 0.6);
  const auto r = best_margin_over_t(iso, 3, grid);
  REQUIRE(r.margins.size() == grid.size());
  // Margin is even in t, so the tie goes to the earlier grid point.
  CHECK(r.t_best == -0.01);
  CHECK(r.report.detected);
  CHECK(std::abs(r.margins[2]) <= 1e-15);

  const auto sep = best_margin_over_t(isotropic(3, 0.1), 3, grid);
  CHECK(sep.t_best == 0.0);
  CHECK_FALSE(sep.report.detected);

  const auto span = detected_t_span(grid, r.margins);
  REQUIRE(span.has_value());
  CHECK(span->first == -0.01);
  CHECK(span->second == 0.01);
  CHECK_FALSE(detected_t_span(grid, sep.margins).has_value());

  CHECK_THROWS_AS(best_margin_over_t(iso, 3, std::vector<double>{}), ParameterError);
  CHECK_THROWS_AS(best_margin_over_t(iso, 3, std::vector<double>{0.02}),
                  InfeasibleParameterError);
  CHECK_THROWS_AS(best_margin_over_t(iso, 2, grid), DimensionError);
}

TEST_CASE("3x3 PPT entangled states are caught at small |t|") {
  const auto grid = std::vector<double>{-0.01, 0.01};
  for (int k = 1; k <= 99; ++k) {
    const double x = 0.01 * k;
    const auto r = best_margin_over_t(horodecki_3x3(x), 3, grid);
    INFO("x = " << x);
    CHECK(r.report.detected);
  }
}
