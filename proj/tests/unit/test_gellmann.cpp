#include <doctest.h>

#include <cmath>

#include "gsic/errors.hpp"
#include "gsic/gellmann.hpp"
#include "test_support.hpp"

using namespace gsic;

namespace {

const double r2 = 1.0 / std::sqrt(2.0);
const double r6 = 1.0 / std::sqrt(6.0);
const Complex I(0.0, 1.0);

// Qutrit matrices G1..G9 as printed in the worked d = 3 example.
std::vector<ComplexMatrix> printed_qutrit_basis() {
  return {
      {{r2, 0, 0}, {0, -r2, 0}, {0, 0, 0}},
      {{0, r2, 0}, {r2, 0, 0}, {0, 0, 0}},
      {{0, 0, r2}, {0, 0, 0}, {r2, 0, 0}},
      {{0, -I * r2, 0}, {I * r2, 0, 0}, {0, 0, 0}},
      {{r6, 0, 0}, {0, r6, 0}, {0, 0, -std::sqrt(2.0 / 3.0)}},
      {{0, 0, 0}, {0, 0, r2}, {0, r2, 0}},
      {{0, 0, -I * r2}, {0, 0, 0}, {I * r2, 0, 0}},
      {{0, 0, 0}, {0, 0, -I * r2}, {0, I * r2, 0}},
      {{r2 + r6, (1.0 - I) * r2, (1.0 - I) * r2},
       {(1.0 + I) * r2, -r2 + r6, (1.0 - I) * r2},
       {(1.0 + I) * r2, (1.0 + I) * r2, -std::sqrt(2.0 / 3.0)}},
  };
}

}  // namespace

TEST_CASE("qubit basis is the normalized Pauli set") {
  const auto b = gellmann_basis(2);
  REQUIRE(b.elements.size() == 3);
  CHECK(approx_equal(b.elements[0], ComplexMatrix{{0, r2}, {r2, 0}}, 1e-15));
  CHECK(approx_equal(b.elements[1], ComplexMatrix{{0, -I * r2}, {I * r2, 0}}, 1e-15));
  CHECK(approx_equal(b.elements[2], ComplexMatrix{{r2, 0}, {0, -r2}}, 1e-15));
}

TEST_CASE("qutrit basis matches the printed G1..G8 entry by entry") {
  const auto b = gellmann_basis(3);
  const auto printed = printed_qutrit_basis();
  REQUIRE(b.elements.size() == 8);
  for (std::size_t k = 0; k < 8; ++k) {
    INFO("G" << k + 1);
    CHECK(max_abs_diff(b.elements[k], printed[k]) <= 1e-12);
  }
  CHECK(max_abs_diff(b.sum, printed[8]) <= 1e-12);
}

TEST_CASE("basis is orthonormal, traceless and Hermitian for d = 2..5") {
  for (std::size_t d = 2; d <= 5; ++d) {
    INFO("d = " << d);
    const auto b = gellmann_basis(d);
    REQUIRE(b.elements.size() == d * d - 1);
    ComplexMatrix sum(d, d);
    for (std::size_t i = 0; i < b.elements.size(); ++i) {
      const auto& fi = b.elements[i];
      CHECK(std::abs(trace(fi)) <= 1e-12);
      CHECK(hermitian_asymmetry(fi) <= 1e-12);
      for (std::size_t j = 0; j < b.elements.size(); ++j) {
        const double expected = i == j ? 1.0 : 0.0;
        CHECK(std::abs(trace_of_product(fi, b.elements[j]) - expected) <= 1e-12);
      }
      sum += fi;
    }
    CHECK(max_abs_diff(sum, b.sum) <= 1e-12);
  }
}

TEST_CASE("basis plus identity is complete on Hermitian operators") {
  testing::Rng rng(31);
  for (std::size_t d = 2; d <= 5; ++d) {
    const auto b = gellmann_basis(d);
    for (int trial = 0; trial < 5; ++trial) {
      const auto m = testing::random_hermitian(rng, d);
      ComplexMatrix rebuilt =
          ComplexMatrix::identity(d) * (trace(m) / static_cast<double>(d));
      for (const auto& f : b.elements) rebuilt += f * trace_of_product(f, m);
      CHECK(max_abs_diff(rebuilt, m) <= 1e-10);
    }
  }
}

TEST_CASE("general-d ordering: symmetric, antisymmetric, diagonal") {
  const auto b = gellmann_basis(4);
  // 6 symmetric, 6 antisymmetric, 3 diagonal.
  CHECK(b.elements[0](0, 1) == Complex(r2, 0));
  CHECK(b.elements[5](2, 3) == Complex(r2, 0));
  CHECK(b.elements[6](0, 1) == Complex(0, -r2));
  CHECK(b.elements[11](2, 3) == Complex(0, -r2));
  CHECK(b.elements[14](3, 3).real() == doctest::Approx(-3.0 / std::sqrt(12.0)));
}

TEST_CASE("dimension below two is rejected") {
  CHECK_THROWS_AS(gellmann_basis(1), ParameterError);
  CHECK_THROWS_AS(gellmann_basis(0), ParameterError);
}
