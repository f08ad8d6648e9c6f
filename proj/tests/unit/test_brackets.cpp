#include <cmath>
#include <random>

#include "doctest.h"
#include "nlosc/brackets.hpp"
#include "nlosc/modes.hpp"
#include "test_helpers.hpp"

using namespace nlosc;

namespace {

TestFunction random_test_function(std::mt19937_64& rng, double alpha) {
  std::uniform_real_distribution<double> lo_dist(-4.0 * alpha, 3.0 * alpha);
  std::uniform_real_distribution<double> width_dist(0.3 * alpha, 2.5 * alpha);
  const double lo = lo_dist(rng);
  const double hi = lo + width_dist(rng);
  return (rng() % 2 == 0) ? TestFunction::indicator(lo, hi) : TestFunction::bump(lo, hi);
}

}  // namespace

TEST_CASE("smeared kernel picks up odd shifts with alternating sign") {
  const PhysicalParams p = validate_params(1.0, 1.0);
  const TestFunction f = TestFunction::indicator(0.0, 0.5);
  CHECK(std::fabs(f_kernel_smeared(f, TestFunction::indicator(1.0, 1.5), p) - 0.5) < 1e-13);
  CHECK(std::fabs(f_kernel_smeared(f, TestFunction::indicator(3.0, 3.5), p) + 0.5) < 1e-13);
  CHECK(std::fabs(f_kernel_smeared(f, TestFunction::indicator(-1.0, -0.5), p) + 0.5) < 1e-13);
  CHECK(std::fabs(f_kernel_smeared(f, TestFunction::indicator(2.0, 2.5), p)) == 0.0);

  const PhysicalParams q = validate_params(2.0, 0.5);
  const double a = q.alpha;
  const double expected = a * a * a / (2.0 * q.m);
  CHECK(std::fabs(f_kernel_smeared(TestFunction::indicator(0.0, a / 2),
                                   TestFunction::indicator(a, 3 * a / 2), q) -
                  expected) < 1e-13);
}

TEST_CASE("smeared kernel vanishes on equal arguments and zero functions") {
  const PhysicalParams p = validate_params(1.0, 1.0);
  const TestFunction wide = TestFunction::indicator(0.0, 2.0);
  CHECK(std::fabs(f_kernel_smeared(wide, wide, p)) < 1e-13);
  const TestFunction smooth = TestFunction::bump(-1.3, 2.2);
  CHECK(std::fabs(f_kernel_smeared(smooth, smooth, p)) < 1e-13);

  TestFunction zero = TestFunction::indicator(0.0, 1.0);
  zero.eval = [](double) { return 0.0; };
  CHECK(f_kernel_smeared(wide, zero, p) == 0.0);
}

TEST_CASE("kernel antisymmetry and alpha-shift identity hold on random pairs") {
  std::mt19937_64 rng(83);
  for (double alpha : {0.5, 1.0, 2.0}) {
    for (double m : {1.0, 1.7}) {
      const PhysicalParams p = validate_params(m, alpha);
      for (int trial = 0; trial < 10; ++trial) {
        const TestFunction f = random_test_function(rng, alpha);
        const TestFunction g = random_test_function(rng, alpha);
        CHECK(check_antisymmetry(f, g, p) < 1e-12);
        CHECK(check_shift_identity(f, g, p) < 1e-12);
      }
    }
  }
}

TEST_CASE("coordinate-momentum bracket fires only on even separations") {
  const PhysicalParams p = validate_params(1.0, 1.0);
  const TestFunction g = TestFunction::indicator(0.0, 0.5);

  SUBCASE("coincident supports inside the kernel rectangle") {
    CHECK(std::fabs(qp_bracket_smeared(g, g, p) - 0.5) < 1e-13);
  }
  SUBCASE("separation 2 alpha flips the sign") {
    const TestFunction f = TestFunction::indicator(-2.0, -1.5);
    CHECK(std::fabs(qp_bracket_smeared(f, g, p) + 0.5) < 1e-13);
  }
  SUBCASE("odd separation lies off the even-shift comb") {
    const TestFunction f = TestFunction::indicator(-1.0, -0.5);
    CHECK(std::fabs(qp_bracket_smeared(f, g, p)) == 0.0);
  }
  SUBCASE("momentum smearing outside the kernel rectangle gives nothing") {
    const TestFunction outside = TestFunction::indicator(1.2, 1.8);
    CHECK(qp_bracket_smeared(g, outside, p) == 0.0);
    const TestFunction negative = TestFunction::indicator(-0.9, -0.1);
    CHECK(qp_bracket_smeared(g, negative, p) == 0.0);
  }
  SUBCASE("zero test function") {
    TestFunction zero = TestFunction::indicator(0.0, 1.0);
    zero.eval = [](double) { return 0.0; };
    CHECK(qp_bracket_smeared(zero, g, p) == 0.0);
  }
  SUBCASE("general parameters scale out of the coincident value") {
    const PhysicalParams q = validate_params(0.5, 2.0);
    const TestFunction h = TestFunction::indicator(0.0, 1.0);
    CHECK(std::fabs(qp_bracket_smeared(h, h, q) - 1.0) < 1e-13);
  }
}

TEST_CASE("momentum-momentum bracket vanishes") {
  std::mt19937_64 rng(89);
  for (double alpha : {0.5, 1.0, 2.0}) {
    const PhysicalParams p = validate_params(1.3, alpha);
    for (int trial = 0; trial < 10; ++trial) {
      const TestFunction f = random_test_function(rng, alpha);
      const TestFunction g = random_test_function(rng, alpha);
      CHECK(std::fabs(pp_bracket_smeared(f, g, p)) < 1e-13);
    }
    const TestFunction inside = TestFunction::indicator(0.1 * alpha, 0.9 * alpha);
    CHECK(std::fabs(pp_bracket_smeared(inside, inside, p)) < 1e-13);
  }
}

TEST_CASE("closed-form mode bracket") {
  const PhysicalParams p = validate_params(1.0, 1.0);
  CHECK(mode_bracket(0, -1, p) == Complex(0.0, 1.0));
  CHECK(mode_bracket(1, -2, p) == Complex(0.0, -1.0));
  CHECK(mode_bracket(-1, 0, p) == Complex(0.0, -1.0));
  CHECK(mode_bracket(3, -4, p) == Complex(0.0, -1.0));
  CHECK(mode_bracket(0, 5, p) == Complex(0.0, 0.0));
  CHECK(mode_bracket(2, 2, p) == Complex(0.0, 0.0));

  const PhysicalParams q = validate_params(0.5, 2.0);
  CHECK(mode_bracket(0, -1, q) == Complex(0.0, 8.0));
}

TEST_CASE("kernel integral reproduces the closed-form mode bracket") {
  for (double alpha : {1.0, 0.7}) {
    const PhysicalParams p = validate_params(alpha == 1.0 ? 1.0 : 1.3, alpha);
    for (int m = -4; m <= 4; ++m)
      for (int n = -4; n <= 4; ++n)
        CHECK(std::abs(mode_bracket_from_kernel(m, n, p) - mode_bracket(m, n, p)) < 1e-10);
  }
}

TEST_CASE("oscillator-variable bracket") {
  CHECK(c_bracket(0, 0) == Complex(0.0, -1.0));
  CHECK(c_bracket(3, 3) == Complex(0.0, -1.0));
  CHECK(c_bracket(1, 2) == Complex(0.0, 0.0));
  CHECK_THROWS_AS(c_bracket(-1, 0), std::invalid_argument);
  CHECK_THROWS_AS(c_bracket(0, -2), std::invalid_argument);
}

TEST_CASE("oscillator bracket is consistent with the mode bracket under the index map") {
  const PhysicalParams p = validate_params(1.0, 1.0);
  auto a_index_of_c = [](int k) { return (k % 2 == 1) ? k : -(k + 1); };
  auto a_index_of_cbar = [](int k) { return (k % 2 == 1) ? -(k + 1) : k; };
  for (int m = 0; m <= 6; ++m) {
    for (int n = 0; n <= 6; ++n) {
      const Complex via_modes = mode_bracket(a_index_of_c(m), a_index_of_cbar(n), p);
      CHECK(via_modes == c_bracket(m, n));
    }
  }
}

TEST_CASE("mode brackets generate the shift flow through the Hamiltonian") {
  std::mt19937_64 rng(97);
  const PhysicalParams p = validate_params(1.0, 1.0);

  SUBCASE("closure residual is tiny on random real states") {
    for (int trial = 0; trial < 10; ++trial) {
      const ModeCoeffs coeffs = testing::random_real_coeffs(8, rng);
      CHECK(hamiltonian_flow_check(coeffs, p) < 1e-12);
    }
    const PhysicalParams q = validate_params(1.7, 0.6);
    CHECK(hamiltonian_flow_check(testing::random_real_coeffs(6, rng), q) < 1e-12);
  }

  SUBCASE("empty state closes exactly") {
    CHECK(hamiltonian_flow_check(ModeCoeffs(4), p) == 0.0);
  }

  SUBCASE("dropping the alternating sign destroys the closure") {
    ModeCoeffs coeffs = testing::random_real_coeffs(4, rng);
    coeffs.at(0) = 1.0;
    coeffs.at(-1) = 1.0;
    const double prefactor = p.m / (2.0 * p.alpha * p.alpha);
    double worst = 0.0;
    for (int m = -4; m < 4; ++m) {
      Complex flow = 0.0;
      for (int k = -4; k < 4; ++k)
        flow += mode_omega(k, p.alpha) *
                (mode_bracket(m, k, p) * coeffs.at(-(k + 1)) +
                 coeffs.at(k) * mode_bracket(m, -(k + 1), p));
      const Complex expected = Complex(0.0, mode_omega(m, p.alpha)) * coeffs.at(m);
      worst = std::max(worst, std::abs(prefactor * flow - expected));
    }
    CHECK(worst > 1e-2);
  }
}
