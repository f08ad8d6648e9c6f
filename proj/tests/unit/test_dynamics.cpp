#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "nlosc/dynamics.hpp"
#include "nlosc/modes.hpp"
#include "test_helpers.hpp"

using namespace nlosc;

namespace {

constexpr double kPi = std::numbers::pi;

ModeCoeffs pair_state(double alpha) {
  ModeCoeffs coeffs(1, true);
  coeffs.at(0) = std::sqrt(alpha / 2.0);
  coeffs.at(-1) = std::sqrt(alpha / 2.0);
  return coeffs;
}

}  // namespace

TEST_CASE("frequency spectrum hits the characteristic zeros") {
  for (double alpha : {0.5, 1.0, 2.0}) {
    const FrequencySpectrum spectrum{alpha};
    CHECK(spectrum.omega(0) == mode_omega(0, alpha));
    for (int n = -33; n <= 33; ++n) {
      CHECK(spectrum.omega(-(n + 1)) == -spectrum.omega(n));
      CHECK(std::fabs(spectrum.characteristic_cos(n)) < 1e-15);
    }
  }
}

TEST_CASE("evolve_modes phases, revival, and reality preservation") {
  std::mt19937_64 rng(31);
  const double alpha = 0.8;
  const ModeCoeffs coeffs = testing::random_real_coeffs(6, rng);

  SUBCASE("t = 0 is the identity") {
    const ModeCoeffs same = evolve_modes(coeffs, 0.0, alpha);
    for (int n = -6; n < 6; ++n) CHECK(same.at(n) == coeffs.at(n));
  }
  SUBCASE("revival at 4 alpha is exact") {
    const ModeCoeffs revived = evolve_modes(coeffs, 4.0 * alpha, alpha);
    for (int n = -6; n < 6; ++n) CHECK(revived.at(n) == coeffs.at(n));
  }
  SUBCASE("single phase factor") {
    const ModeCoeffs moved = evolve_modes(coeffs, 0.37, alpha);
    for (int n = -6; n < 6; ++n) {
      const Complex expected = coeffs.at(n) * std::polar(1.0, mode_omega(n, alpha) * 0.37);
      CHECK(std::abs(moved.at(n) - expected) < 1e-15);
    }
  }
  SUBCASE("reality is preserved for random times") {
    std::uniform_real_distribution<double> dist(0.0, 50.0 * alpha);
    for (int i = 0; i < 50; ++i) {
      const ModeCoeffs moved = evolve_modes(coeffs, dist(rng), alpha);
      CHECK(moved.real);
      CHECK(reality_residual(moved) < 1e-15);
    }
  }
}

TEST_CASE("shift_evolve_field in both pictures") {
  std::mt19937_64 rng(37);
  const double alpha = 1.0;
  const PhysicalParams p = validate_params(1.0, alpha);
  const ModeCoeffs coeffs = testing::random_real_coeffs(5, rng);
  const LambdaField field = LambdaField::from_modes(coeffs, p, 256);

  SUBCASE("t = 0 keeps the samples") {
    const LambdaField same = shift_evolve_field(field, 0.0);
    for (int j = 0; j < field.grid_size; ++j) CHECK(same.samples[j] == field.samples[j]);
  }
  SUBCASE("t = 2 alpha negates the samples exactly") {
    const LambdaField negated = shift_evolve_field(field, 2.0 * alpha);
    for (int j = 0; j < field.grid_size; ++j) CHECK(negated.samples[j] == -field.samples[j]);
  }
  SUBCASE("one grid step rolls the samples exactly") {
    const double h = 2.0 * alpha / field.grid_size;
    const LambdaField rolled = shift_evolve_field(field, h);
    for (int j = 0; j + 1 < field.grid_size; ++j) CHECK(rolled.samples[j] == field.samples[j + 1]);
    CHECK(rolled.samples[field.grid_size - 1] == -field.samples[0]);
  }
  SUBCASE("agrees with the mode picture pointwise") {
    for (double t : {0.37, 1.93, 7.11}) {
      const LambdaField shifted = shift_evolve_field(field, t);
      const ModeCoeffs evolved = evolve_modes(coeffs, t, alpha);
      for (int j = 0; j < field.grid_size; ++j)
        CHECK(std::abs(shifted.samples[j] - synthesize(evolved, field.lambda_at(j), alpha)) <
              1e-10);
    }
  }
}

TEST_CASE("trajectory of the lowest pair state is a pure cosine") {
  for (double alpha : {0.5, 1.0, 2.0}) {
    const ModeCoeffs coeffs = pair_state(alpha);
    std::vector<double> times;
    for (int i = 0; i <= 200; ++i) times.push_back(8.0 * alpha * i / 200.0);
    const Trajectory traj = trajectory(coeffs, times, alpha);
    for (std::size_t i = 0; i < times.size(); ++i)
      CHECK(traj.values[i] ==
            doctest::Approx(std::cos(kPi * times[i] / (2.0 * alpha))).epsilon(1e-13));
  }
}

TEST_CASE("trajectory guards") {
  const double alpha = 1.0;
  SUBCASE("zero coefficients give the zero trajectory") {
    const ModeCoeffs zero(4);
    const Trajectory traj = trajectory(zero, {0.0, 1.0, 2.0}, alpha);
    for (double v : traj.values) CHECK(v == 0.0);
  }
  SUBCASE("imaginary residue throws") {
    ModeCoeffs complex_state(1);
    complex_state.at(0) = 1.0;  // no reality partner
    CHECK_THROWS_AS(trajectory(complex_state, {0.0, 0.5}, alpha), NonRealTrajectory);
  }
  SUBCASE("non-increasing times throw") {
    const ModeCoeffs zero(2);
    CHECK_THROWS_AS(trajectory(zero, {0.0, 0.0}, alpha), std::invalid_argument);
  }
  SUBCASE("imaginary residue stays tiny on reality-satisfying states") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
      const ModeCoeffs coeffs = testing::random_real_coeffs(8, rng);
      std::vector<double> times;
      for (int i = 0; i <= 64; ++i) times.push_back(20.0 * alpha * i / 64.0);
      double worst = 0.0;
      for (double t : times) worst = std::max(worst, std::fabs(q_value(coeffs, t, alpha).imag()));
      CHECK(worst < 1e-12);
    }
  }
}

TEST_CASE("eom_residual vanishes on the mode solutions and flags detuning") {
  std::mt19937_64 rng(43);
  SUBCASE("relative residual over long horizons") {
    for (double alpha : {0.5, 1.0, 2.0}) {
      for (int trial = 0; trial < 20; ++trial) {
        const ModeCoeffs coeffs = testing::random_real_coeffs(8, rng);
        const double scale = testing::max_abs_q(coeffs, alpha);
        REQUIRE(scale > 0.0);
        for (int i = 0; i <= 40; ++i) {
          const double t = 20.0 * alpha * i / 40.0;
          CHECK(eom_residual(coeffs, t, alpha) < 1e-12 * scale);
        }
      }
    }
  }
  SUBCASE("zero state is exact") { CHECK(eom_residual(ModeCoeffs(4), 3.7, 1.0) == 0.0); }
  SUBCASE("a 10 percent detuned frequency breaks the residual badly") {
    const double alpha = 1.0;
    const ModeCoeffs coeffs = testing::random_real_coeffs(4, rng);
    auto detuned_q = [&](double t) {
      Complex sum = 0.0;
      for (int n = -4; n < 4; ++n) {
        const double omega = (n == 0 ? 1.1 : 1.0) * mode_omega(n, alpha);
        sum += coeffs.at(n) * std::polar(1.0 / std::sqrt(2.0 * alpha), omega * t);
      }
      return sum;
    };
    double worst = 0.0;
    for (int i = 0; i <= 40; ++i) {
      const double t = 10.0 * i / 40.0;
      worst = std::max(worst, std::abs(detuned_q(t - alpha) + detuned_q(t + alpha)));
    }
    CHECK(worst > 1e-2);
  }
}

TEST_CASE("the three Hamiltonian forms agree") {
  std::mt19937_64 rng(47);
  SUBCASE("pair state gives pi/4 at unit parameters") {
    const PhysicalParams p = validate_params(1.0, 1.0);
    const ModeCoeffs coeffs = pair_state(1.0);
    CHECK(hamiltonian_modes(coeffs, p) == doctest::Approx(kPi / 4).epsilon(1e-15));
    CHECK(hamiltonian_field(LambdaField::from_modes(coeffs, p, 4096), p) ==
          doctest::Approx(kPi / 4).epsilon(1e-12));
    CHECK(hamiltonian_c(to_c_vars(coeffs, p), p) == doctest::Approx(kPi / 4).epsilon(1e-15));
  }
  SUBCASE("random states across parameter values") {
    for (double alpha : {0.5, 1.0, 2.0}) {
      for (double m : {1.0, 1.7}) {
        const PhysicalParams p = validate_params(m, alpha);
        const ModeCoeffs coeffs = testing::random_real_coeffs(8, rng);
        const double h_modes = hamiltonian_modes(coeffs, p);
        const double h_field = hamiltonian_field(LambdaField::from_modes(coeffs, p, 4096), p);
        const double h_c = hamiltonian_c(to_c_vars(coeffs, p), p);
        CHECK(std::fabs(h_field - h_modes) < 1e-10);
        CHECK(std::fabs(h_modes - h_c) < 1e-12 * std::max(1.0, std::fabs(h_modes)));
      }
    }
  }
  SUBCASE("zero data gives zero energy") {
    const PhysicalParams p = validate_params(1.0, 1.0);
    CHECK(hamiltonian_modes(ModeCoeffs(4), p) == 0.0);
    CHECK(hamiltonian_field(LambdaField::from_samples(std::vector<Complex>(64), p), p) == 0.0);
    CHECK(hamiltonian_c(CVars(4), p) == 0.0);
  }
  SUBCASE("field energy scales quadratically") {
    const PhysicalParams p = validate_params(1.0, 1.0);
    const ModeCoeffs coeffs = testing::random_real_coeffs(4, rng);
    ModeCoeffs scaled(4, true);
    for (int n = -4; n < 4; ++n) scaled.at(n) = 3.0 * coeffs.at(n);
    const double h1 = hamiltonian_field(LambdaField::from_modes(coeffs, p, 1024), p);
    const double h9 = hamiltonian_field(LambdaField::from_modes(scaled, p, 1024), p);
    CHECK(h9 == doctest::Approx(9.0 * h1).epsilon(1e-12));
  }
  SUBCASE("imaginary energy is refused") {
    const PhysicalParams p = validate_params(1.0, 1.0);
    ModeCoeffs skew(1);
    skew.at(0) = 1.0;
    skew.at(-1) = Complex(0.0, 1.0);
    CHECK_THROWS_AS(hamiltonian_modes(skew, p), NonRealEnergy);
  }
}

TEST_CASE("mode energy is conserved and the state revives") {
  std::mt19937_64 rng(53);
  const double alpha = 0.9;
  const PhysicalParams p = validate_params(1.2, alpha);
  const ModeCoeffs coeffs = testing::random_real_coeffs(8, rng);
  const double h0 = hamiltonian_modes(coeffs, p);
  std::uniform_real_distribution<double> dist(0.0, 100.0 * alpha);
  for (int i = 0; i < 50; ++i) {
    const double t = dist(rng);
    CHECK(std::fabs(hamiltonian_modes(evolve_modes(coeffs, t, alpha), p) - h0) <
          1e-12 * std::max(1.0, std::fabs(h0)));
  }
  const ModeCoeffs revived = evolve_modes(coeffs, 4.0 * alpha, alpha);
  for (int n = -8; n < 8; ++n) CHECK(std::abs(revived.at(n) - coeffs.at(n)) <= 1e-12);
}

TEST_CASE("hamiltonian_c matches substitution values") {
  const PhysicalParams p = validate_params(1.0, 1.0);
  CVars c(2);
  c.at(0) = 1.0;
  CHECK(hamiltonian_c(c, p) == doctest::Approx(kPi / 2).epsilon(1e-15));
  c.at(0) = 0.0;
  c.at(1) = 1.0;
  CHECK(hamiltonian_c(c, p) == doctest::Approx(-3 * kPi / 2).epsilon(1e-15));

  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    CVars random_c(6);
    for (int k = 0; k < 6; ++k) random_c.at(k) = Complex(dist(rng), dist(rng));
    const double via_modes = hamiltonian_modes(from_c_vars(random_c, p), p);
    const double direct = hamiltonian_c(random_c, p);
    CHECK(std::fabs(via_modes - direct) < 1e-12 * std::max(1.0, std::fabs(direct)));
  }
}

TEST_CASE("harmonic limit frequency and its ratio to the exact ladder") {
  CHECK(harmonic_approx_frequency(1.0) == std::sqrt(2.0));
  CHECK(harmonic_approx_frequency(2.0) == std::sqrt(2.0) / 2.0);
  CHECK_THROWS_AS(harmonic_approx_frequency(0.0), NonPositiveParameter);
  for (double alpha : {0.3, 0.5, 1.0, 1.7, 2.0}) {
    const double ratio = FrequencySpectrum{alpha}.omega(0) / harmonic_approx_frequency(alpha);
    CHECK(std::fabs(ratio - 1.1107207345395915) < 1e-12);
  }
}
