#include "nlosc/modes.hpp"

#include <cmath>
#include <numbers>

namespace nlosc {

double mode_omega(int n, double alpha) {
  return std::numbers::pi * (2.0 * n + 1.0) / (2.0 * alpha);
}

Complex psi(int n, double lambda, double alpha) {
  return std::polar(1.0 / std::sqrt(2.0 * alpha), mode_omega(n, alpha) * lambda);
}

Complex synthesize(const ModeCoeffs& coeffs, double lambda, double alpha) {
  std::complex<long double> sum = 0.0L;
  for (int n = -coeffs.n_max; n < coeffs.n_max; ++n)
    sum += static_cast<std::complex<long double>>(coeffs.at(n) * psi(n, lambda, alpha));
  return static_cast<Complex>(sum);
}

Complex synthesize_derivative(const ModeCoeffs& coeffs, double lambda, double alpha) {
  std::complex<long double> sum = 0.0L;
  for (int n = -coeffs.n_max; n < coeffs.n_max; ++n) {
    const Complex term =
        coeffs.at(n) * Complex(0.0, mode_omega(n, alpha)) * psi(n, lambda, alpha);
    sum += static_cast<std::complex<long double>>(term);
  }
  return static_cast<Complex>(sum);
}

Eigen::MatrixXcd gram_matrix(int n_max, double alpha, int grid_size) {
  if (n_max < 1) throw std::invalid_argument("gram_matrix: n_max must be positive");
  if (grid_size < 2) throw std::invalid_argument("gram_matrix: grid_size must be >= 2");
  const int w = 2 * n_max;
  const double dl = 2.0 * alpha / grid_size;

  // Precompute basis samples over the grid.
  Eigen::MatrixXcd basis(w, grid_size);
  for (int p = 0; p < w; ++p)
    for (int j = 0; j < grid_size; ++j) {
      const double lambda = -alpha + dl * j;
      basis(p, j) = psi(p - n_max, lambda, alpha);
    }

  Eigen::MatrixXcd gram(w, w);
  for (int p = 0; p < w; ++p)
    for (int q = 0; q < w; ++q) {
      std::complex<long double> sum = 0.0L;
      for (int j = 0; j < grid_size; ++j)
        sum += static_cast<std::complex<long double>>(std::conj(basis(p, j)) * basis(q, j));
      gram(p, q) = static_cast<Complex>(sum * static_cast<long double>(dl));
    }
  return gram;
}

ModeCoeffs project(const LambdaField& field, int n_max) {
  if (n_max < 1) throw std::invalid_argument("project: n_max must be positive");
  const double alpha = field.params.alpha;
  const double dl = 2.0 * alpha / field.grid_size;
  ModeCoeffs out(n_max);
  for (int n = -n_max; n < n_max; ++n) {
    std::complex<long double> sum = 0.0L;
    for (int j = 0; j < field.grid_size; ++j) {
      const double lambda = field.lambda_at(j);
      sum += static_cast<std::complex<long double>>(
          std::conj(psi(n, lambda, alpha)) * field.samples[static_cast<std::size_t>(j)]);
    }
    out.at(n) = static_cast<Complex>(sum * static_cast<long double>(dl));
  }
  return out;
}

double reality_residual(const ModeCoeffs& coeffs) {
  double worst = 0.0;
  for (int n = -coeffs.n_max; n < coeffs.n_max; ++n)
    worst = std::max(worst, std::abs(std::conj(coeffs.at(n)) - coeffs.at(-(n + 1))));
  return worst;
}

bool check_reality(const ModeCoeffs& coeffs, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("check_reality: tol must be positive");
  return reality_residual(coeffs) <= tol;
}

CVars to_c_vars(const ModeCoeffs& coeffs, const PhysicalParams& params, double tol) {
  const double scale = std::sqrt(params.m) / params.alpha;
  CVars c(coeffs.n_max);
  for (int k = 0; k < coeffs.n_max; ++k) {
    // Each c_k has a direct read and a conjugated read from the partner slot;
    // the reality pairing makes them equal.
    Complex direct, conjugated;
    if (k % 2 == 1) {
      direct = scale * coeffs.at(k);
      conjugated = std::conj(scale * coeffs.at(-(k + 1)));
    } else {
      direct = scale * coeffs.at(-(k + 1));
      conjugated = std::conj(scale * coeffs.at(k));
    }
    if (std::abs(direct - conjugated) > tol)
      throw RealityViolation("to_c_vars: redundant reads of c_" + std::to_string(k) +
                             " disagree beyond tolerance");
    c.at(k) = 0.5 * (direct + conjugated);
  }
  return c;
}

ModeCoeffs from_c_vars(const CVars& c, const PhysicalParams& params) {
  const double scale = params.alpha / std::sqrt(params.m);
  ModeCoeffs coeffs(c.k_max, true);
  for (int k = 0; k < c.k_max; ++k) {
    if (k % 2 == 1) {
      coeffs.at(k) = scale * c.at(k);
      coeffs.at(-(k + 1)) = std::conj(coeffs.at(k));
    } else {
      coeffs.at(-(k + 1)) = scale * c.at(k);
      coeffs.at(k) = std::conj(coeffs.at(-(k + 1)));
    }
  }
  return coeffs;
}

}  // namespace nlosc
