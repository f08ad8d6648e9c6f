#include "nlosc/dynamics.hpp"

#include <cmath>
#include <numbers>

#include "nlosc/modes.hpp"
#include "nlosc/quadrature.hpp"

namespace nlosc {

namespace {

/// t reduced modulo the revival period 4 alpha; fmod is exact in IEEE
/// arithmetic and every mode phase is 2 pi (2n+1)-periodic over 4 alpha.
double reduce_time(double t, double alpha) { return std::fmod(t, 4.0 * alpha); }

double imag_guarded_real(const Complex& value, double imag_tol, const char* what) {
  if (std::abs(value.imag()) > imag_tol * std::max(1.0, std::abs(value.real())))
    throw NonRealEnergy(std::string(what) + ": imaginary residue exceeds tolerance");
  return value.real();
}

}  // namespace

double FrequencySpectrum::omega(int n) const { return mode_omega(n, alpha); }

double FrequencySpectrum::characteristic_cos(int n) const {
  long long quarter_turns = 2LL * n + 1LL;
  long long r = quarter_turns % 4LL;
  if (r < 0) r += 4LL;
  return std::cos(0.5 * std::numbers::pi * static_cast<double>(r));
}

ModeCoeffs evolve_modes(const ModeCoeffs& coeffs, double t, double alpha) {
  const double tr = reduce_time(t, alpha);
  ModeCoeffs out(coeffs.n_max, coeffs.real);
  for (int n = -coeffs.n_max; n < coeffs.n_max; ++n)
    out.at(n) = coeffs.at(n) * std::polar(1.0, mode_omega(n, alpha) * tr);
  return out;
}

LambdaField shift_evolve_field(const LambdaField& field, double t) {
  const int n = field.grid_size;
  const double alpha = field.params.alpha;

  LambdaField out;
  out.params = field.params;
  out.grid_size = n;
  out.samples.resize(static_cast<std::size_t>(n));

  // Whole-grid-step shifts roll the samples exactly.
  const double steps = t * (static_cast<double>(n) / (2.0 * alpha));
  const double near = std::round(steps);
  if (std::fabs(steps - near) <= 1e-6 && std::fabs(near) < 9e15) {
    const long long k = std::llround(near);
    for (long long j = 0; j < n; ++j) {
      long long idx = j + k;
      long long wraps = idx >= 0 ? idx / n : -((-idx + n - 1) / n);
      idx -= wraps * n;
      const double sign = (wraps % 2 == 0) ? 1.0 : -1.0;
      out.samples[static_cast<std::size_t>(j)] =
          sign * field.samples[static_cast<std::size_t>(idx)];
    }
  } else {
    for (int j = 0; j < n; ++j)
      out.samples[static_cast<std::size_t>(j)] = extend_field(field, field.lambda_at(j) + t);
  }

  if (field.source) out.source = evolve_modes(*field.source, t, alpha);
  return out;
}

Complex q_value(const ModeCoeffs& coeffs, double t, double alpha) {
  const double tr = reduce_time(t, alpha);
  const double norm = 1.0 / std::sqrt(2.0 * alpha);
  std::complex<long double> sum = 0.0L;
  for (int n = -coeffs.n_max; n < coeffs.n_max; ++n) {
    const Complex term = coeffs.at(n) * std::polar(norm, mode_omega(n, alpha) * tr);
    sum += static_cast<std::complex<long double>>(term);
  }
  return static_cast<Complex>(sum);
}

Trajectory trajectory(const ModeCoeffs& coeffs, const std::vector<double>& times, double alpha,
                      double imag_tol) {
  for (std::size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1]))
      throw std::invalid_argument("trajectory: times must be strictly increasing");

  Trajectory out;
  out.times = times;
  out.values.resize(times.size());
  double max_imag = 0.0, max_real = 0.0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    const Complex q = q_value(coeffs, times[i], alpha);
    max_imag = std::max(max_imag, std::fabs(q.imag()));
    max_real = std::max(max_real, std::fabs(q.real()));
    out.values[i] = q.real();
  }
  if (max_imag > imag_tol * std::max(1.0, max_real))
    throw NonRealTrajectory("trajectory: imaginary residue exceeds tolerance");
  return out;
}

double eom_residual(const ModeCoeffs& coeffs, double t, double alpha) {
  const double tr = reduce_time(t, alpha);
  return std::abs(q_value(coeffs, tr - alpha, alpha) + q_value(coeffs, tr + alpha, alpha));
}

double hamiltonian_field(const LambdaField& field, const PhysicalParams& params,
                         double imag_tol) {
  const double alpha = params.alpha;
  const ModeCoeffs modes =
      field.source ? *field.source
                   : project(field, std::max(1, std::min(field.grid_size / 4, 128)));

  // Integral of Q(l - alpha) Q'(l) over (0, alpha); the integrand is
  // band-limited, so a few high-order panels integrate it to rounding.
  const int order = 48;
  const int panels = 1 + modes.n_max / 4;
  const GaussRule& rule = gauss_legendre(order);
  std::complex<long double> integral = 0.0L;
  const double h = alpha / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = (p + 0.5) * h;
    const double half = 0.5 * h;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double l = mid + half * rule.nodes[i];
      const Complex value = synthesize(modes, l - alpha, alpha) *
                            synthesize_derivative(modes, l, alpha);
      integral += static_cast<long double>(half * rule.weights[i]) *
                  static_cast<std::complex<long double>>(value);
    }
  }

  const double coupling = params.m / (alpha * alpha);
  const Complex boundary = extend_field(field, 0.0) * extend_field(field, alpha);
  const Complex h_value =
      -coupling * static_cast<Complex>(integral) + coupling * boundary;
  return imag_guarded_real(h_value, imag_tol, "hamiltonian_field");
}

double hamiltonian_modes(const ModeCoeffs& coeffs, const PhysicalParams& params,
                         double imag_tol) {
  const double alpha = params.alpha;
  std::complex<long double> sum = 0.0L;
  for (int n = -coeffs.n_max; n < coeffs.n_max; ++n) {
    const Complex term =
        parity_sign(n) * mode_omega(n, alpha) * coeffs.at(n) * coeffs.at(-(n + 1));
    sum += static_cast<std::complex<long double>>(term);
  }
  const Complex h_value =
      params.m / (2.0 * alpha * alpha) * static_cast<Complex>(sum);
  return imag_guarded_real(h_value, imag_tol, "hamiltonian_modes");
}

double hamiltonian_c(const CVars& c, const PhysicalParams& params) {
  long double sum = 0.0L;
  for (int k = 0; k < c.k_max; ++k)
    sum += static_cast<long double>(parity_sign(k) * mode_omega(k, params.alpha) *
                                    std::norm(c.at(k)));
  return static_cast<double>(sum);
}

double harmonic_approx_frequency(double alpha) {
  if (!(alpha > 0.0)) throw NonPositiveParameter("harmonic_approx_frequency: alpha must be positive");
  return std::sqrt(2.0) / alpha;
}

}  // namespace nlosc
