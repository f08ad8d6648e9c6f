#include "nlosc/core.hpp"

#include <cmath>
#include <cstdlib>

#include "nlosc/modes.hpp"

namespace nlosc {

PhysicalParams validate_params(double m, double alpha, double hbar) {
  auto positive = [](double v, const char* name) {
    if (!std::isfinite(v) || v <= 0.0)
      throw NonPositiveParameter(std::string(name) + " must be positive and finite");
  };
  positive(m, "m");
  positive(alpha, "alpha");
  positive(hbar, "hbar");
  return PhysicalParams{m, alpha, hbar};
}

double ModeCoeffs::max_abs() const {
  double best = 0.0;
  for (const Complex& c : coeffs) best = std::max(best, std::abs(c));
  return best;
}

LambdaField LambdaField::from_samples(std::vector<Complex> samples, const PhysicalParams& params) {
  const auto n = samples.size();
  if (n < 2 || (n & (n - 1)) != 0)
    throw std::invalid_argument("LambdaField: grid_size must be a power of two >= 2");
  LambdaField field;
  field.params = params;
  field.grid_size = static_cast<int>(n);
  field.samples = std::move(samples);
  return field;
}

LambdaField LambdaField::from_modes(const ModeCoeffs& coeffs, const PhysicalParams& params,
                                    int grid_size) {
  if (grid_size < 2 || (grid_size & (grid_size - 1)) != 0)
    throw std::invalid_argument("LambdaField: grid_size must be a power of two >= 2");
  LambdaField field;
  field.params = params;
  field.grid_size = grid_size;
  field.samples.resize(static_cast<std::size_t>(grid_size));
  for (int j = 0; j < grid_size; ++j)
    field.samples[static_cast<std::size_t>(j)] =
        synthesize(coeffs, field.lambda_at(j), params.alpha);
  field.source = coeffs;
  return field;
}

ReducedLambda reduce_antiperiodic(double lambda, double alpha) {
  const double period = 2.0 * alpha;
  double r = std::fmod(lambda, period);  // exact remainder, |r| < period
  const double k = std::round((lambda - r) / period);
  bool odd = std::fabs(std::fmod(k, 2.0)) > 0.5;
  // Fold into [-alpha, alpha). Both corrections are Sterbenz-exact because
  // |r| and the period are within a factor of two of each other.
  if (r >= alpha) {
    r -= period;
    odd = !odd;
  } else if (r < -alpha) {
    r += period;
    odd = !odd;
  }
  return ReducedLambda{r, odd ? -1.0 : 1.0};
}

Complex extend_field(const LambdaField& field, double lambda) {
  const double alpha = field.params.alpha;
  const ReducedLambda red = reduce_antiperiodic(lambda, alpha);
  const int n = field.grid_size;
  const double x = (red.lambda + alpha) * (static_cast<double>(n) / (2.0 * alpha));

  const double j_near = std::round(x);
  if (std::fabs(x - j_near) <= 1e-6) {
    long long j = std::llround(j_near);
    double sign = red.sign;
    if (j >= n) {  // rounding seam at the right window edge
      j -= n;
      sign = -sign;
    }
    return sign * field.samples[static_cast<std::size_t>(j)];
  }

  if (field.source) return red.sign * synthesize(*field.source, red.lambda, alpha);

  const double j0f = std::floor(x);
  const auto j0 = static_cast<std::size_t>(j0f);
  const double frac = x - j0f;
  const Complex s0 = field.samples[j0];
  const Complex s1 = (j0 + 1 == static_cast<std::size_t>(n)) ? -field.samples[0]
                                                             : field.samples[j0 + 1];
  return red.sign * (s0 + frac * (s1 - s0));
}

}  // namespace nlosc
