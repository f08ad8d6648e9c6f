#include "nlosc/constraints.hpp"

#include <cmath>

#include "nlosc/modes.hpp"

namespace nlosc {

double delta_kernel(double lambda, const PhysicalParams& params) {
  const double coupling = params.m / (params.alpha * params.alpha);
  return 0.5 * coupling * (sgn(lambda - params.alpha) - sgn(lambda));
}

EpsilonDensity epsilon_density(const LambdaField& field, double lambda) {
  const PhysicalParams& params = field.params;
  const double coupling = params.m / (params.alpha * params.alpha);
  EpsilonDensity density;
  density.terms[0] = {lambda, -coupling * extend_field(field, lambda + params.alpha)};
  density.terms[1] = {lambda - params.alpha,
                      -coupling * extend_field(field, lambda - params.alpha)};
  return density;
}

Complex momentum_at(const LambdaField& field, const PhysicalParams& params, double lambda) {
  return delta_kernel(lambda, params) * extend_field(field, lambda - params.alpha);
}

MomentumField momentum_field(const LambdaField& field, const PhysicalParams& params) {
  MomentumField momentum;
  momentum.params = params;
  momentum.samples.resize(field.samples.size());
  for (int j = 0; j < field.grid_size; ++j)
    momentum.samples[static_cast<std::size_t>(j)] =
        momentum_at(field, params, field.lambda_at(j));
  return momentum;
}

Complex momentum_from_epsilon(const LambdaField& field, double lambda) {
  const EpsilonDensity density = epsilon_density(field, lambda);
  Complex sum = 0.0;
  for (const auto& term : density.terms)
    sum += (0.5 * (sgn(lambda) - sgn(term.location))) * term.weight;
  return sum;
}

Complex secondary_constraint_integral(const LambdaField& field, double lambda) {
  const EpsilonDensity density = epsilon_density(field, lambda);
  return density.terms[0].weight + density.terms[1].weight;
}

double phi2_residual(const ModeCoeffs& coeffs, const std::vector<double>& lambda_samples,
                     double alpha) {
  double worst = 0.0;
  for (double lambda : lambda_samples) {
    const Complex sum = synthesize(coeffs, lambda - alpha, alpha) +
                        synthesize(coeffs, lambda + alpha, alpha);
    worst = std::max(worst, std::abs(sum));
  }
  return worst;
}

}  // namespace nlosc
