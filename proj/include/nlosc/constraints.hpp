#pragma once

#include <array>
#include <vector>

#include "nlosc/core.hpp"

/// The variational density epsilon, the Delta kernel, momentum
/// reconstruction from the primary constraint, and constraint residuals.
namespace nlosc {

/// P(lambda) sampled on the field's grid; nonzero only where the Delta
/// kernel is supported.
struct MomentumField {
  PhysicalParams params;
  std::vector<Complex> samples;
};

/// The variational density for this Lagrangian is exactly two delta terms;
/// each is stored structurally as its location and weight, never sampled as
/// a spike on the grid.
struct EpsilonDensity {
  struct DeltaTerm {
    double location = 0.0;
    Complex weight;
  };
  std::array<DeltaTerm, 2> terms;
};

/// Delta(lambda) = (m / 2 alpha^2) (sgn(lambda - alpha) - sgn(lambda)):
/// -m/alpha^2 inside (0, alpha), zero outside, half height at the two jump
/// points under the sgn(0) = 0 convention.
double delta_kernel(double lambda, const PhysicalParams& params);

/// The two delta terms of the variational density at this lambda:
/// (sigma = lambda, -(m/alpha^2) Q(lambda + alpha)) and
/// (sigma = lambda - alpha, -(m/alpha^2) Q(lambda - alpha)).
EpsilonDensity epsilon_density(const LambdaField& field, double lambda);

/// P(lambda) = Delta(lambda) Q(lambda - alpha) at one point.
Complex momentum_at(const LambdaField& field, const PhysicalParams& params, double lambda);

/// P sampled over the field's grid via the primary constraint.
MomentumField momentum_field(const LambdaField& field, const PhysicalParams& params);

/// The sgn-weighted integral (1/2) int (sgn lambda - sgn sigma) epsilon
/// d sigma, evaluated analytically over the two delta terms. Agrees with
/// momentum_at bit for bit.
Complex momentum_from_epsilon(const LambdaField& field, double lambda);

/// The plain integral of epsilon over sigma,
/// -(m/alpha^2) (Q(lambda + alpha) + Q(lambda - alpha)); the secondary
/// constraint makes it vanish on antiperiodic data.
Complex secondary_constraint_integral(const LambdaField& field, double lambda);

/// Max over the sample points of |Q(lambda - alpha) + Q(lambda + alpha)|
/// with Q synthesized by raw basis evaluation at the shifted points (the
/// extension rule is deliberately not used).
double phi2_residual(const ModeCoeffs& coeffs, const std::vector<double>& lambda_samples,
                     double alpha);

}  // namespace nlosc
