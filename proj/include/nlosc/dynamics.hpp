#pragma once

#include <vector>

#include "nlosc/core.hpp"

/// Time evolution in both pictures (lambda shift and mode phases), the
/// physical trajectory q(t) = Q(t, 0), the delayed equation of motion as a
/// residual, the three equivalent Hamiltonians, and the small-delay harmonic
/// limit.
namespace nlosc {

/// The alternating-sign frequency ladder omega_n = pi (2n+1) / (2 alpha).
struct FrequencySpectrum {
  double alpha = 1.0;

  double omega(int n) const;

  /// cos(omega_n * alpha), evaluated after reducing the phase by its exact
  /// period: the phase is the integer (2n+1) times pi/2, so the integer is
  /// reduced modulo 4 before the cosine. Identically a characteristic root
  /// residual of the delayed equation of motion.
  double characteristic_cos(int n) const;
};

/// a_n(t) = a_n(0) exp(i omega_n t). The phase is computed from t reduced
/// modulo the revival period 4 alpha (an exact operation), so revival is
/// exact and long-time phases stay accurate.
ModeCoeffs evolve_modes(const ModeCoeffs& coeffs, double t, double alpha);

/// Q(t, lambda) = Q(0, lambda + t): resamples the antiperiodic extension
/// shifted by t onto the canonical window. Shifts that are whole grid steps
/// are applied as an exact sample roll.
LambdaField shift_evolve_field(const LambdaField& field, double t);

/// Complex physical coordinate q(t) = Q(t, 0) before the reality check.
Complex q_value(const ModeCoeffs& coeffs, double t, double alpha);

/// Samples q(t) over strictly increasing times; the imaginary residue is
/// checked against imag_tol (relative to max(1, max|q|)) and discarded.
/// Throws NonRealTrajectory when the residue is too large.
Trajectory trajectory(const ModeCoeffs& coeffs, const std::vector<double>& times, double alpha,
                      double imag_tol = 1e-10);

/// |q(t - alpha) + q(t + alpha)|, the delayed equation of motion residual.
double eom_residual(const ModeCoeffs& coeffs, double t, double alpha);

/// Energy from the field picture: int Delta(l) Q(l - alpha) Q'(l) dl plus the
/// boundary term (m/alpha^2) Q(0) Q(alpha). Q and its derivative are
/// evaluated from the mode expansion (the field's own modes when synthesized,
/// a projection otherwise); the integral over (0, alpha) uses Gauss-Legendre
/// panels. Throws NonRealEnergy if the imaginary residue exceeds imag_tol.
double hamiltonian_field(const LambdaField& field, const PhysicalParams& params,
                         double imag_tol = 1e-10);

/// Energy from the mode picture: (m / 2 alpha^2) sum_n (-1)^n omega_n a_n
/// a_{-(n+1)} over the window. Throws NonRealEnergy if the imaginary residue
/// exceeds imag_tol.
double hamiltonian_modes(const ModeCoeffs& coeffs, const PhysicalParams& params,
                         double imag_tol = 1e-10);

/// Energy from the oscillator variables: sum_k (-1)^k omega_k |c_k|^2.
/// Real by construction.
double hamiltonian_c(const CVars& c, const PhysicalParams& params);

/// Frequency sqrt(2)/alpha of the second-order (small-delay) expansion of
/// the Lagrangian; differs from the exact lowest frequency omega_0 by the
/// factor pi / (2 sqrt(2)).
double harmonic_approx_frequency(double alpha);

}  // namespace nlosc
