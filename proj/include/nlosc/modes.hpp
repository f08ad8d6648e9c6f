#pragma once

#include <Eigen/Dense>

#include "nlosc/core.hpp"

/// Antiperiodic Fourier basis Psi_n(l) = (1/sqrt(2a)) exp(i pi (2n+1) l / (2a)),
/// projection and synthesis between fields and mode coefficients, the reality
/// condition, and the map to oscillator variables c_k.
namespace nlosc {

/// Mode frequency omega_n = pi (2n+1) / (2 alpha); negating the index as
/// n -> -(n+1) negates the frequency exactly.
double mode_omega(int n, double alpha);

/// Basis function Psi_n at lambda.
Complex psi(int n, double lambda, double alpha);

/// Mode-wise derivative d Psi_n / d lambda = i omega_n Psi_n summed against
/// the coefficients.
Complex synthesize_derivative(const ModeCoeffs& coeffs, double lambda, double alpha);

/// Q(lambda) = sum_n a_n Psi_n(lambda) over the index window.
Complex synthesize(const ModeCoeffs& coeffs, double lambda, double alpha);

/// Numerically integrated overlaps int conj(Psi_p) Psi_q over the canonical
/// window by the periodic uniform-grid rule; rows and columns run over the
/// window [-n_max, n_max-1].
Eigen::MatrixXcd gram_matrix(int n_max, double alpha, int grid_size);

/// Coefficients a_n = int conj(Psi_n) Q over the canonical window, by the
/// same uniform-grid rule (spectrally accurate for band-limited fields).
ModeCoeffs project(const LambdaField& field, int n_max);

/// Largest deviation from the reality pairing, max_n |conj(a_n) - a_{-(n+1)}|.
double reality_residual(const ModeCoeffs& coeffs);

/// True iff the reality pairing holds within tol.
bool check_reality(const ModeCoeffs& coeffs, double tol);

/// Oscillator variables c_k = (sqrt(m)/alpha) a_n with the index n chosen by
/// the parity of k; each c_k is read from both of its windows slots and the
/// redundant reads must agree within tol (their mean is returned).
/// Throws RealityViolation otherwise.
CVars to_c_vars(const ModeCoeffs& coeffs, const PhysicalParams& params, double tol = 1e-10);

/// Inverse map; the result satisfies the reality pairing exactly by
/// construction.
ModeCoeffs from_c_vars(const CVars& c, const PhysicalParams& params);

}  // namespace nlosc
