#pragma once

#include <functional>

#include "nlosc/core.hpp"

/// The Dirac-bracket kernel F(l, l') = (alpha^2/m) sum_k (-1)^k
/// delta(l - l' + (2k+1) alpha), exposed only in smeared form against
/// compactly supported test functions, plus the closed-form mode brackets,
/// the oscillator-variable bracket, and the Hamiltonian-flow closure check.
namespace nlosc {

/// Compactly supported real test function for smearing distributions.
/// Defaults: indicator functions and the C^2 polynomial bump (1 - u^2)^3,
/// both of which make every smeared integrand piecewise polynomial.
struct TestFunction {
  double lo = 0.0;
  double hi = 0.0;
  std::function<double(double)> eval;
  int points_per_alpha = 4096;

  static TestFunction indicator(double lo, double hi);
  static TestFunction bump(double lo, double hi);

  /// The translate x -> f(x - shift); support moves by +shift.
  TestFunction translated(double shift) const;
};

/// F smeared: (alpha^2/m) sum_k (-1)^k int f(l) g(l + (2k+1) alpha) dl.
/// The sum is finite because only finitely many shifts overlap the supports.
double f_kernel_smeared(const TestFunction& f, const TestFunction& g,
                        const PhysicalParams& params);

/// |F(f, g) + F(g, f)|; zero for the antisymmetric kernel.
double check_antisymmetry(const TestFunction& f, const TestFunction& g,
                          const PhysicalParams& params);

/// |F(f(.+alpha), g) + F(f(.-alpha), g)|; translating the test function
/// implements translating the kernel argument.
double check_shift_identity(const TestFunction& f, const TestFunction& g,
                            const PhysicalParams& params);

/// Smeared coordinate-momentum bracket
/// int int f(l) Delta(l') F(l, l' - alpha) g(l') dl dl'; the delta comb
/// fires at the even shifts l' = l + (2k+2) alpha.
double qp_bracket_smeared(const TestFunction& f, const TestFunction& g,
                          const PhysicalParams& params);

/// Smeared momentum-momentum bracket
/// int int f(l) Delta(l) Delta(l') F(l, l') g(l') dl dl'; identically zero
/// because no odd shift connects two points of the Delta support.
double pp_bracket_smeared(const TestFunction& f, const TestFunction& g,
                          const PhysicalParams& params);

/// Closed-form mode bracket {a_m, a_n} = i (alpha^2/m) (-1)^m when
/// m + n + 1 = 0 and zero otherwise.
Complex mode_bracket(int m_idx, int n_idx, const PhysicalParams& params);

/// The same bracket evaluated as the double integral of the kernel against
/// conj(Psi_m) and conj(Psi_n) over the canonical window; within that square
/// only the k = 0 and k = -1 shifts fire, each over one half window.
Complex mode_bracket_from_kernel(int m_idx, int n_idx, const PhysicalParams& params,
                                 int grid_size = 256);

/// {c_m, conj(c_n)} = -i delta_mn for nonnegative indices.
Complex c_bracket(int m_idx, int n_idx);

/// max_m |{a_m, H} - i omega_m a_m| with the bracket expanded through the
/// bilinear mode Hamiltonian; zero when the bracket algebra generates the
/// shift flow.
double hamiltonian_flow_check(const ModeCoeffs& coeffs, const PhysicalParams& params);

}  // namespace nlosc
