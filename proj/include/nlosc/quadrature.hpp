#pragma once

#include <functional>
#include <vector>

/// Gauss-Legendre quadrature with cached nodes. The integrands in this
/// project are band-limited exponentials or piecewise polynomials, so a
/// fixed-order panel rule integrates them to rounding error.
namespace nlosc {

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Returns the cached n-point rule (computed once per order by Newton
/// iteration on the Legendre polynomial).
const GaussRule& gauss_legendre(int n);

/// Integral of f over [a, b] with a single n-point panel.
double gl_integrate(const std::function<double(double)>& f, double a, double b, int n);

/// Integral of f over [a, b] split into `panels` equal n-point panels.
double gl_integrate_panels(const std::function<double(double)>& f, double a, double b, int n,
                           int panels);

}  // namespace nlosc
