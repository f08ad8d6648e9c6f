#include "nlosc/brackets.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "nlosc/constraints.hpp"
#include "nlosc/modes.hpp"
#include "nlosc/quadrature.hpp"

namespace nlosc {

TestFunction TestFunction::indicator(double lo, double hi) {
  if (!(lo < hi)) throw std::invalid_argument("TestFunction: support must be nonempty");
  TestFunction f;
  f.lo = lo;
  f.hi = hi;
  f.eval = [lo, hi](double x) { return (x >= lo && x <= hi) ? 1.0 : 0.0; };
  return f;
}

TestFunction TestFunction::bump(double lo, double hi) {
  if (!(lo < hi)) throw std::invalid_argument("TestFunction: support must be nonempty");
  TestFunction f;
  f.lo = lo;
  f.hi = hi;
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  f.eval = [lo, hi, mid, half](double x) {
    if (x <= lo || x >= hi) return 0.0;
    const double u = (x - mid) / half;
    const double v = 1.0 - u * u;
    return v * v * v;
  };
  return f;
}

TestFunction TestFunction::translated(double shift) const {
  TestFunction out;
  out.lo = lo + shift;
  out.hi = hi + shift;
  out.points_per_alpha = points_per_alpha;
  out.eval = [inner = eval, shift](double x) { return inner(x - shift); };
  return out;
}

namespace {

/// Integral of f(x) w(x) g(x + s) over the overlap of f's support with g's
/// support shifted by -s, split at the given cut points, by 16-node
/// Gauss-Legendre panels at the test functions' point budget.
double shifted_overlap(const TestFunction& f, const TestFunction& g, double s,
                       const std::function<double(double)>& weight,
                       const std::vector<double>& cuts, double alpha, int ppa) {
  const double a = std::max(f.lo, g.lo - s);
  const double b = std::min(f.hi, g.hi - s);

  std::vector<double> edges{a, b};
  for (double c : cuts)
    if (c > a && c < b) edges.push_back(c);
  std::sort(edges.begin(), edges.end());

  const int order = 16;
  auto integrand = [&](double x) { return f.eval(x) * weight(x) * g.eval(x + s); };
  long double total = 0.0L;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double lo = edges[i];
    const double hi = edges[i + 1];
    if (hi - lo <= 1e-12 * alpha) continue;
    const int panels =
        std::max(1, static_cast<int>(std::ceil((hi - lo) / alpha * ppa / order)));
    total += gl_integrate_panels(integrand, lo, hi, order, panels);
  }
  return static_cast<double>(total);
}

double unit_weight(double) { return 1.0; }

/// Range of integers k for which the shift stride*k + offset can overlap the
/// supports, padded by one on each side.
std::pair<long long, long long> shift_range(const TestFunction& f, const TestFunction& g,
                                            double stride, double offset) {
  const double smin = g.lo - f.hi;
  const double smax = g.hi - f.lo;
  const long long kmin = static_cast<long long>(std::floor((smin - offset) / stride)) - 1;
  const long long kmax = static_cast<long long>(std::ceil((smax - offset) / stride)) + 1;
  return {kmin, kmax};
}

}  // namespace

double f_kernel_smeared(const TestFunction& f, const TestFunction& g,
                        const PhysicalParams& params) {
  const double alpha = params.alpha;
  const int ppa = std::max(f.points_per_alpha, g.points_per_alpha);
  const auto [kmin, kmax] = shift_range(f, g, 2.0 * alpha, alpha);
  long double sum = 0.0L;
  for (long long k = kmin; k <= kmax; ++k) {
    const double s = (2.0 * k + 1.0) * alpha;
    if (std::min(f.hi, g.hi - s) - std::max(f.lo, g.lo - s) <= 1e-12 * alpha) continue;
    sum += parity_sign(k) * shifted_overlap(f, g, s, unit_weight, {}, alpha, ppa);
  }
  return static_cast<double>(alpha * alpha / params.m * sum);
}

double check_antisymmetry(const TestFunction& f, const TestFunction& g,
                          const PhysicalParams& params) {
  return std::fabs(f_kernel_smeared(f, g, params) + f_kernel_smeared(g, f, params));
}

double check_shift_identity(const TestFunction& f, const TestFunction& g,
                            const PhysicalParams& params) {
  const double alpha = params.alpha;
  return std::fabs(f_kernel_smeared(f.translated(-alpha), g, params) +
                   f_kernel_smeared(f.translated(alpha), g, params));
}

double qp_bracket_smeared(const TestFunction& f, const TestFunction& g,
                          const PhysicalParams& params) {
  const double alpha = params.alpha;
  const int ppa = std::max(f.points_per_alpha, g.points_per_alpha);
  const auto [kmin, kmax] = shift_range(f, g, 2.0 * alpha, 2.0 * alpha);
  long double sum = 0.0L;
  for (long long k = kmin; k <= kmax; ++k) {
    const double s = (2.0 * k + 2.0) * alpha;
    // Restrict to where Delta(l + s) is supported and cut at its jumps.
    TestFunction clipped = g;
    clipped.lo = std::max(g.lo, 0.0);
    clipped.hi = std::min(g.hi, alpha);
    if (!(clipped.lo < clipped.hi)) continue;
    if (std::min(f.hi, clipped.hi - s) - std::max(f.lo, clipped.lo - s) <= 1e-12 * alpha)
      continue;
    auto weight = [&params, s](double x) { return delta_kernel(x + s, params); };
    sum += parity_sign(k) *
           shifted_overlap(f, clipped, s, weight, {-s, alpha - s}, alpha, ppa);
  }
  return static_cast<double>(alpha * alpha / params.m * sum);
}

double pp_bracket_smeared(const TestFunction& f, const TestFunction& g,
                          const PhysicalParams& params) {
  const double alpha = params.alpha;
  const int ppa = std::max(f.points_per_alpha, g.points_per_alpha);

  TestFunction fc = f, gc = g;
  fc.lo = std::max(f.lo, 0.0);
  fc.hi = std::min(f.hi, alpha);
  gc.lo = std::max(g.lo, 0.0);
  gc.hi = std::min(g.hi, alpha);
  if (!(fc.lo < fc.hi) || !(gc.lo < gc.hi)) return 0.0;

  const auto [kmin, kmax] = shift_range(fc, gc, 2.0 * alpha, alpha);
  long double sum = 0.0L;
  for (long long k = kmin; k <= kmax; ++k) {
    const double s = (2.0 * k + 1.0) * alpha;
    if (std::min(fc.hi, gc.hi - s) - std::max(fc.lo, gc.lo - s) <= 1e-12 * alpha) continue;
    auto weight = [&params, s](double x) {
      return delta_kernel(x, params) * delta_kernel(x + s, params);
    };
    sum += parity_sign(k) *
           shifted_overlap(fc, gc, s, weight, {0.0, alpha, -s, alpha - s}, alpha, ppa);
  }
  return static_cast<double>(alpha * alpha / params.m * sum);
}

Complex mode_bracket(int m_idx, int n_idx, const PhysicalParams& params) {
  if (m_idx + n_idx + 1 != 0) return Complex(0.0, 0.0);
  const double alpha = params.alpha;
  return Complex(0.0, parity_sign(m_idx) * alpha * alpha / params.m);
}

Complex mode_bracket_from_kernel(int m_idx, int n_idx, const PhysicalParams& params,
                                 int grid_size) {
  const double alpha = params.alpha;
  const GaussRule& rule = gauss_legendre(std::clamp(grid_size, 8, 2048));

  // Within the canonical square only two shifts fire: l' = l + alpha over
  // the left half window and l' = l - alpha (with opposite sign) over the
  // right half.
  auto half_window = [&](double lo, double hi, double shift) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    std::complex<long double> sum = 0.0L;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double l = mid + half * rule.nodes[i];
      const Complex value = std::conj(psi(m_idx, l, alpha)) *
                            std::conj(psi(n_idx, l + shift, alpha));
      sum += static_cast<long double>(half * rule.weights[i]) *
             static_cast<std::complex<long double>>(value);
    }
    return sum;
  };

  const std::complex<long double> integral =
      half_window(-alpha, 0.0, alpha) - half_window(0.0, alpha, -alpha);
  return static_cast<Complex>(static_cast<long double>(alpha * alpha / params.m) * integral);
}

Complex c_bracket(int m_idx, int n_idx) {
  if (m_idx < 0 || n_idx < 0) throw std::invalid_argument("c_bracket: indices must be >= 0");
  return (m_idx == n_idx) ? Complex(0.0, -1.0) : Complex(0.0, 0.0);
}

double hamiltonian_flow_check(const ModeCoeffs& coeffs, const PhysicalParams& params) {
  const double alpha = params.alpha;
  const double prefactor = params.m / (2.0 * alpha * alpha);
  double worst = 0.0;
  for (int m = -coeffs.n_max; m < coeffs.n_max; ++m) {
    std::complex<long double> flow = 0.0L;
    for (int k = -coeffs.n_max; k < coeffs.n_max; ++k) {
      const Complex term =
          parity_sign(k) * mode_omega(k, alpha) *
          (mode_bracket(m, k, params) * coeffs.at(-(k + 1)) +
           coeffs.at(k) * mode_bracket(m, -(k + 1), params));
      flow += static_cast<std::complex<long double>>(term);
    }
    const Complex expected =
        Complex(0.0, mode_omega(m, alpha)) * coeffs.at(m);
    worst = std::max(worst,
                     std::abs(prefactor * static_cast<Complex>(flow) - expected));
  }
  return worst;
}

}  // namespace nlosc
