#include "nlosc/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace nlosc {

namespace {

GaussRule compute_rule(int n) {
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    // Chebyshev-based initial guess, then Newton on P_n.
    long double x = std::cos(M_PIl * (static_cast<long double>(i) + 0.75L) /
                             (static_cast<long double>(n) + 0.5L));
    long double dp = 0.0L;
    for (int iter = 0; iter < 100; ++iter) {
      long double p0 = 1.0L, p1 = x;
      for (int k = 2; k <= n; ++k) {
        long double p2 = ((2.0L * k - 1.0L) * x * p1 - (k - 1.0L) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0L);
      long double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-19L) break;
    }
    rule.nodes[static_cast<std::size_t>(i)] = static_cast<double>(x);
    rule.weights[static_cast<std::size_t>(i)] =
        static_cast<double>(2.0L / ((1.0L - x * x) * dp * dp));
  }
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  if (n < 1 || n > 4096) throw std::invalid_argument("gauss_legendre: order out of range");
  static std::map<int, GaussRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_rule(n)).first;
  return it->second;
}

double gl_integrate(const std::function<double(double)>& f, double a, double b, int n) {
  const GaussRule& rule = gauss_legendre(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  long double sum = 0.0L;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    sum += static_cast<long double>(rule.weights[i]) * f(mid + half * rule.nodes[i]);
  return static_cast<double>(half * sum);
}

double gl_integrate_panels(const std::function<double(double)>& f, double a, double b, int n,
                           int panels) {
  if (panels < 1) throw std::invalid_argument("gl_integrate_panels: panels must be positive");
  const double h = (b - a) / panels;
  long double sum = 0.0L;
  for (int p = 0; p < panels; ++p) sum += gl_integrate(f, a + p * h, a + (p + 1) * h, n);
  return static_cast<double>(sum);
}

}  // namespace nlosc
