#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

/// Core domain types for the nonlocal oscillator L = -(m/a^2) q(t) q(t+a):
/// physical parameters, mode coefficients over the symmetric index window,
/// and the lambda-field sampled on the canonical window [-a, a) with the
/// antiperiodic extension Q(l + 2a) = -Q(l).
namespace nlosc {

using Complex = std::complex<double>;

// ---- errors ----

/// Base class for all typed errors thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A physical parameter was zero, negative, or not finite.
struct NonPositiveParameter : Error {
  using Error::Error;
};

/// Redundant reads of the oscillator-variable map disagreed, i.e. the
/// reality pairing conj(a_n) = a_{-(n+1)} does not hold well enough.
struct RealityViolation : Error {
  using Error::Error;
};

/// A trajectory expected to be real carried an imaginary residue above
/// tolerance.
struct NonRealTrajectory : Error {
  using Error::Error;
};

/// An energy expected to be real carried an imaginary residue above
/// tolerance.
struct NonRealEnergy : Error {
  using Error::Error;
};

/// A Fock-space enumeration request exceeded the configured size budget.
struct BudgetExceeded : Error {
  using Error::Error;
};

/// The formal symmetric-ordering zero-point sum diverges; it is refused
/// rather than assigned a value.
struct DivergentZeroPoint : Error {
  using Error::Error;
};

// ---- parameters ----

/// Mass m, delay time alpha, and action scale hbar (default 1).
struct PhysicalParams {
  double m = 1.0;
  double alpha = 1.0;
  double hbar = 1.0;
};

/// Validates positivity and finiteness of (m, alpha, hbar).
/// Throws NonPositiveParameter otherwise.
PhysicalParams validate_params(double m, double alpha, double hbar = 1.0);

// ---- mode coefficients ----

/// Complex coefficients a_n over the window -n_max <= n <= n_max-1, the
/// unique symmetric window closed under the pairing n -> -(n+1). When
/// `real` is set the coefficients are expected to satisfy
/// conj(a_n) = a_{-(n+1)}, which makes the synthesized field real.
struct ModeCoeffs {
  int n_max = 0;
  std::vector<Complex> coeffs;  // index n stored at n + n_max
  bool real = false;

  ModeCoeffs() = default;
  explicit ModeCoeffs(int n_max_, bool real_ = false)
      : n_max(n_max_), coeffs(2 * static_cast<std::size_t>(n_max_)), real(real_) {
    if (n_max_ <= 0) throw std::invalid_argument("ModeCoeffs: n_max must be positive");
  }

  /// Coefficient a_n for n in [-n_max, n_max-1].
  Complex at(int n) const { return coeffs.at(static_cast<std::size_t>(n + n_max)); }
  Complex& at(int n) { return coeffs.at(static_cast<std::size_t>(n + n_max)); }

  bool in_window(int n) const { return n >= -n_max && n < n_max; }
  double max_abs() const;
};

// ---- lambda field ----

/// Q(., lambda) sampled at lambda_j = -alpha + 2*alpha*j/grid_size over the
/// canonical window [-alpha, alpha). Values elsewhere exist only through the
/// antiperiodic extension. Fields synthesized from modes keep their
/// coefficients so off-grid evaluation stays band-limited.
struct LambdaField {
  PhysicalParams params;
  int grid_size = 0;
  std::vector<Complex> samples;
  std::optional<ModeCoeffs> source;

  /// Grid point lambda_j.
  double lambda_at(int j) const {
    return -params.alpha + 2.0 * params.alpha * static_cast<double>(j) / grid_size;
  }

  /// Wraps caller-provided samples; grid_size must be a power of two.
  static LambdaField from_samples(std::vector<Complex> samples, const PhysicalParams& params);

  /// Synthesizes samples from mode coefficients and records them as the
  /// field's provenance.
  static LambdaField from_modes(const ModeCoeffs& coeffs, const PhysicalParams& params,
                                int grid_size = 1024);
};

/// Result of folding a real lambda into the canonical window: the reduced
/// point in [-alpha, alpha) and the accumulated antiperiodic sign.
struct ReducedLambda {
  double lambda = 0.0;
  double sign = 1.0;
};

/// Folds lambda into [-alpha, alpha) by whole 2*alpha periods, counting the
/// sign flips. The fold itself is exact in IEEE arithmetic (fmod plus a
/// Sterbenz-exact correction), so no reduction error is introduced.
ReducedLambda reduce_antiperiodic(double lambda, double alpha);

/// Q(lambda) for arbitrary real lambda via the antiperiodic extension.
/// Grid points are returned as stored samples; other positions use the mode
/// expansion when the field has one and linear interpolation otherwise.
Complex extend_field(const LambdaField& field, double lambda);

// ---- trajectory ----

/// Real samples of the physical coordinate q(t) = Q(t, 0).
struct Trajectory {
  std::vector<double> times;
  std::vector<double> values;
};

// ---- oscillator variables ----

/// Oscillator variables c_k for k = 0..k_max-1 (conjugates taken on demand).
struct CVars {
  int k_max = 0;
  std::vector<Complex> values;

  CVars() = default;
  explicit CVars(int k_max_) : k_max(k_max_), values(static_cast<std::size_t>(k_max_)) {
    if (k_max_ <= 0) throw std::invalid_argument("CVars: k_max must be positive");
  }

  Complex at(int k) const { return values.at(static_cast<std::size_t>(k)); }
  Complex& at(int k) { return values.at(static_cast<std::size_t>(k)); }
};

// ---- occupation states ----

/// Nonnegative occupation numbers n_k, one per quantum mode.
struct OccupationState {
  std::vector<int> occ;
};

// ---- small shared helpers ----

/// (-1)^n for any integer n.
inline double parity_sign(long long n) { return (n % 2 == 0) ? 1.0 : -1.0; }

/// sign function with sgn(0) = 0.
inline double sgn(double x) { return (x > 0.0) ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

}  // namespace nlosc
