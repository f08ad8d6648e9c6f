/// Command-line front end for the nonlocal-oscillator laboratory: simulate
/// trajectories, enumerate quantum spectra, run verification suites, and
/// snapshot the lambda-field, all as plain CSV/JSON files.

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nlosc/brackets.hpp"
#include "nlosc/constraints.hpp"
#include "nlosc/dynamics.hpp"
#include "nlosc/modes.hpp"
#include "nlosc/quantum.hpp"

using namespace nlosc;
namespace q = nlosc::quantum;
using json = nlohmann::json;

namespace {

// ---- formatting ----

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt_short(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

int fail_input(const std::string& msg) {
  std::fprintf(stderr, "error: %s\n", msg.c_str());
  return 2;
}

int fail_check(const std::string& msg) {
  std::fprintf(stderr, "error: %s\n", msg.c_str());
  return 1;
}

// ---- config ----

struct LoadedConfig {
  PhysicalParams params;
  ModeCoeffs coeffs{1};
};

/// Parses the model config: {"m", "alpha", "hbar", "modes": [{"n", "re",
/// "im"}], "complete_reality"}. With complete_reality the partner slot
/// -(n+1) of every listed mode is filled with the exact conjugate unless it
/// was listed itself.
LoadedConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  const json doc = json::parse(in);
  if (!doc.is_object()) throw std::invalid_argument("config root must be a JSON object");

  auto number = [&doc](const char* key, double fallback) {
    if (!doc.contains(key)) return fallback;
    if (!doc[key].is_number()) throw std::invalid_argument(std::string(key) + " must be a number");
    return doc[key].get<double>();
  };
  const double m = number("m", 1.0);
  const double alpha = number("alpha", 1.0);
  const double hbar = number("hbar", 1.0);
  bool complete_reality = false;
  if (doc.contains("complete_reality")) {
    if (!doc["complete_reality"].is_boolean())
      throw std::invalid_argument("complete_reality must be a boolean");
    complete_reality = doc["complete_reality"].get<bool>();
  }

  std::vector<std::pair<int, Complex>> entries;
  if (doc.contains("modes")) {
    if (!doc["modes"].is_array()) throw std::invalid_argument("modes must be an array");
    for (const json& mode : doc["modes"]) {
      if (!mode.is_object() || !mode.contains("n") || !mode["n"].is_number_integer())
        throw std::invalid_argument("each mode needs an integer n");
      const int n = mode["n"].get<int>();
      auto part = [&mode](const char* key) {
        if (!mode.contains(key)) return 0.0;
        if (!mode[key].is_number())
          throw std::invalid_argument(std::string(key) + " must be a number");
        return mode[key].get<double>();
      };
      const Complex z(part("re"), part("im"));
      for (const auto& [seen, unused] : entries) {
        (void)unused;
        if (seen == n) throw std::invalid_argument("duplicate mode index " + std::to_string(n));
      }
      entries.emplace_back(n, z);
    }
  }

  int n_max = 1;
  for (const auto& [n, z] : entries) {
    (void)z;
    n_max = std::max(n_max, n >= 0 ? n + 1 : -n);
  }

  LoadedConfig cfg;
  cfg.params = validate_params(m, alpha, hbar);
  cfg.coeffs = ModeCoeffs(n_max);
  for (const auto& [n, z] : entries) cfg.coeffs.at(n) = z;
  if (complete_reality) {
    for (const auto& [n, z] : entries) {
      const int partner = -(n + 1);
      const bool listed = std::any_of(entries.begin(), entries.end(),
                                      [partner](const auto& e) { return e.first == partner; });
      if (!listed) cfg.coeffs.at(partner) = std::conj(z);
    }
  }
  cfg.coeffs.real = reality_residual(cfg.coeffs) == 0.0;
  return cfg;
}

// ---- simulate ----

int run_simulate(const std::string& config_path, double t_max, double dt,
                 const std::string& out_path, double tol) {
  const LoadedConfig cfg = load_config(config_path);
  const double alpha = cfg.params.alpha;
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("dt must be positive");
  if (!(t_max >= 0.0) || !std::isfinite(t_max))
    throw std::invalid_argument("t-max must be nonnegative");
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");

  const double steps = t_max / dt;
  if (steps > 1e7) throw std::invalid_argument("more than 1e7 samples requested");
  const long long count = static_cast<long long>(std::floor(steps + 1e-9)) + 1;
  std::vector<double> times;
  times.reserve(static_cast<std::size_t>(count));
  for (long long i = 0; i < count; ++i) times.push_back(dt * static_cast<double>(i));

  const Trajectory traj = trajectory(cfg.coeffs, times, alpha, tol);

  double scale = 0.0;
  for (double v : traj.values) scale = std::max(scale, std::fabs(v));
  double eom_rel = 0.0;
  if (scale > 0.0)
    for (double t : times)
      eom_rel = std::max(eom_rel, eom_residual(cfg.coeffs, t, alpha) / scale);

  const double coeff_scale = cfg.coeffs.max_abs();
  const double reality_rel =
      coeff_scale > 0.0 ? reality_residual(cfg.coeffs) / coeff_scale : 0.0;

  const double h_modes = hamiltonian_modes(cfg.coeffs, cfg.params);
  const double h_field =
      hamiltonian_field(LambdaField::from_modes(cfg.coeffs, cfg.params, 4096), cfg.params);
  const double c_tol = std::max(tol * std::max(coeff_scale, 1.0), 1e-12);
  const double h_c = hamiltonian_c(to_c_vars(cfg.coeffs, cfg.params, c_tol), cfg.params);

  std::FILE* csv = std::fopen(out_path.c_str(), "w");
  if (!csv) throw std::invalid_argument("cannot open output file: " + out_path);
  std::fprintf(csv, "t,q\n");
  for (std::size_t i = 0; i < traj.times.size(); ++i)
    std::fprintf(csv, "%s,%s\n", fmt(traj.times[i]).c_str(), fmt(traj.values[i]).c_str());
  std::fclose(csv);

  const std::string sidecar_path = out_path + ".json";
  std::FILE* sidecar = std::fopen(sidecar_path.c_str(), "w");
  if (!sidecar) throw std::invalid_argument("cannot open output file: " + sidecar_path);
  std::fprintf(sidecar,
               "{\n"
               "  \"m\": %s,\n"
               "  \"alpha\": %s,\n"
               "  \"hbar\": %s,\n"
               "  \"t_max\": %s,\n"
               "  \"dt\": %s,\n"
               "  \"samples\": %zu,\n"
               "  \"hamiltonian_field\": %s,\n"
               "  \"hamiltonian_modes\": %s,\n"
               "  \"hamiltonian_c\": %s,\n"
               "  \"eom_max_residual\": %s,\n"
               "  \"reality_residual\": %s\n"
               "}\n",
               fmt(cfg.params.m).c_str(), fmt(cfg.params.alpha).c_str(),
               fmt(cfg.params.hbar).c_str(), fmt(t_max).c_str(), fmt(dt).c_str(),
               traj.times.size(), fmt(h_field).c_str(), fmt(h_modes).c_str(),
               fmt(h_c).c_str(), fmt(eom_rel).c_str(), fmt(reality_rel).c_str());
  std::fclose(sidecar);

  if (eom_rel > tol || reality_rel > tol)
    return fail_check("residuals exceed tolerance " + fmt_short(tol) +
                      " (eom " + fmt_short(eom_rel) + ", reality " + fmt_short(reality_rel) +
                      ")");
  return 0;
}

// ---- spectrum ----

int run_spectrum(int k_modes, int max_occ, double alpha, double hbar,
                 const std::string& out_path) {
  if (k_modes < 1) throw std::invalid_argument("k-modes must be >= 1");
  if (max_occ < 1) throw std::invalid_argument("max-occ must be >= 1");
  const PhysicalParams params = validate_params(1.0, alpha, hbar);
  const q::FockSpace space(k_modes, max_occ + 1);
  const std::vector<q::Level> levels = q::spectrum(space, params);

  std::FILE* out = std::fopen(out_path.c_str(), "w");
  if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
  std::fprintf(out, "{\n  \"alpha\": %s,\n  \"hbar\": %s,\n  \"k_modes\": %d,\n"
                    "  \"max_occ\": %d,\n  \"omega\": [",
               fmt(alpha).c_str(), fmt(hbar).c_str(), k_modes, max_occ);
  for (int k = 0; k < k_modes; ++k)
    std::fprintf(out, "%s%s", k ? ", " : "", fmt(q::omega(k, alpha)).c_str());
  std::fprintf(out, "],\n  \"levels\": [\n");
  for (std::size_t i = 0; i < levels.size(); ++i) {
    std::fprintf(out, "    {\"occupation\": [");
    for (std::size_t k = 0; k < levels[i].occ.occ.size(); ++k)
      std::fprintf(out, "%s%d", k ? ", " : "", levels[i].occ.occ[k]);
    std::fprintf(out, "], \"energy\": %s}%s\n", fmt(levels[i].energy).c_str(),
                 i + 1 < levels.size() ? "," : "");
  }
  std::fprintf(out, "  ]\n}\n");
  std::fclose(out);
  return 0;
}

// ---- verify ----

struct CheckLine {
  std::string name;
  double measured = 0.0;
  double tol = 0.0;
};

void run_eom_suite(std::uint64_t seed, double tol_override, std::vector<CheckLine>& lines) {
  std::mt19937_64 rng(seed);
  auto tol = [tol_override](double fallback) {
    return tol_override > 0.0 ? tol_override : fallback;
  };

  double worst_eom = 0.0, worst_revival = 0.0;
  for (double alpha : {0.5, 1.0, 2.0}) {
    std::uniform_real_distribution<double> tdist(0.0, 20.0 * alpha);
    std::uniform_real_distribution<double> cdist(-1.0, 1.0);
    for (int trial = 0; trial < 30; ++trial) {
      ModeCoeffs coeffs(8, true);
      for (int n = 0; n < 8; ++n) {
        const Complex z(cdist(rng), cdist(rng));
        coeffs.at(n) = z;
        coeffs.at(-(n + 1)) = std::conj(z);
      }
      double scale = 0.0;
      for (int i = 0; i < 256; ++i)
        scale = std::max(scale, std::abs(q_value(coeffs, 4.0 * alpha * i / 256.0, alpha)));
      for (int i = 0; i <= 20; ++i)
        worst_eom =
            std::max(worst_eom, eom_residual(coeffs, alpha * i, alpha) / scale);
      for (int i = 0; i < 10; ++i)
        worst_eom = std::max(worst_eom, eom_residual(coeffs, tdist(rng), alpha) / scale);

      const ModeCoeffs revived = evolve_modes(coeffs, 4.0 * alpha, alpha);
      for (int n = -8; n < 8; ++n)
        worst_revival = std::max(worst_revival, std::abs(revived.at(n) - coeffs.at(n)));
    }
  }
  lines.push_back({"equation-of-motion residual (relative)", worst_eom, tol(1e-12)});
  lines.push_back({"revival gap at one period", worst_revival, tol(1e-12)});

  double worst_char = 0.0;
  for (double alpha : {0.5, 1.0, 2.0}) {
    const FrequencySpectrum spectrum{alpha};
    for (int k = -33; k <= 32; ++k)
      worst_char = std::max(worst_char, std::fabs(spectrum.characteristic_cos(k)));
  }
  lines.push_back({"characteristic cosine zeros", worst_char, tol(1e-15)});
}

TestFunction random_test_function(std::mt19937_64& rng, double alpha) {
  std::uniform_real_distribution<double> lo_dist(-4.0 * alpha, 3.0 * alpha);
  std::uniform_real_distribution<double> width_dist(0.3 * alpha, 2.5 * alpha);
  const double lo = lo_dist(rng);
  const double hi = lo + width_dist(rng);
  return (rng() % 2 == 0) ? TestFunction::indicator(lo, hi) : TestFunction::bump(lo, hi);
}

ModeCoeffs random_real_state(std::mt19937_64& rng, int n_max, double amp) {
  std::uniform_real_distribution<double> dist(-amp, amp);
  ModeCoeffs coeffs(n_max, true);
  for (int n = 0; n < n_max; ++n) {
    const Complex z(dist(rng), dist(rng));
    coeffs.at(n) = z;
    coeffs.at(-(n + 1)) = std::conj(z);
  }
  return coeffs;
}

void run_brackets_suite(std::uint64_t seed, double tol_override,
                        std::vector<CheckLine>& lines) {
  std::mt19937_64 rng(seed);
  auto tol = [tol_override](double fallback) {
    return tol_override > 0.0 ? tol_override : fallback;
  };

  constexpr double alphas[] = {0.5, 1.0, 2.0};
  double worst_anti = 0.0, worst_shift = 0.0;
  for (int trial = 0; trial < 30; ++trial) {
    const double alpha = alphas[trial % 3];
    const PhysicalParams p = validate_params(trial % 2 == 0 ? 1.0 : 1.7, alpha);
    const TestFunction f = random_test_function(rng, alpha);
    const TestFunction g = random_test_function(rng, alpha);
    worst_anti = std::max(worst_anti, check_antisymmetry(f, g, p));
    worst_shift = std::max(worst_shift, check_shift_identity(f, g, p));
  }
  lines.push_back({"kernel antisymmetry", worst_anti, tol(1e-10)});
  lines.push_back({"kernel shift identity", worst_shift, tol(1e-10)});

  double worst_mb = 0.0;
  for (double alpha : {1.0, 0.7}) {
    const PhysicalParams p = validate_params(1.0, alpha);
    for (int m = -6; m <= 6; ++m)
      for (int n = -6; n <= 6; ++n)
        worst_mb = std::max(
            worst_mb, std::abs(mode_bracket_from_kernel(m, n, p) - mode_bracket(m, n, p)));
  }
  lines.push_back({"mode bracket, kernel vs closed form", worst_mb, tol(1e-10)});

  double worst_flow = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const PhysicalParams p = validate_params(trial % 2 == 0 ? 1.0 : 1.7, alphas[trial % 3]);
    worst_flow = std::max(worst_flow, hamiltonian_flow_check(random_real_state(rng, 6, 1.0), p));
  }
  lines.push_back({"Hamiltonian flow closure", worst_flow, tol(1e-12)});
}

void run_hamiltonian_suite(std::uint64_t seed, double tol_override,
                           std::vector<CheckLine>& lines) {
  std::mt19937_64 rng(seed);
  auto tol = [tol_override](double fallback) {
    return tol_override > 0.0 ? tol_override : fallback;
  };

  constexpr double alphas[] = {0.5, 1.0, 2.0};
  double worst_fm = 0.0, worst_mc = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const PhysicalParams p = validate_params(trial % 2 == 0 ? 1.0 : 1.7, alphas[trial % 3]);
    const ModeCoeffs coeffs = random_real_state(rng, 8, 0.5);
    const double hf = hamiltonian_field(LambdaField::from_modes(coeffs, p, 4096), p);
    const double hm = hamiltonian_modes(coeffs, p);
    const double hc = hamiltonian_c(to_c_vars(coeffs, p), p);
    worst_fm = std::max(worst_fm, std::fabs(hf - hm));
    worst_mc = std::max(worst_mc, std::fabs(hm - hc));
  }
  lines.push_back({"field vs mode energy", worst_fm, tol(1e-8)});
  lines.push_back({"mode vs oscillator energy", worst_mc, tol(1e-12)});

  double worst_cons = 0.0;
  for (double alpha : alphas) {
    const PhysicalParams p = validate_params(1.0, alpha);
    std::uniform_real_distribution<double> tdist(0.0, 100.0 * alpha);
    for (int trial = 0; trial < 5; ++trial) {
      const ModeCoeffs coeffs = random_real_state(rng, 8, 0.5);
      const double h0 = hamiltonian_modes(coeffs, p);
      for (int i = 0; i < 20; ++i) {
        const double t = (i == 0) ? 100.0 * alpha : tdist(rng);
        worst_cons = std::max(
            worst_cons, std::fabs(hamiltonian_modes(evolve_modes(coeffs, t, alpha), p) - h0));
      }
    }
  }
  lines.push_back({"conservation drift to 100 delays", worst_cons, tol(1e-12)});

  double worst_route = 0.0, worst_plain = 0.0;
  for (double alpha : alphas) {
    for (double m : {1.0, 1.7}) {
      const PhysicalParams p = validate_params(m, alpha);
      const LambdaField field = LambdaField::from_modes(random_real_state(rng, 8, 1.0), p, 512);
      const MomentumField momentum = momentum_field(field, p);
      for (int j = 0; j < field.grid_size; ++j) {
        const double lambda = field.lambda_at(j);
        worst_route = std::max(
            worst_route, std::abs(momentum.samples[static_cast<std::size_t>(j)] -
                                  momentum_from_epsilon(field, lambda)));
        worst_plain =
            std::max(worst_plain, std::abs(secondary_constraint_integral(field, lambda)));
      }
    }
  }
  lines.push_back({"momentum route equality", worst_route, tol(1e-12)});
  lines.push_back({"density integral on synthesized states", worst_plain, tol(1e-12)});
}

void run_quantum_suite(std::uint64_t seed, double tol_override,
                       std::vector<CheckLine>& lines) {
  (void)seed;
  auto tol = [tol_override](double fallback) {
    return tol_override > 0.0 ? tol_override : fallback;
  };

  const PhysicalParams p = validate_params(1.0, 1.0, 1.0);
  const double w0 = q::omega(0, 1.0);
  const double w1 = q::omega(1, 1.0);

  const auto levels = q::spectrum(q::FockSpace(2, 2), p);
  const double expected[] = {-w1, w0 - w1, 0.0, w0};
  double worst_levels = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    worst_levels = std::max(worst_levels, std::fabs(levels[i].energy - expected[i]));
  lines.push_back({"hardcore spectrum deviation", worst_levels, tol(1e-15)});

  const Eigen::MatrixXcd h = q::build_hamiltonian_matrix(q::FockSpace(2, 2), p);
  double offdiag = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) offdiag = std::max(offdiag, std::abs(h(i, j)));
  lines.push_back({"Hamiltonian off-diagonal weight", offdiag, tol(1e-15)});

  double worst_comm = 0.0;
  for (int d = 2; d <= 6; ++d) {
    const q::FockSpace space(1, d);
    const auto [c, cdag] = q::build_ladder(space, 0);
    const Eigen::MatrixXcd comm = c * cdag - cdag * c;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const double want = (i != j) ? 0.0 : (i == d - 1 ? 1.0 - d : 1.0);
        worst_comm = std::max(worst_comm, std::abs(comm(i, j) - Complex(want)));
      }
  }
  lines.push_back({"commutator identity-block deviation", worst_comm, tol(1e-14)});

  double worst_floor = 0.0;
  for (int d = 2; d <= 6; ++d) {
    const double floor = q::spectrum(q::FockSpace(2, d), p).front().energy;
    worst_floor = std::max(worst_floor, std::fabs(floor - (-(w1 * (d - 1.0)))));
  }
  lines.push_back({"ghost floor deviation from linear law", worst_floor, tol(1e-15)});
}

int run_verify(const std::string& suite, double tol_override, std::uint64_t seed) {
  const std::set<std::string> known = {"eom", "brackets", "hamiltonian", "quantum", "all"};
  if (!known.count(suite)) return fail_input("unknown suite: " + suite);

  std::vector<std::pair<std::string, std::vector<CheckLine>>> groups;
  auto want = [&suite](const char* name) { return suite == "all" || suite == name; };
  if (want("eom")) {
    groups.emplace_back("eom", std::vector<CheckLine>{});
    run_eom_suite(seed, tol_override, groups.back().second);
  }
  if (want("brackets")) {
    groups.emplace_back("brackets", std::vector<CheckLine>{});
    run_brackets_suite(seed, tol_override, groups.back().second);
  }
  if (want("hamiltonian")) {
    groups.emplace_back("hamiltonian", std::vector<CheckLine>{});
    run_hamiltonian_suite(seed, tol_override, groups.back().second);
  }
  if (want("quantum")) {
    groups.emplace_back("quantum", std::vector<CheckLine>{});
    run_quantum_suite(seed, tol_override, groups.back().second);
  }

  int failed = 0, total = 0;
  for (const auto& [name, lines] : groups) {
    for (const CheckLine& line : lines) {
      const bool pass = line.measured <= line.tol;
      std::printf("[%s] %s: %s = %s (tol %s)\n", pass ? "PASS" : "FAIL", name.c_str(),
                  line.name.c_str(), fmt_short(line.measured).c_str(),
                  fmt_short(line.tol).c_str());
      ++total;
      if (!pass) ++failed;
    }
  }
  std::printf("%d of %d checks passed\n", total - failed, total);
  return failed == 0 ? 0 : 1;
}

// ---- field ----

int run_field(const std::string& config_path, double t, int grid, const std::string& out_path) {
  const LoadedConfig cfg = load_config(config_path);
  if (!std::isfinite(t)) throw std::invalid_argument("t must be finite");
  const ModeCoeffs evolved = evolve_modes(cfg.coeffs, t, cfg.params.alpha);
  const LambdaField field = LambdaField::from_modes(evolved, cfg.params, grid);
  const MomentumField momentum = momentum_field(field, cfg.params);

  std::FILE* csv = std::fopen(out_path.c_str(), "w");
  if (!csv) throw std::invalid_argument("cannot open output file: " + out_path);
  std::fprintf(csv, "lambda,re_q,im_q,p\n");
  for (int j = 0; j < field.grid_size; ++j) {
    const std::size_t idx = static_cast<std::size_t>(j);
    std::fprintf(csv, "%s,%s,%s,%s\n", fmt(field.lambda_at(j)).c_str(),
                 fmt(field.samples[idx].real()).c_str(), fmt(field.samples[idx].imag()).c_str(),
                 fmt(momentum.samples[idx].real()).c_str());
  }
  std::fclose(csv);
  return 0;
}

/// Maps exceptions to the exit-code contract: state/residual problems are 1,
/// invalid input and budget problems are 2.
template <typename Body>
int guarded(Body body) {
  try {
    return body();
  } catch (const NonRealTrajectory& e) {
    return fail_check(e.what());
  } catch (const NonRealEnergy& e) {
    return fail_check(e.what());
  } catch (const RealityViolation& e) {
    return fail_check(e.what());
  } catch (const Error& e) {
    return fail_input(e.what());
  } catch (const json::exception& e) {
    return fail_input(std::string("bad config JSON: ") + e.what());
  } catch (const std::exception& e) {
    return fail_input(e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical laboratory for the nonlocal oscillator with delay-coupled action"};
  app.require_subcommand(1);

  std::string config_path, out_path, suite;
  double t_max = 0.0, dt = 0.0, tol = 1e-10, alpha = 1.0, hbar = 1.0, t_snap = 0.0;
  double verify_tol = -1.0;
  int k_modes = 1, max_occ = 1, grid = 256;
  std::uint64_t seed = 12345;

  CLI::App* simulate = app.add_subcommand("simulate", "Sample q(t) and write CSV + JSON sidecar");
  simulate->add_option("--config", config_path, "model config JSON")->required();
  simulate->add_option("--t-max", t_max, "end of the time range")->required();
  simulate->add_option("--dt", dt, "sample spacing")->required();
  simulate->add_option("--out", out_path, "output CSV path")->required();
  simulate->add_option("--tol", tol, "relative residual tolerance (default 1e-10)");

  CLI::App* spectrum = app.add_subcommand("spectrum", "Enumerate the truncated quantum spectrum");
  spectrum->add_option("--k-modes", k_modes, "number of oscillator modes")->required();
  spectrum->add_option("--max-occ", max_occ, "maximum occupation per mode")->required();
  spectrum->add_option("--alpha", alpha, "delay parameter")->required();
  spectrum->add_option("--hbar", hbar, "action scale (default 1)");
  spectrum->add_option("--out", out_path, "output JSON path")->required();

  CLI::App* verify = app.add_subcommand("verify", "Run an invariant suite and report residuals");
  verify->add_option("--suite", suite, "eom | brackets | hamiltonian | quantum | all")->required();
  verify->add_option("--tol", verify_tol, "override the per-check tolerances");
  verify->add_option("--seed", seed, "random seed (default 12345)");

  CLI::App* field = app.add_subcommand("field", "Snapshot Q(t,.) and P(.) over the window");
  field->add_option("--config", config_path, "model config JSON")->required();
  field->add_option("--t", t_snap, "snapshot time")->required();
  field->add_option("--grid", grid, "grid size (power of two)")->required();
  field->add_option("--out", out_path, "output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (simulate->parsed())
    return guarded([&] { return run_simulate(config_path, t_max, dt, out_path, tol); });
  if (spectrum->parsed())
    return guarded([&] { return run_spectrum(k_modes, max_occ, alpha, hbar, out_path); });
  if (verify->parsed())
    return guarded([&] { return run_verify(suite, verify_tol, seed); });
  if (field->parsed())
    return guarded([&] { return run_field(config_path, t_snap, grid, out_path); });
  return 2;
}
