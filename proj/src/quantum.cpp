#include "nlosc/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nlosc/modes.hpp"

namespace nlosc::quantum {

namespace {

// Dense operator matrices above this dimension would be an accident.
constexpr long long kDenseCap = 2048;

long long stride_of_mode(const FockSpace& space, int k) {
  long long stride = 1;
  for (int i = k + 1; i < space.k_modes; ++i) stride *= space.dim_per_mode;
  return stride;
}

}  // namespace

FockSpace::FockSpace(int k_modes_, int dim_per_mode_)
    : k_modes(k_modes_), dim_per_mode(dim_per_mode_) {
  if (k_modes_ < 1) throw std::invalid_argument("FockSpace: need at least one mode");
  if (dim_per_mode_ < 2) throw std::invalid_argument("FockSpace: need local dimension >= 2");
}

long long FockSpace::dimension(long long budget) const {
  long long dim = 1;
  for (int k = 0; k < k_modes; ++k) {
    dim *= dim_per_mode;
    if (dim > budget)
      throw BudgetExceeded("FockSpace: dimension " + std::to_string(dim_per_mode) + "^" +
                           std::to_string(k_modes) + " exceeds budget " +
                           std::to_string(budget));
  }
  return dim;
}

double omega(int k, double alpha) {
  if (k < 0) throw std::invalid_argument("omega: mode index must be >= 0");
  if (!(alpha > 0.0)) throw NonPositiveParameter("omega: alpha must be positive");
  return mode_omega(k, alpha);
}

double energy(const OccupationState& state, const PhysicalParams& params) {
  double total = 0.0;
  for (std::size_t k = 0; k < state.occ.size(); ++k) {
    if (state.occ[k] < 0) throw std::invalid_argument("energy: occupations must be >= 0");
    total += params.hbar * parity_sign(static_cast<long long>(k)) *
             omega(static_cast<int>(k), params.alpha) * static_cast<double>(state.occ[k]);
  }
  return total;
}

long long index_of_occupation(const FockSpace& space, const OccupationState& state) {
  if (static_cast<int>(state.occ.size()) != space.k_modes)
    throw std::invalid_argument("index_of_occupation: wrong number of modes");
  long long index = 0;
  for (int k = 0; k < space.k_modes; ++k) {
    if (state.occ[static_cast<std::size_t>(k)] < 0 ||
        state.occ[static_cast<std::size_t>(k)] >= space.dim_per_mode)
      throw std::invalid_argument("index_of_occupation: occupation out of range");
    index = index * space.dim_per_mode + state.occ[static_cast<std::size_t>(k)];
  }
  return index;
}

OccupationState occupation_of_index(const FockSpace& space, long long index) {
  OccupationState state;
  state.occ.assign(static_cast<std::size_t>(space.k_modes), 0);
  for (int k = space.k_modes - 1; k >= 0; --k) {
    state.occ[static_cast<std::size_t>(k)] = static_cast<int>(index % space.dim_per_mode);
    index /= space.dim_per_mode;
  }
  return state;
}

std::vector<Level> spectrum(const FockSpace& space, const PhysicalParams& params,
                            long long budget) {
  const long long dim = space.dimension(budget);
  std::vector<Level> levels;
  levels.reserve(static_cast<std::size_t>(dim));
  for (long long index = 0; index < dim; ++index) {
    Level level;
    level.occ = occupation_of_index(space, index);
    level.energy = energy(level.occ, params);
    levels.push_back(std::move(level));
  }
  std::stable_sort(levels.begin(), levels.end(), [](const Level& a, const Level& b) {
    if (a.energy != b.energy) return a.energy < b.energy;
    return a.occ.occ < b.occ.occ;
  });
  return levels;
}

std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> build_ladder(const FockSpace& space, int k) {
  if (k < 0 || k >= space.k_modes)
    throw std::invalid_argument("build_ladder: mode index out of range");
  const long long dim = space.dimension(kDenseCap);
  const long long stride = stride_of_mode(space, k);

  Eigen::MatrixXcd lowering = Eigen::MatrixXcd::Zero(dim, dim);
  for (long long index = 0; index < dim; ++index) {
    const int occ = occupation_of_index(space, index).occ[static_cast<std::size_t>(k)];
    if (occ > 0)
      lowering(index - stride, index) = std::sqrt(static_cast<double>(occ));
  }
  return {lowering, lowering.adjoint()};
}

Eigen::MatrixXcd build_hamiltonian_matrix(const FockSpace& space,
                                          const PhysicalParams& params) {
  const long long dim = space.dimension(kDenseCap);
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  for (long long index = 0; index < dim; ++index)
    h(index, index) = energy(occupation_of_index(space, index), params);
  return h;
}

double zero_point_energy(const FockSpace&, const PhysicalParams&) {
  throw DivergentZeroPoint(
      "zero_point_energy: the symmetric-ordering sum over all modes diverges; "
      "refusing to assign it a value");
}

}  // namespace nlosc::quantum
