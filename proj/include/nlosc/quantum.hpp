#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "nlosc/core.hpp"

/// Truncated Fock-space realization of the quantized theory: ladder
/// operators, the normal-ordered alternating-sign Hamiltonian, and spectrum
/// enumeration exhibiting the ghost (unbounded-below) structure.
namespace nlosc::quantum {

/// K oscillator modes with local occupations 0..d-1; total dimension d^K.
struct FockSpace {
  int k_modes = 1;
  int dim_per_mode = 2;

  FockSpace(int k_modes_, int dim_per_mode_);

  /// d^K, or BudgetExceeded past the cap.
  long long dimension(long long budget = 1000000) const;
};

/// omega_k = pi (2k+1) / (2 alpha) for k >= 0.
double omega(int k, double alpha);

/// Normal-ordered energy hbar sum_k (-1)^k omega_k n_k; the vacuum sits at
/// zero by construction.
double energy(const OccupationState& state, const PhysicalParams& params);

/// One enumerated level: its occupations and energy.
struct Level {
  OccupationState occ;
  double energy = 0.0;
};

/// All d^K levels sorted by energy (ties broken by occupation order).
/// Throws BudgetExceeded when the dimension passes the budget.
std::vector<Level> spectrum(const FockSpace& space, const PhysicalParams& params,
                            long long budget = 1000000);

/// Basis index of an occupation state; mode 0 is the most significant digit.
long long index_of_occupation(const FockSpace& space, const OccupationState& state);

/// Occupation state of a basis index.
OccupationState occupation_of_index(const FockSpace& space, long long index);

/// Lowering and raising matrices for mode k embedded in the full tensor
/// space (the raising matrix is the adjoint of the lowering one).
std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> build_ladder(const FockSpace& space, int k);

/// H = hbar sum_k (-1)^k omega_k c_k^+ c_k as a dense matrix. Built from the
/// exact integer occupation content per basis state, so the matrix is
/// exactly diagonal and its diagonal equals the energy enumeration bit for
/// bit.
Eigen::MatrixXcd build_hamiltonian_matrix(const FockSpace& space, const PhysicalParams& params);

/// The formal symmetric-ordering zero-point sum (hbar/2) sum_k (-1)^k
/// omega_k over all modes diverges; this reporter always refuses by throwing
/// DivergentZeroPoint rather than assigning the sum a value.
double zero_point_energy(const FockSpace& space, const PhysicalParams& params);

}  // namespace nlosc::quantum
