#pragma once

#include <cstdint>

#include "q1d/basis.hpp"
#include "q1d/state.hpp"

namespace q1d {

/// Trace-normalized symmetric one-particle kernel, either as a matrix over
/// oscillator orbitals or as samples on a quadrature grid with weights.
struct ReducedDensityMatrix {
  enum class Rep { Orbital, Grid };
  Rep rep;
  Eigen::MatrixXd kernel;
  Eigen::VectorXd nodes;    // Grid only
  Eigen::VectorXd weights;  // Grid only
};

/// rho_mn = <a+_m a_n> / N from bosonic CI amplitudes. Rejects
/// antisymmetric-statistics input: the bosonic RDM of |psi_F| is not the
/// fermionic one-body matrix (use rdm_from_fermionized).
ReducedDensityMatrix rdm_from_ci(const CIState& state);

/// rho(x, x') by trapezoidal contraction of a grid state over the
/// remaining coordinates.
ReducedDensityMatrix rdm_from_grid(const GridState& state);

/// Quadrature controls for the fermionized kernel integration.
struct FermionizedQuadrature {
  double extent;          // integration box [-extent, extent]
  int outer_nodes;        // Gauss-Legendre nodes carrying the kernel
  int inner_nodes;        // Gauss-Legendre nodes per integrated axis
  static FermionizedQuadrature defaults(int n_particles, double g);
};

/// Evaluates psi_B = |psi_F| pointwise from CI amplitudes (sum of
/// determinants) and integrates rho(x,x') over the N-1 remaining
/// coordinates by tensor-product Gauss-Legendre quadrature. Throws a
/// resource error when the N=4 node budget is exceeded.
ReducedDensityMatrix rdm_from_fermionized(const CIState& state,
                                          const FermionizedQuadrature& quad);

/// Deterministic-seed Monte Carlo fallback for the N=4 integration.
struct MonteCarloRdm {
  ReducedDensityMatrix rdm;
  double entropy_standard_error;
};
MonteCarloRdm rdm_from_fermionized_mc(const CIState& state, double extent,
                                      int outer_nodes, long samples,
                                      uint64_t seed);

/// Schmidt occupancies, descending. Grid kernels are weight-symmetrized
/// (W^{1/2} rho W^{1/2}) so the eigenvalues are true occupancies.
Eigen::VectorXd natural_occupancies(const ReducedDensityMatrix& rdm);

/// L = 1 - sum lambda^2.
double linear_entropy(const Eigen::VectorXd& occupancies);
double purity(const Eigen::VectorXd& occupancies);

/// Independent route: purity as the double integral of rho(x,x')^2.
double kernel_purity(const ReducedDensityMatrix& rdm);

struct DensityProfile {
  Eigen::VectorXd x;
  Eigen::VectorXd n;
};

/// n(x) = rho(x, x) on the kernel's own grid.
DensityProfile density_profile(const ReducedDensityMatrix& rdm);

/// Bosonic CI density sampled on a uniform grid.
DensityProfile density_profile(const CIState& state, int points,
                               double extent);

/// Fermionized density n(x) = int psi_F(x,.)^2 on a uniform grid.
DensityProfile fermionized_density(const CIState& state, int points,
                                   double extent,
                                   const FermionizedQuadrature& quad);

/// Number of strict local maxima of a sampled profile, ignoring noise
/// below `floor` times the global maximum.
int count_local_maxima(const DensityProfile& profile, double floor = 1e-3);

}  // namespace q1d
