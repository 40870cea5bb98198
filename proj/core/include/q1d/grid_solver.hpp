#pragma once

#include "q1d/state.hpp"

namespace q1d {

/// Default grid for the quasi-1D propagator: extent covering the trap
/// ground state plus the interaction-induced spread.
GridAxes default_grid_axes(const TrapParams& params);

/// Imaginary-time ground state of the quasi-1D Hamiltonian on an
/// N-dimensional uniform grid (N = 2 or 3) by second-order operator
/// splitting with a spectral kinetic step. The reported energy includes
/// the N*eps transverse zero-point shift. The state is permutation
/// symmetric by construction.
GridState imaginary_time_ground_state(const TrapParams& params,
                                      const GridAxes& axes,
                                      double dtau = 1e-3, double tol = 1e-9);

/// Discretization of the full-3D two-body relative problem: a uniform
/// x grid coupled to `channels` transverse radial-oscillator modes. The
/// transverse direction is treated in its exact eigenbasis, which keeps
/// the solve stable at large anisotropy where the oscillator frequency
/// dwarfs every longitudinal scale.
struct Axes3DRelative {
  int nx;
  double lx;
  int channels;
};

Axes3DRelative default_relative_axes(double g, double epsilon);

/// Ground-state energy of the full 3D two-body problem,
/// E = E_COM + E_rel with E_COM = 1/2 + eps exact and E_rel the lowest
/// eigenvalue of the coupled-channel relative Hamiltonian. With
/// `richardson` the solve is repeated on a doubled x grid and
/// h^2-extrapolated.
double full3d_two_body_energy(double g, double epsilon,
                              const Axes3DRelative& axes,
                              bool richardson = true);

/// Relative single-mode error |E - E_1D| / E for N = 2, with E from the
/// full 3D solver and E_1D the quasi-1D bosonic CI ground energy
/// (including the N*eps shift). n_max = 0 picks an epsilon-adapted basis.
double delta_e(double g, double epsilon, int n_max = 0,
               bool richardson = true);

}  // namespace q1d
