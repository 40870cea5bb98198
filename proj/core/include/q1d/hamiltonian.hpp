#pragma once

#include <Eigen/Sparse>

#include "q1d/basis.hpp"
#include "q1d/config_space.hpp"
#include "q1d/model.hpp"

namespace q1d {

/// Quasi-1D bosonic Hamiltonian over symmetric configurations:
///   H = sum_i (n_i + 1/2) + g * (two-body from `tensor`) + N*eps.
/// The tensor must be of Smooth kind and built with the same anisotropy.
Eigen::SparseMatrix<double> build_bosonic_hamiltonian(
    const TrapParams& params, const OrbitalBasis& basis,
    const TwoBodyTensor& tensor, const ConfigurationSpace& space);

/// Strict-1D fermionized Hamiltonian over antisymmetric configurations:
///   H = sum_i (n_i + 1/2) + g * sum_{i<j,k<l} Vt[ijkl] a+_i a+_j a_l a_k.
/// Reports longitudinal energy only (no N*eps shift).
Eigen::SparseMatrix<double> build_fermionized_hamiltonian(
    double g, const OrbitalBasis& basis, const TwoBodyTensor& tensor,
    const ConfigurationSpace& space);

}  // namespace q1d
