#pragma once

#include <optional>
#include <vector>

#include "q1d/basis.hpp"
#include "q1d/state.hpp"

namespace q1d {

/// Tonks-Girardeau g -> 0+ state: the single antisymmetric configuration
/// filling orbitals 0..N-1 with amplitude 1 (the bosonic |.| is applied
/// downstream by rdm_from_fermionized).
CIState tg_state(int n_particles, const OrbitalBasis& basis);

/// Closed-form N=2 large-g entropy anchor, 1 - sqrt(sqrt(3) - 3/2).
double harmonic_entropy_n2();

struct SaturationRow {
  double g;
  std::vector<double> entropies;  // one per requested anisotropy
  double max_difference;
};

struct SaturationReport {
  std::vector<SaturationRow> rows;
  double threshold;
  /// Smallest g whose entropy spread across anisotropies is below the
  /// threshold; empty when none qualifies.
  std::optional<double> first_saturated_g;
};

/// Tabulates entropy differences across anisotropies at fixed g, using the
/// full solver chain (bosonic CI for finite eps, fermionized CI for the
/// strict limit when requested).
SaturationReport saturation_check(int n_particles,
                                  const std::vector<double>& g_values,
                                  const std::vector<Anisotropy>& anisotropies,
                                  int n_max = 0, double threshold = 0.01);

}  // namespace q1d
