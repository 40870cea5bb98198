#pragma once

#include <string>

#include "q1d/basis.hpp"
#include "q1d/state.hpp"

namespace q1d {

/// Versioned little-endian tensor cache. Layout: magic "Q1DT", u32 format
/// version, u32 kind, u32 n_max, u32 quadrature order, f64 epsilon, then
/// n_max^4 row-major f64 values.
void save_tensor(const TwoBodyTensor& tensor, const std::string& path);
TwoBodyTensor load_tensor(const std::string& path);

/// Tries the cache at `path` first; on a key mismatch or unreadable file
/// rebuilds and rewrites. Empty path bypasses the cache entirely.
TwoBodyTensor cached_smooth_tensor(const OrbitalBasis& basis,
                                   const EffectivePotential& potential,
                                   const std::string& path);
TwoBodyTensor cached_coulomb_tensor(const OrbitalBasis& basis,
                                    const std::string& path);

/// Grid-state snapshot, same binary conventions as the tensor cache.
/// Layout: magic "Q1DS", u32 version, u32 n_particles, u32 strict flag,
/// f64 g, f64 epsilon (0 under the strict flag), u32 points, f64 extent,
/// f64 energy, then points^n_particles f64 amplitudes.
void save_grid_state(const GridState& state, const std::string& path);
GridState load_grid_state(const std::string& path);

}  // namespace q1d
