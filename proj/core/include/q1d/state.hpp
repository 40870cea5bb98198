#pragma once

#include <memory>

#include <Eigen/Dense>

#include "q1d/config_space.hpp"
#include "q1d/model.hpp"

namespace q1d {

/// Ground state in configuration-interaction form: unit-norm real
/// amplitudes over the configurations of `space`.
struct CIState {
  std::shared_ptr<const ConfigurationSpace> space;
  Eigen::VectorXd amplitudes;
  double energy;
  TrapParams params;
};

/// Uniform per-axis grid on [-extent, extent], `points` samples per axis.
struct GridAxes {
  int points;
  double extent;
  double step() const { return 2.0 * extent / points; }
};

/// Ground state on an N-dimensional uniform grid, unit norm under the
/// grid measure step()^N.
struct GridState {
  TrapParams params;
  GridAxes axes;
  Eigen::VectorXd amplitudes;  // row-major, points^N entries
  double energy;
};

}  // namespace q1d
