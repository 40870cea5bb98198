#pragma once

#include <string>

#include "q1d/correlation.hpp"
#include "q1d/state.hpp"

namespace q1d {

enum class Method { CI, Grid };

/// Per-point solver overrides; zeros pick the documented defaults.
struct SolveOptions {
  Method method = Method::CI;
  int n_max = 0;           // CI basis size
  int grid_points = 0;     // grid propagator points per axis
  double grid_extent = 0;  // grid propagator half-width
  int inner_nodes = 0;     // fermionized RDM inner quadrature
  int outer_nodes = 0;     // fermionized RDM kernel nodes
  double dtau = 1e-3;
  double eigen_tol = 1e-10;
  int density_points = 201;
};

/// Everything the sweep reports for one (N, g, eps) point.
struct CorrelationReport {
  TrapParams params;
  Method method;
  double energy;
  Eigen::VectorXd occupancies;  // truncated for reporting
  double entropy;
  DensityProfile density;
  bool converged;
  std::string error;
};

int default_n_max(int n_particles);

/// Runs the full pipeline for one parameter point: solve, reduce, report.
/// Solver failures are captured in `converged`/`error` rather than thrown.
CorrelationReport solve_point(const TrapParams& params,
                              const SolveOptions& options);

/// As solve_point but propagating exceptions (used by tests).
CorrelationReport solve_point_strict(const TrapParams& params,
                                     const SolveOptions& options);

/// Occupancies truncated for reports: cumulative sum >= 1 - 1e-6, at most
/// 32 values.
Eigen::VectorXd truncate_occupancies(const Eigen::VectorXd& occupancies);

/// Spatial kernel rho(x, x') for one point (Grid representation). CI
/// results are sampled onto a uniform grid options.density_points wide;
/// strict-1D and grid results come back on their native quadrature/grid
/// nodes.
ReducedDensityMatrix solve_rdm_spatial(const TrapParams& params,
                                       const SolveOptions& options);

}  // namespace q1d
