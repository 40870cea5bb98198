#include "q1d/pipeline.hpp"

#include <cmath>
#include <memory>

#include "q1d/eigensolver.hpp"
#include "q1d/grid_solver.hpp"
#include "q1d/hamiltonian.hpp"
#include "q1d/limits.hpp"
#include "q1d/special.hpp"

namespace q1d {

int default_n_max(int n_particles) {
  switch (n_particles) {
    case 2: return 16;
    case 3: return 14;
    default: return 12;
  }
}

namespace {

CIState solve_bosonic_ci(const TrapParams& params, int n_max,
                         double eigen_tol) {
  OrbitalBasis basis(n_max);
  EffectivePotential potential(params.anisotropy.epsilon());
  TwoBodyTensor tensor = smooth_tensor(basis, potential);
  auto space = std::make_shared<ConfigurationSpace>(
      ConfigurationSpace::symmetric(n_max, params.n_particles));
  auto h = build_bosonic_hamiltonian(params, basis, tensor, *space);
  GroundStateResult gs = ground_state(h, eigen_tol);
  return CIState{space, gs.vector, gs.energy, params};
}

CIState solve_fermionized_ci(const TrapParams& params, int n_max,
                             double eigen_tol) {
  OrbitalBasis basis(n_max);
  TwoBodyTensor tensor = antisymmetrized_coulomb_tensor(basis);
  auto space = std::make_shared<ConfigurationSpace>(
      ConfigurationSpace::antisymmetric(n_max, params.n_particles));
  auto h = build_fermionized_hamiltonian(params.g, basis, tensor, *space);
  GroundStateResult gs = ground_state(h, eigen_tol);
  return CIState{space, gs.vector, gs.energy, params};
}

}  // namespace

CorrelationReport solve_point_strict(const TrapParams& params,
                                     const SolveOptions& options) {
  CorrelationReport report{params, options.method, 0.0, {}, 0.0, {}, true, ""};
  const int n_max =
      options.n_max > 0 ? options.n_max : default_n_max(params.n_particles);

  if (params.anisotropy.is_strict_1d()) {
    CIState state = solve_fermionized_ci(params, n_max, options.eigen_tol);
    report.energy = state.energy;
    FermionizedQuadrature quad =
        FermionizedQuadrature::defaults(params.n_particles, params.g);
    if (options.inner_nodes > 0) quad.inner_nodes = options.inner_nodes;
    if (options.outer_nodes > 0) quad.outer_nodes = options.outer_nodes;
    ReducedDensityMatrix rdm = rdm_from_fermionized(state, quad);
    Eigen::VectorXd occ = natural_occupancies(rdm);
    report.entropy = linear_entropy(occ);
    report.occupancies = truncate_occupancies(occ);
    report.density = fermionized_density(state, options.density_points,
                                         quad.extent, quad);
    return report;
  }

  if (options.method == Method::CI) {
    CIState state = solve_bosonic_ci(params, n_max, options.eigen_tol);
    report.energy = state.energy;
    ReducedDensityMatrix rdm = rdm_from_ci(state);
    Eigen::VectorXd occ = natural_occupancies(rdm);
    report.entropy = linear_entropy(occ);
    report.occupancies = truncate_occupancies(occ);
    const double extent = default_grid_axes(params).extent;
    report.density =
        density_profile(state, options.density_points, extent);
    return report;
  }

  GridAxes axes = default_grid_axes(params);
  if (options.grid_points > 0) axes.points = options.grid_points;
  if (options.grid_extent > 0) axes.extent = options.grid_extent;
  GridState state = imaginary_time_ground_state(params, axes, options.dtau);
  report.energy = state.energy;
  ReducedDensityMatrix rdm = rdm_from_grid(state);
  Eigen::VectorXd occ = natural_occupancies(rdm);
  report.entropy = linear_entropy(occ);
  report.occupancies = truncate_occupancies(occ);
  report.density = density_profile(rdm);
  return report;
}

CorrelationReport solve_point(const TrapParams& params,
                              const SolveOptions& options) {
  try {
    return solve_point_strict(params, options);
  } catch (const std::exception& e) {
    CorrelationReport report{params, options.method, 0.0, {}, 0.0,
                             {},     false,          e.what()};
    return report;
  }
}

ReducedDensityMatrix solve_rdm_spatial(const TrapParams& params,
                                       const SolveOptions& options) {
  const int n_max =
      options.n_max > 0 ? options.n_max : default_n_max(params.n_particles);

  if (params.anisotropy.is_strict_1d()) {
    CIState state = solve_fermionized_ci(params, n_max, options.eigen_tol);
    FermionizedQuadrature quad =
        FermionizedQuadrature::defaults(params.n_particles, params.g);
    if (options.inner_nodes > 0) quad.inner_nodes = options.inner_nodes;
    if (options.outer_nodes > 0) quad.outer_nodes = options.outer_nodes;
    return rdm_from_fermionized(state, quad);
  }

  if (options.method == Method::Grid) {
    GridAxes axes = default_grid_axes(params);
    if (options.grid_points > 0) axes.points = options.grid_points;
    if (options.grid_extent > 0) axes.extent = options.grid_extent;
    GridState state = imaginary_time_ground_state(params, axes, options.dtau);
    return rdm_from_grid(state);
  }

  CIState state = solve_bosonic_ci(params, n_max, options.eigen_tol);
  ReducedDensityMatrix orbital = rdm_from_ci(state);
  const int points = options.density_points;
  const double extent = default_grid_axes(params).extent;
  ReducedDensityMatrix rdm;
  rdm.rep = ReducedDensityMatrix::Rep::Grid;
  rdm.nodes.resize(points);
  Eigen::MatrixXd phi(points, n_max);
  for (int i = 0; i < points; ++i) {
    rdm.nodes[i] = -extent + 2.0 * extent * i / (points - 1);
    phi.row(i) = ho_eigenfunctions(n_max, rdm.nodes[i]).transpose();
  }
  rdm.kernel = phi * orbital.kernel * phi.transpose();
  // Trapezoidal weights on the uniform sampling grid.
  const double h = 2.0 * extent / (points - 1);
  rdm.weights = Eigen::VectorXd::Constant(points, h);
  rdm.weights[0] = rdm.weights[points - 1] = 0.5 * h;
  return rdm;
}

Eigen::VectorXd truncate_occupancies(const Eigen::VectorXd& occupancies) {
  const int limit = std::min<int>(32, static_cast<int>(occupancies.size()));
  double cumulative = 0.0;
  int keep = 0;
  while (keep < limit) {
    cumulative += occupancies[keep];
    ++keep;
    if (cumulative >= 1.0 - 1e-6) break;
  }
  return occupancies.head(keep);
}

/// Basis size for the single-mode error diagnostic: the effective kernel's
/// core narrows as 1/sqrt(eps), so the truncation has to grow with eps.
static int delta_e_basis(double epsilon) {
  const int adapted = static_cast<int>(std::ceil(4.0 * std::sqrt(epsilon)));
  return std::max(24, adapted);
}

double delta_e(double g, double epsilon, int n_max, bool richardson) {
  if (n_max <= 0) n_max = delta_e_basis(epsilon);
  TrapParams params(2, g, Anisotropy::finite(epsilon));
  CIState ci = solve_bosonic_ci(params, n_max, 1e-10);
  const double e3d =
      full3d_two_body_energy(g, epsilon, default_relative_axes(g, epsilon),
                             richardson);
  return std::abs(e3d - ci.energy) / e3d;
}

}  // namespace q1d
