#include "q1d/limits.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "q1d/pipeline.hpp"

namespace q1d {

CIState tg_state(int n_particles, const OrbitalBasis& basis) {
  if (basis.n_max < n_particles)
    throw std::invalid_argument("tg_state: n_max must be >= n_particles");
  auto space = std::make_shared<ConfigurationSpace>(
      ConfigurationSpace::antisymmetric(basis.n_max, n_particles));
  std::vector<uint8_t> occ(basis.n_max, 0);
  for (int i = 0; i < n_particles; ++i) occ[i] = 1;
  const int index = space->index_of(occ);
  Eigen::VectorXd amplitudes = Eigen::VectorXd::Zero(space->dimension());
  amplitudes[index] = 1.0;
  const double energy = 0.5 * n_particles * n_particles;
  return CIState{space, amplitudes, energy,
                 TrapParams(n_particles, 0.0, Anisotropy::strict_1d())};
}

double harmonic_entropy_n2() { return 1.0 - std::sqrt(std::sqrt(3.0) - 1.5); }

SaturationReport saturation_check(int n_particles,
                                  const std::vector<double>& g_values,
                                  const std::vector<Anisotropy>& anisotropies,
                                  int n_max, double threshold) {
  if (anisotropies.size() < 2)
    throw std::invalid_argument(
        "saturation_check: need at least two anisotropies to compare");
  SaturationReport report;
  report.threshold = threshold;
  SolveOptions options;
  options.n_max = n_max;
  for (double g : g_values) {
    SaturationRow row;
    row.g = g;
    for (const Anisotropy& aniso : anisotropies) {
      TrapParams params(n_particles, g, aniso);
      CorrelationReport point = solve_point_strict(params, options);
      row.entropies.push_back(point.entropy);
    }
    const auto [lo, hi] =
        std::minmax_element(row.entropies.begin(), row.entropies.end());
    row.max_difference = *hi - *lo;
    if (!report.first_saturated_g && row.max_difference < threshold)
      report.first_saturated_g = g;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace q1d
