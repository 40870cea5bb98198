#include "q1d/grid_solver.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

#include <fftw3.h>

namespace q1d {

GridAxes default_grid_axes(const TrapParams& params) {
  const double extent = 6.0 + 1.5 * std::cbrt(2.0 * params.g);
  const int points = params.n_particles == 2 ? 256 : 96;
  return {points, extent};
}

namespace {

// The FFTW planner is not thread-safe (execution is); concurrent sweep
// points must serialize plan creation and destruction.
std::mutex fftw_planner_mutex;

class SplitOperatorPropagator {
 public:
  SplitOperatorPropagator(const TrapParams& params, const GridAxes& axes)
      : n_(axes.points), dim_(params.n_particles), axes_(axes) {
    if (dim_ != 2 && dim_ != 3)
      throw std::invalid_argument(
          "imaginary_time_ground_state: N must be 2 or 3");
    if (params.anisotropy.is_strict_1d())
      throw std::invalid_argument(
          "imaginary_time_ground_state: requires finite anisotropy");
    total_ = 1;
    for (int d = 0; d < dim_; ++d) total_ *= n_;
    ctotal_ = total_ / n_ * (n_ / 2 + 1);

    // Cell-centered periodic grid: exactly symmetric under x -> -x.
    x_.resize(n_);
    for (int i = 0; i < n_; ++i)
      x_[i] = -axes.extent + (i + 0.5) * axes.step();
    k_.resize(n_);
    const double dk = M_PI / axes.extent;
    for (int i = 0; i < n_; ++i)
      k_[i] = dk * (i <= n_ / 2 ? i : i - n_);

    const EffectivePotential u(params.anisotropy.epsilon());
    potential_.resize(total_);
    std::vector<int> idx(dim_);
    for (long p = 0; p < total_; ++p) {
      decompose(p, idx);
      double v = 0.0;
      for (int d = 0; d < dim_; ++d) v += 0.5 * x_[idx[d]] * x_[idx[d]];
      for (int a = 0; a < dim_; ++a)
        for (int b = a + 1; b < dim_; ++b)
          v += params.g * u(x_[idx[a]] - x_[idx[b]]);
      potential_[p] = v;
    }

    psi_ = fftw_alloc_real(total_);
    spec_ = fftw_alloc_complex(ctotal_);
    std::vector<int> shape(dim_, n_);
    {
      std::lock_guard<std::mutex> lock(fftw_planner_mutex);
      fwd_ =
          fftw_plan_dft_r2c(dim_, shape.data(), psi_, spec_, FFTW_ESTIMATE);
      bwd_ =
          fftw_plan_dft_c2r(dim_, shape.data(), spec_, psi_, FFTW_ESTIMATE);
    }

    // Permutation-symmetric Gaussian start.
    for (long p = 0; p < total_; ++p) {
      decompose(p, idx);
      double s = 0.0;
      for (int d = 0; d < dim_; ++d) s += x_[idx[d]] * x_[idx[d]];
      psi_[p] = std::exp(-0.5 * s);
    }
    normalize();
  }

  ~SplitOperatorPropagator() {
    {
      std::lock_guard<std::mutex> lock(fftw_planner_mutex);
      fftw_destroy_plan(fwd_);
      fftw_destroy_plan(bwd_);
    }
    fftw_free(psi_);
    fftw_free(spec_);
  }

  void step(double dtau) {
    apply_potential(0.5 * dtau);
    fftw_execute(fwd_);
    apply_kinetic_factor(dtau);
    fftw_execute(bwd_);
    for (long p = 0; p < total_; ++p) psi_[p] /= total_;
    apply_potential(0.5 * dtau);
    normalize();
  }

  double energy() {
    double pot = 0.0;
    for (long p = 0; p < total_; ++p)
      pot += potential_[p] * psi_[p] * psi_[p];
    fftw_execute(fwd_);
    double kin = 0.0, nrm = 0.0;
    std::vector<int> idx(dim_);
    const int nz = n_ / 2 + 1;
    for (long c = 0; c < ctotal_; ++c) {
      long rest = c;
      const int last = static_cast<int>(rest % nz);
      rest /= nz;
      for (int d = dim_ - 2; d >= 0; --d) {
        idx[d] = static_cast<int>(rest % n_);
        rest /= n_;
      }
      idx[dim_ - 1] = last;
      double k2 = 0.0;
      for (int d = 0; d < dim_; ++d) k2 += k_[idx[d]] * k_[idx[d]];
      const double w =
          (last == 0 || (n_ % 2 == 0 && last == n_ / 2)) ? 1.0 : 2.0;
      const double mag =
          spec_[c][0] * spec_[c][0] + spec_[c][1] * spec_[c][1];
      kin += w * 0.5 * k2 * mag;
      nrm += w * mag;
    }
    // psi_ still holds the real-space state; the transform is out-of-place.
    double norm_real = 0.0;
    for (long p = 0; p < total_; ++p) norm_real += psi_[p] * psi_[p];
    return kin / nrm + pot / norm_real;
  }

  double boundary_density() const {
    const double h = axes_.step();
    double best = 0.0;
    std::vector<int> idx(dim_);
    for (long p = 0; p < total_; ++p) {
      decompose(p, idx);
      bool edge = false;
      for (int d = 0; d < dim_; ++d)
        if (idx[d] == 0 || idx[d] == n_ - 1) edge = true;
      if (edge) best = std::max(best, psi_[p] * psi_[p] / std::pow(h, dim_));
    }
    return best;
  }

  // Unit norm under the grid measure: sum v^2 h^dim = 1.
  Eigen::VectorXd state_vector() const {
    Eigen::VectorXd v(total_);
    double nrm = 0.0;
    for (long p = 0; p < total_; ++p) nrm += psi_[p] * psi_[p];
    const double scale =
        1.0 / (std::sqrt(nrm) * std::sqrt(std::pow(axes_.step(), dim_)));
    for (long p = 0; p < total_; ++p) v[p] = psi_[p] * scale;
    return v;
  }

 private:
  void decompose(long p, std::vector<int>& idx) const {
    for (int d = dim_ - 1; d >= 0; --d) {
      idx[d] = static_cast<int>(p % n_);
      p /= n_;
    }
  }

  void apply_potential(double t) {
    for (long p = 0; p < total_; ++p)
      psi_[p] *= std::exp(-t * potential_[p]);
  }

  void apply_kinetic_factor(double dtau) {
    std::vector<int> idx(dim_);
    const int nz = n_ / 2 + 1;
    for (long c = 0; c < ctotal_; ++c) {
      long rest = c;
      idx[dim_ - 1] = static_cast<int>(rest % nz);
      rest /= nz;
      for (int d = dim_ - 2; d >= 0; --d) {
        idx[d] = static_cast<int>(rest % n_);
        rest /= n_;
      }
      double k2 = 0.0;
      for (int d = 0; d < dim_; ++d) k2 += k_[idx[d]] * k_[idx[d]];
      const double f = std::exp(-0.5 * dtau * k2);
      spec_[c][0] *= f;
      spec_[c][1] *= f;
    }
  }

  void normalize() {
    double nrm = 0.0;
    for (long p = 0; p < total_; ++p) nrm += psi_[p] * psi_[p];
    const double inv = 1.0 / std::sqrt(nrm);
    for (long p = 0; p < total_; ++p) psi_[p] *= inv;
  }

  int n_;
  int dim_;
  GridAxes axes_;
  long total_;
  long ctotal_;
  std::vector<double> x_, k_, potential_;
  double* psi_;
  fftw_complex* spec_;
  fftw_plan fwd_, bwd_;
};

}  // namespace

GridState imaginary_time_ground_state(const TrapParams& params,
                                      const GridAxes& axes, double dtau,
                                      double tol) {
  if (!(dtau > 0.0))
    throw std::invalid_argument("imaginary_time_ground_state: dtau <= 0");
  const double spread = 6.0 + 1.2 * std::cbrt(std::max(2.0 * params.g, 1.0));
  if (axes.extent < 0.8 * spread)
    throw std::domain_error(
        "imaginary_time_ground_state: grid extent too small for this g");

  SplitOperatorPropagator prop(params, axes);

  // Coarse-to-fine step ladder; each stage damps the Trotter residual of
  // the previous one, the last stage runs at the requested dtau.
  std::vector<double> stages;
  for (double s = 0.05; s > 2.0 * dtau; s *= 0.4) stages.push_back(s);
  stages.push_back(dtau);

  double energy = prop.energy();
  for (double s : stages) {
    const int check_every = 20;
    const double stage_tol = (s == dtau) ? tol : std::max(tol, 1e-7);
    const int max_checks = static_cast<int>(30.0 / (s * check_every)) + 5;
    double prev = energy;
    for (int chk = 0; chk < max_checks; ++chk) {
      for (int i = 0; i < check_every; ++i) prop.step(s);
      energy = prop.energy();
      if (energy > prev + 1e-7 * (1.0 + std::abs(prev)))
        throw std::runtime_error(
            "imaginary_time_ground_state: energy increased; dtau too large");
      if (std::abs(energy - prev) < stage_tol) break;
      prev = energy;
    }
  }

  if (prop.boundary_density() > 1e-6)
    throw std::domain_error(
        "imaginary_time_ground_state: density at grid boundary exceeds 1e-6");

  GridState state{params, axes, prop.state_vector(),
                  energy + params.n_particles * params.anisotropy.epsilon()};
  return state;
}

}  // namespace q1d
