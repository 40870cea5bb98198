#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Sparse>

#include "q1d/eigensolver.hpp"
#include "q1d/grid_solver.hpp"
#include "q1d/special.hpp"

namespace q1d {

Axes3DRelative default_relative_axes(double g, double epsilon) {
  Axes3DRelative axes;
  axes.lx = 7.0 + 1.7 * std::cbrt(2.0 * g);
  axes.nx = 512;
  // Transverse excitations are separated by 2*eps while the Coulomb
  // coupling grows with g, so the channel count follows their ratio.
  const double mix = g / std::max(1.0, epsilon);
  axes.channels = std::min(24, 8 + static_cast<int>(std::ceil(4.0 * mix)));
  (void)epsilon;
  return axes;
}

namespace {

// Transverse (l = 0) radial oscillator modes R_m of the relative problem,
//   R_m(rho) = sqrt(eps) e^{-eps rho^2/4} L_m(eps rho^2/2),
// orthonormal under rho d rho, with energies eps (2m + 1). Their Coulomb
// couplings reduce to one smooth half-line integral per x,
//   W[m][m'](x) = int_0^inf 2 s e^{-s^2} L_m(s^2) L_m'(s^2)
//                 / sqrt(x^2 + 2 s^2/eps) ds,
// evaluated on geometric Gauss-Legendre panels refined to the scale on
// which the denominator turns over.
Eigen::MatrixXd channel_couplings(double x, double eps, int channels) {
  const double ax = std::abs(x) * std::sqrt(0.5 * eps);  // turnover scale
  const double smax = std::sqrt(2.0 * channels + 30.0);
  std::vector<double> cuts{0.0};
  double c = std::max(1e-3, std::min(ax, smax * 0.5));
  while (c < smax) {
    cuts.push_back(c);
    c *= 2.0;
  }
  cuts.push_back(smax);

  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(channels, channels);
  Eigen::VectorXd lag(channels);
  for (size_t seg = 0; seg + 1 < cuts.size(); ++seg) {
    const QuadratureRule panel = gauss_legendre(24, cuts[seg], cuts[seg + 1]);
    for (int a = 0; a < 24; ++a) {
      const double s = panel.nodes[a];
      const double u = s * s;
      lag[0] = 1.0;
      if (channels > 1) lag[1] = 1.0 - u;
      for (int m = 2; m < channels; ++m)
        lag[m] = ((2.0 * m - 1.0 - u) * lag[m - 1] -
                  (m - 1.0) * lag[m - 2]) / m;
      const double f = panel.weights[a] * 2.0 * s * std::exp(-u) /
                       std::sqrt(x * x + 2.0 * u / eps);
      w.noalias() += f * lag * lag.transpose();
    }
  }
  return w;
}

double relative_energy(double g, double eps, const Axes3DRelative& axes) {
  const int nx = axes.nx;
  const int mch = axes.channels;
  const double hx = 2.0 * axes.lx / nx;
  const int dim = nx * mch;

  std::vector<Eigen::Triplet<double>> entries;
  entries.reserve(static_cast<size_t>(dim) * (mch + 2));
  const double kin = 1.0 / (hx * hx);
  for (int i = 0; i < nx; ++i) {
    const double x = -axes.lx + (i + 0.5) * hx;
    const Eigen::MatrixXd w = channel_couplings(x, eps, mch);
    for (int m = 0; m < mch; ++m) {
      const int row = i * mch + m;
      entries.emplace_back(row, row,
                           2.0 * kin + 0.25 * x * x + eps * (2.0 * m + 1.0) +
                               g * w(m, m));
      for (int mp = m + 1; mp < mch; ++mp) {
        entries.emplace_back(row, i * mch + mp, g * w(m, mp));
        entries.emplace_back(i * mch + mp, row, g * w(m, mp));
      }
      if (i + 1 < nx) {
        entries.emplace_back(row, row + mch, -kin);
        entries.emplace_back(row + mch, row, -kin);
      }
    }
  }
  Eigen::SparseMatrix<double> h(dim, dim);
  h.setFromTriplets(entries.begin(), entries.end());
  return ground_state(h, 1e-10).energy;
}

}  // namespace

double full3d_two_body_energy(double g, double epsilon,
                              const Axes3DRelative& axes, bool richardson) {
  if (!(epsilon > 0.0))
    throw std::invalid_argument("full3d_two_body_energy: epsilon <= 0");
  if (!(g >= 0.0))
    throw std::invalid_argument("full3d_two_body_energy: g < 0");
  const double e_com = 0.5 + epsilon;
  double e_rel = relative_energy(g, epsilon, axes);
  if (richardson) {
    Axes3DRelative fine = axes;
    fine.nx *= 2;
    const double e_fine = relative_energy(g, epsilon, fine);
    e_rel = e_fine + (e_fine - e_rel) / 3.0;  // h^2 extrapolation
  }
  return e_com + e_rel;
}

}  // namespace q1d
