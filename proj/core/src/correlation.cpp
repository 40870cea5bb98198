#include "q1d/correlation.hpp"

#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

namespace q1d {

namespace {

void check_grid_like(const ReducedDensityMatrix& rdm) {
  if (rdm.rep != ReducedDensityMatrix::Rep::Grid)
    throw std::invalid_argument("expected a grid-representation RDM");
}

// Inversion symmetry rho(-x,-x') = rho(x,x'): average with the doubly
// reversed kernel (outer nodes are symmetric about zero).
void enforce_inversion(Eigen::MatrixXd& kernel) {
  const Eigen::MatrixXd rev =
      kernel.reverse();  // both dimensions reversed
  kernel = 0.5 * (kernel + rev);
  kernel = 0.5 * (kernel + kernel.transpose()).eval();
}

}  // namespace

ReducedDensityMatrix rdm_from_ci(const CIState& state) {
  const auto& space = *state.space;
  if (space.statistics() != Statistics::Symmetric)
    throw std::invalid_argument(
        "rdm_from_ci: needs symmetric statistics; use rdm_from_fermionized "
        "for the strict-1D path");
  const int m = space.n_max();
  const int n_particles = space.n_particles();
  Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(m, m);
  std::vector<uint8_t> occ1, occ2;
  for (int c = 0; c < space.dimension(); ++c) {
    const double a = state.amplitudes[c];
    if (a == 0.0) continue;
    const auto& occ = space.occupation(c);
    for (int n = 0; n < m; ++n) {
      if (occ[n] == 0) continue;
      const double amp_n = std::sqrt(static_cast<double>(occ[n]));
      occ1 = occ;
      --occ1[n];
      for (int mm = 0; mm < m; ++mm) {
        const double amp = amp_n * std::sqrt(static_cast<double>(occ1[mm] + 1));
        occ2 = occ1;
        ++occ2[mm];
        const int row = space.index_of(occ2);
        if (row >= 0) rho(mm, n) += state.amplitudes[row] * a * amp;
      }
    }
  }
  rho /= n_particles;
  rho = 0.5 * (rho + rho.transpose()).eval();
  return {ReducedDensityMatrix::Rep::Orbital, rho, {}, {}};
}

ReducedDensityMatrix rdm_from_grid(const GridState& state) {
  const int n = state.axes.points;
  const int dim = state.params.n_particles;
  if (dim != 2 && dim != 3)
    throw std::invalid_argument("rdm_from_grid: N must be 2 or 3");
  const double h = state.axes.step();
  const long rest = static_cast<long>(std::pow(n, dim - 1) + 0.5);
  Eigen::Map<const Eigen::MatrixXd> psi(state.amplitudes.data(), rest, n);
  // amplitudes are row-major with the first coordinate slowest; map as
  // column-major (rest x n) so columns index the first coordinate.
  Eigen::MatrixXd rho =
      psi.transpose() * psi * std::pow(h, dim - 1);
  rho = 0.5 * (rho + rho.transpose()).eval();
  enforce_inversion(rho);
  const double trace = rho.trace() * h;
  rho /= trace;
  Eigen::VectorXd nodes(n), weights(n);
  for (int i = 0; i < n; ++i) {
    nodes[i] = -state.axes.extent + (i + 0.5) * h;  // matches the propagator
    weights[i] = h;
  }
  return {ReducedDensityMatrix::Rep::Grid, rho, nodes, weights};
}

FermionizedQuadrature FermionizedQuadrature::defaults(int n_particles,
                                                      double g) {
  FermionizedQuadrature q;
  q.extent = 6.0 + 1.5 * std::cbrt(2.0 * g) * std::pow(n_particles, 2.0 / 3.0);
  // The |psi_F| kink limits plain Gauss-Legendre to slow oscillatory
  // convergence; these node counts hold the entropy to a few 1e-3.
  q.outer_nodes = 128;
  q.inner_nodes = n_particles == 2 ? 512 : (n_particles == 3 ? 96 : 64);
  return q;
}

namespace {

// Shared machinery for evaluating psi_F(x, y2..yN) for many x at fixed y:
// expanding each determinant along the x column gives
//   psi_F(x, y) = sum_n phi_n(x) B_n(y) / sqrt(N!),
// with B built from (N-1)x(N-1) minors shared across configurations.
struct FermionizedEvaluator {
  int n_particles;
  int m;
  Eigen::VectorXd amplitudes;
  std::vector<std::vector<int>> subsets;  // minor orbital lists
  // per config: (orbital row n_k, subset id, cofactor sign)
  struct Term {
    int orbital;
    int subset;
    double sign;
  };
  std::vector<std::vector<Term>> terms;
  double inv_sqrt_factorial;

  explicit FermionizedEvaluator(const CIState& state) {
    const auto& space = *state.space;
    if (space.statistics() != Statistics::Antisymmetric)
      throw std::invalid_argument(
          "fermionized evaluation needs antisymmetric statistics");
    n_particles = space.n_particles();
    m = space.n_max();
    amplitudes = state.amplitudes;
    inv_sqrt_factorial = 1.0 / std::sqrt(factorial(n_particles));

    std::map<std::vector<int>, int> subset_ids;
    terms.resize(space.dimension());
    for (int c = 0; c < space.dimension(); ++c) {
      const auto orbitals = space.orbitals(c);
      for (int k = 0; k < n_particles; ++k) {
        std::vector<int> minor;
        for (int t = 0; t < n_particles; ++t)
          if (t != k) minor.push_back(orbitals[t]);
        auto [it, inserted] =
            subset_ids.insert({minor, static_cast<int>(subsets.size())});
        if (inserted) subsets.push_back(minor);
        terms[c].push_back({orbitals[k], it->second, k % 2 == 0 ? 1.0 : -1.0});
      }
    }
  }

  // Minor determinants at fixed inner coordinates; phi_cols[s] holds the
  // orbital values at y_{s+2}.
  void minor_determinants(const std::vector<const double*>& phi_cols,
                          std::vector<double>& out) const {
    const int d = n_particles - 1;
    out.resize(subsets.size());
    for (size_t s = 0; s < subsets.size(); ++s) {
      const auto& orb = subsets[s];
      if (d == 1) {
        out[s] = phi_cols[0][orb[0]];
      } else if (d == 2) {
        out[s] = phi_cols[0][orb[0]] * phi_cols[1][orb[1]] -
                 phi_cols[0][orb[1]] * phi_cols[1][orb[0]];
      } else {  // d == 3
        const double a = phi_cols[0][orb[0]], b = phi_cols[1][orb[0]],
                     c = phi_cols[2][orb[0]];
        const double e = phi_cols[0][orb[1]], f = phi_cols[1][orb[1]],
                     g = phi_cols[2][orb[1]];
        const double h = phi_cols[0][orb[2]], i = phi_cols[1][orb[2]],
                     j = phi_cols[2][orb[2]];
        out[s] = a * (f * j - g * i) - e * (b * j - c * i) +
                 h * (b * g - c * f);
      }
    }
  }

  // B_n(y) such that psi_F(x, y) = sum_n phi_n(x) B_n(y).
  void b_vector(const std::vector<double>& minors, Eigen::VectorXd& b) const {
    b.setZero(m);
    for (size_t c = 0; c < terms.size(); ++c) {
      const double a = amplitudes[c];
      if (a == 0.0) continue;
      for (const auto& t : terms[c])
        b[t.orbital] += a * t.sign * minors[t.subset];
    }
    b *= inv_sqrt_factorial;
  }
};

// Accumulates S S^T over all inner tensor-product points, with
// row(x_a) = |psi(x_a, y)| sqrt(w_y); `use_abs` switches between |psi|
// (kernel) and psi^2-style accumulation handled by the caller.
Eigen::MatrixXd accumulate_kernel(const FermionizedEvaluator& eval,
                                  const Eigen::MatrixXd& phi_outer,
                                  const QuadratureRule& inner) {
  const int d = eval.n_particles - 1;
  const int ni = static_cast<int>(inner.nodes.size());
  const int nouter = static_cast<int>(phi_outer.rows());

  Eigen::MatrixXd phi_inner(eval.m, ni);
  for (int a = 0; a < ni; ++a)
    phi_inner.col(a) = ho_eigenfunctions(eval.m, inner.nodes[a]);

  long total = 1;
  for (int s = 0; s < d; ++s) total *= ni;

  Eigen::MatrixXd kernel = Eigen::MatrixXd::Zero(nouter, nouter);
  std::vector<double> minors;
  Eigen::VectorXd b(eval.m), psi(nouter);
  std::vector<int> idx(d);
  std::vector<const double*> cols(d);

  // Batch the rank-1 updates through a block product.
  const int block = 256;
  Eigen::MatrixXd s_block(nouter, block);
  int filled = 0;

  for (long p = 0; p < total; ++p) {
    long rest = p;
    for (int s = d - 1; s >= 0; --s) {
      idx[s] = static_cast<int>(rest % ni);
      rest /= ni;
    }
    double w = 1.0;
    for (int s = 0; s < d; ++s) {
      w *= inner.weights[idx[s]];
      cols[s] = phi_inner.col(idx[s]).data();
    }
    eval.minor_determinants(cols, minors);
    eval.b_vector(minors, b);
    psi.noalias() = phi_outer * b;
    const double sw = std::sqrt(w);
    for (int a = 0; a < nouter; ++a)
      s_block(a, filled) = std::abs(psi[a]) * sw;
    if (++filled == block) {
      kernel.noalias() += s_block * s_block.transpose();
      filled = 0;
    }
  }
  if (filled > 0)
    kernel.noalias() +=
        s_block.leftCols(filled) * s_block.leftCols(filled).transpose();
  return kernel;
}

}  // namespace

ReducedDensityMatrix rdm_from_fermionized(const CIState& state,
                                          const FermionizedQuadrature& quad) {
  const int n_particles = state.space->n_particles();
  if (n_particles < 2 || n_particles > 4)
    throw std::invalid_argument("rdm_from_fermionized: N must be 2..4");
  double budget = 1.0;
  for (int s = 0; s < n_particles - 1; ++s) budget *= quad.inner_nodes;
  if (budget > (1 << 21))
    throw std::runtime_error(
        "rdm_from_fermionized: quadrature budget exceeded; reduce "
        "inner_nodes (<= 128 for N=4) or use the Monte Carlo fallback");

  const FermionizedEvaluator eval(state);
  const QuadratureRule outer =
      gauss_legendre(quad.outer_nodes, -quad.extent, quad.extent);
  const QuadratureRule inner =
      gauss_legendre(quad.inner_nodes, -quad.extent, quad.extent);

  Eigen::MatrixXd phi_outer(quad.outer_nodes, eval.m);
  for (int a = 0; a < quad.outer_nodes; ++a)
    phi_outer.row(a) = ho_eigenfunctions(eval.m, outer.nodes[a]).transpose();

  Eigen::MatrixXd kernel = accumulate_kernel(eval, phi_outer, inner);
  enforce_inversion(kernel);
  double trace = 0.0;
  for (int a = 0; a < quad.outer_nodes; ++a)
    trace += kernel(a, a) * outer.weights[a];
  kernel /= trace;
  return {ReducedDensityMatrix::Rep::Grid, kernel, outer.nodes,
          outer.weights};
}

MonteCarloRdm rdm_from_fermionized_mc(const CIState& state, double extent,
                                      int outer_nodes, long samples,
                                      uint64_t seed) {
  const FermionizedEvaluator eval(state);
  const int d = eval.n_particles - 1;
  const QuadratureRule outer = gauss_legendre(outer_nodes, -extent, extent);
  Eigen::MatrixXd phi_outer(outer_nodes, eval.m);
  for (int a = 0; a < outer_nodes; ++a)
    phi_outer.row(a) = ho_eigenfunctions(eval.m, outer.nodes[a]).transpose();

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-extent, extent);
  const double volume = std::pow(2.0 * extent, d);

  const int nblocks = 16;
  std::vector<Eigen::MatrixXd> block_kernels(
      nblocks, Eigen::MatrixXd::Zero(outer_nodes, outer_nodes));
  std::vector<double> minors;
  Eigen::VectorXd b(eval.m), psi(outer_nodes);
  std::vector<Eigen::VectorXd> phis(d);
  std::vector<const double*> cols(d);
  for (long s = 0; s < samples; ++s) {
    for (int t = 0; t < d; ++t) {
      phis[t] = ho_eigenfunctions(eval.m, uni(rng));
      cols[t] = phis[t].data();
    }
    eval.minor_determinants(cols, minors);
    eval.b_vector(minors, b);
    psi.noalias() = phi_outer * b;
    block_kernels[s % nblocks].noalias() +=
        psi.cwiseAbs() * psi.cwiseAbs().transpose();
  }

  auto finish = [&](const Eigen::MatrixXd& raw) {
    Eigen::MatrixXd k = raw;
    enforce_inversion(k);
    double trace = 0.0;
    for (int a = 0; a < outer_nodes; ++a) trace += k(a, a) * outer.weights[a];
    k /= trace;
    return k;
  };

  Eigen::MatrixXd total = Eigen::MatrixXd::Zero(outer_nodes, outer_nodes);
  for (const auto& bk : block_kernels) total += bk;
  total *= volume / samples;

  // Block spread of the entropy as the reported uncertainty.
  std::vector<double> entropies;
  for (const auto& bk : block_kernels) {
    ReducedDensityMatrix rdm{ReducedDensityMatrix::Rep::Grid, finish(bk),
                             outer.nodes, outer.weights};
    entropies.push_back(linear_entropy(natural_occupancies(rdm)));
  }
  double mean = 0.0;
  for (double e : entropies) mean += e;
  mean /= nblocks;
  double var = 0.0;
  for (double e : entropies) var += (e - mean) * (e - mean);
  var /= (nblocks - 1);

  MonteCarloRdm out{{ReducedDensityMatrix::Rep::Grid, finish(total),
                     outer.nodes, outer.weights},
                    std::sqrt(var / nblocks)};
  return out;
}

Eigen::VectorXd natural_occupancies(const ReducedDensityMatrix& rdm) {
  Eigen::MatrixXd sym;
  if (rdm.rep == ReducedDensityMatrix::Rep::Orbital) {
    sym = rdm.kernel;
  } else {
    const Eigen::VectorXd sqrtw = rdm.weights.cwiseSqrt();
    sym = sqrtw.asDiagonal() * rdm.kernel * sqrtw.asDiagonal();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym,
                                                    Eigen::EigenvaluesOnly);
  Eigen::VectorXd vals = es.eigenvalues().reverse();
  if (vals.minCoeff() < -1e-6)
    throw std::runtime_error(
        "natural_occupancies: significantly negative occupancy; upstream "
        "RDM is not positive semidefinite");
  return vals;
}

double purity(const Eigen::VectorXd& occupancies) {
  return occupancies.squaredNorm();
}

double linear_entropy(const Eigen::VectorXd& occupancies) {
  return 1.0 - purity(occupancies);
}

double kernel_purity(const ReducedDensityMatrix& rdm) {
  if (rdm.rep == ReducedDensityMatrix::Rep::Orbital)
    return (rdm.kernel * rdm.kernel).trace();
  check_grid_like(rdm);
  const Eigen::VectorXd& w = rdm.weights;
  return (w.asDiagonal() * rdm.kernel * w.asDiagonal() * rdm.kernel)
      .trace();
}

DensityProfile density_profile(const ReducedDensityMatrix& rdm) {
  check_grid_like(rdm);
  return {rdm.nodes, rdm.kernel.diagonal()};
}

DensityProfile density_profile(const CIState& state, int points,
                               double extent) {
  const ReducedDensityMatrix rdm = rdm_from_ci(state);
  const int m = static_cast<int>(rdm.kernel.rows());
  DensityProfile profile;
  profile.x.resize(points);
  profile.n.resize(points);
  for (int i = 0; i < points; ++i) {
    const double x = -extent + 2.0 * extent * i / (points - 1);
    const Eigen::VectorXd phi = ho_eigenfunctions(m, x);
    profile.x[i] = x;
    profile.n[i] = phi.dot(rdm.kernel * phi);
  }
  return profile;
}

DensityProfile fermionized_density(const CIState& state, int points,
                                   double extent,
                                   const FermionizedQuadrature& quad) {
  const FermionizedEvaluator eval(state);
  const QuadratureRule inner =
      gauss_legendre(quad.inner_nodes, -quad.extent, quad.extent);
  Eigen::MatrixXd phi_outer(points, eval.m);
  Eigen::VectorXd xs(points);
  for (int i = 0; i < points; ++i) {
    xs[i] = -extent + 2.0 * extent * i / (points - 1);
    phi_outer.row(i) = ho_eigenfunctions(eval.m, xs[i]).transpose();
  }
  Eigen::MatrixXd kernel = accumulate_kernel(eval, phi_outer, inner);
  Eigen::VectorXd n = kernel.diagonal();
  // Normalize by trapezoid and symmetrize in x.
  const double h = xs[1] - xs[0];
  double nrm = 0.0;
  for (int i = 0; i < points; ++i)
    nrm += n[i] * h * (i == 0 || i == points - 1 ? 0.5 : 1.0);
  n /= nrm;
  for (int i = 0; i < points / 2; ++i) {
    const double avg = 0.5 * (n[i] + n[points - 1 - i]);
    n[i] = n[points - 1 - i] = avg;
  }
  return {xs, n};
}

int count_local_maxima(const DensityProfile& profile, double floor) {
  const double threshold = profile.n.maxCoeff() * floor;
  int count = 0;
  const int np = static_cast<int>(profile.n.size());
  for (int i = 1; i + 1 < np; ++i) {
    if (profile.n[i] <= threshold) continue;
    if (profile.n[i] > profile.n[i - 1] && profile.n[i] > profile.n[i + 1])
      ++count;
  }
  return count;
}

}  // namespace q1d
