#include "q1d/basis.hpp"

#include <cmath>

namespace q1d {

std::vector<MoshinskyTerm> moshinsky_coefficients(int i, int j) {
  if (i < 0 || j < 0)
    throw std::invalid_argument("moshinsky_coefficients: negative index");
  // Build the coefficients by raising the vacuum with
  //   a1+ = (A+ + a+)/sqrt2,  a2+ = (A+ - a+)/sqrt2
  // one quantum at a time. Every intermediate vector is a row of a
  // unitary basis rotation (entries bounded by 1), so the recurrence is
  // stable where the closed-form alternating binomial sum loses all
  // precision beyond i + j of about 30.
  std::vector<double> c{1.0};  // indexed by N at total quanta q, K = q - N
  int q = 0;
  auto raise = [&](double rel_sign, int step) {
    std::vector<double> next(q + 2, 0.0);
    const double norm = 1.0 / std::sqrt(2.0 * step);
    for (int N = 0; N <= q; ++N) {
      if (c[N] == 0.0) continue;
      next[N + 1] += c[N] * std::sqrt(N + 1.0) * norm;
      next[N] += rel_sign * c[N] * std::sqrt(q - N + 1.0) * norm;
    }
    c = std::move(next);
    ++q;
  };
  for (int s = 1; s <= i; ++s) raise(1.0, s);
  for (int s = 1; s <= j; ++s) raise(-1.0, s);
  std::vector<MoshinskyTerm> terms;
  for (int N = 0; N <= q; ++N)
    if (c[N] != 0.0) terms.push_back({N, q - N, c[N]});
  return terms;
}

namespace {

// Relative-channel integrals of the effective kernel,
//   C[K][K'] = int phi_K(r) phi_K'(r) U(sqrt2 r; eps) dr,
// zero for K + K' odd. A tensor-product quadrature in (x1, x2) stalls on
// the kernel's |x1 - x2| kink; after the center-of-mass split the kink is
// a half-line integral of a smooth function and converges spectrally on
// a composite Gauss-Legendre grid refined around the kernel core.
Eigen::MatrixXd smooth_relative_table(int kmax, int nodes_per_panel,
                                      const EffectivePotential& potential) {
  const double eps = potential.epsilon();
  const double rmax = std::sqrt(2.0 * kmax + 1.0) + 8.0;
  std::vector<double> cuts{0.0};
  const double core = 1.0 / std::sqrt(eps);
  if (core < 1.0) cuts.push_back(core);
  for (double c : {1.0, 3.0})
    if (c < rmax) cuts.push_back(c);
  cuts.push_back(rmax);

  std::vector<double> r, w;
  for (size_t s = 0; s + 1 < cuts.size(); ++s) {
    const QuadratureRule panel =
        gauss_legendre(nodes_per_panel, cuts[s], cuts[s + 1]);
    for (int a = 0; a < nodes_per_panel; ++a) {
      r.push_back(panel.nodes[a]);
      w.push_back(panel.weights[a]);
    }
  }
  const int total = static_cast<int>(r.size());
  Eigen::MatrixXd phi(kmax + 1, total);
  Eigen::VectorXd f(total);
  for (int a = 0; a < total; ++a) {
    phi.col(a) = ho_eigenfunctions(kmax + 1, r[a]);
    f[a] = 2.0 * w[a] * potential(std::sqrt(2.0) * r[a]);
  }
  Eigen::MatrixXd table = phi * f.asDiagonal() * phi.transpose();
  // Exact even/odd selection and exact symmetry.
  for (int K = 0; K <= kmax; ++K)
    for (int Kp = 0; Kp <= kmax; ++Kp)
      if ((K + Kp) % 2 != 0) table(K, Kp) = 0.0;
  table = 0.5 * (table + table.transpose()).eval();
  return table;
}

// Moshinsky coefficients of (i, j) as a dense vector over the
// center-of-mass index N (the relative index is i + j - N).
Eigen::VectorXd moshinsky_by_com(int i, int j) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(i + j + 1);
  for (const auto& t : moshinsky_coefficients(i, j)) v[t.com] = t.coefficient;
  return v;
}

}  // namespace

TwoBodyTensor smooth_tensor(const OrbitalBasis& basis,
                            const EffectivePotential& potential) {
  const int m = basis.n_max;
  const int kmax = 2 * (m - 1);
  const Eigen::MatrixXd crel =
      smooth_relative_table(kmax, 3 * basis.quadrature_order, potential);

  std::vector<Eigen::VectorXd> mosh(m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) mosh[i * m + j] = moshinsky_by_com(i, j);

  // V[ijkl] = sum_N M^{ij}_{N, q1-N} M^{kl}_{N, q2-N} C[q1-N][q2-N].
  // The element depends only on the unordered pairs {i,k} (particle 1)
  // and {j,l} (particle 2) and is symmetric under swapping them; compute
  // one canonical representative and mirror for bit-exact symmetry.
  TwoBodyTensor tensor(TensorKind::Smooth, m, potential.epsilon(),
                       basis.quadrature_order);
  for (int i = 0; i < m; ++i)
    for (int k = i; k < m; ++k)
      for (int j = i; j < m; ++j)
        for (int l = j; l < m; ++l) {
          if ((i + j + k + l) % 2 != 0) continue;
          if (j == i && l < k) continue;
          const int q1 = i + j, q2 = k + l;
          const Eigen::VectorXd& m1 = mosh[i * m + j];
          const Eigen::VectorXd& m2 = mosh[k * m + l];
          double v = 0.0;
          for (int N = 0; N <= std::min(q1, q2); ++N)
            v += m1[N] * m2[N] * crel(q1 - N, q2 - N);
          tensor.at(i, j, k, l) = v;
          tensor.at(k, j, i, l) = v;
          tensor.at(i, l, k, j) = v;
          tensor.at(k, l, i, j) = v;
          tensor.at(j, i, l, k) = v;
          tensor.at(j, k, l, i) = v;
          tensor.at(l, i, j, k) = v;
          tensor.at(l, k, j, i) = v;
        }
  return tensor;
}

TwoBodyTensor antisymmetrized_coulomb_tensor(const OrbitalBasis& basis) {
  const int m = basis.n_max;
  if (m < 2)
    throw std::invalid_argument(
        "antisymmetrized_coulomb_tensor: n_max must be >= 2");
  const int kmax = 2 * (m - 1);  // largest relative quantum number

  // Relative Coulomb integrals C[K][K'] = int phi_K(r) phi_K'(r) / |r| dr
  // over odd K, K'. With u = r^2 the integrand becomes a polynomial in u
  // times e^{-u}, so Gauss-Laguerre is exact with enough nodes.
  const int nlag = kmax + 16;
  const QuadratureRule lag = gauss_laguerre(nlag);
  Eigen::MatrixXd crel = Eigen::MatrixXd::Zero(kmax + 1, kmax + 1);
  {
    Eigen::MatrixXd p(kmax + 1, nlag);
    for (int a = 0; a < nlag; ++a)
      p.col(a) = ho_polynomials(kmax + 1, std::sqrt(lag.nodes[a]));
    for (int K = 1; K <= kmax; K += 2)
      for (int Kp = K; Kp <= kmax; Kp += 2) {
        double s = 0.0;
        for (int a = 0; a < nlag; ++a)
          s += lag.weights[a] * p(K, a) * p(Kp, a) / lag.nodes[a];
        crel(K, Kp) = crel(Kp, K) = s;
      }
  }

  std::vector<std::vector<MoshinskyTerm>> mosh(m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) mosh[i * m + j] = moshinsky_coefficients(i, j);

  // Vt[ijkl] = sqrt(2) * sum over odd relative channels of
  //   M^{ij}_{NK} M^{kl}_{NK'} C[K][K'], sharing the center-of-mass index N.
  // The sqrt(2) combines the x -> r/sqrt2 kernel rescaling with the factor
  // 2 from the antisymmetrization (even channels cancel, odd ones double).
  TwoBodyTensor tensor(TensorKind::AntisymmetrizedCoulomb, m, 0.0,
                       basis.quadrature_order);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
          if ((i + j + k + l) % 2 != 0) continue;
          double v = 0.0;
          for (const auto& t1 : mosh[i * m + j]) {
            if (t1.rel % 2 == 0) continue;
            for (const auto& t2 : mosh[k * m + l]) {
              if (t2.rel % 2 == 0) continue;
              if (t1.com != t2.com) continue;
              v += t1.coefficient * t2.coefficient * crel(t1.rel, t2.rel);
            }
          }
          tensor.at(i, j, k, l) = std::sqrt(2.0) * v;
        }
  return tensor;
}

}  // namespace q1d
