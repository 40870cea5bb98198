#include "q1d/eigensolver.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include <Eigen/Dense>

namespace q1d {

namespace {

void fix_sign(Eigen::VectorXd& v) {
  int imax = 0;
  double best = 0.0;
  for (int i = 0; i < v.size(); ++i) {
    const double a = std::abs(v[i]);
    if (a > best) {
      best = a;
      imax = i;
    }
  }
  if (v[imax] < 0.0) v = -v;
}

double one_norm(const Eigen::SparseMatrix<double>& h) {
  double best = 0.0;
  for (int c = 0; c < h.outerSize(); ++c) {
    double s = 0.0;
    for (Eigen::SparseMatrix<double>::InnerIterator it(h, c); it; ++it)
      s += std::abs(it.value());
    best = std::max(best, s);
  }
  return best;
}

// Thick-restart Lanczos with explicit Rayleigh-Ritz projection: the
// subspace matrix is built column by column from exact inner products
// (not the three-term recurrence), so restarts keeping the best Ritz
// vectors need no extra bookkeeping and loss of orthogonality cannot
// corrupt the projected problem. Memory stays bounded by the cycle
// length regardless of how many iterations convergence takes.
GroundStateResult lanczos_lowest(const Eigen::SparseMatrix<double>& h,
                                 double tol) {
  const int dim = static_cast<int>(h.rows());
  const double hnorm = std::max(one_norm(h), 1e-300);
  const int cycle = std::min(dim, 250);
  const int keep = std::min(dim - 1, 20);
  const long max_matvecs = 40000;

  // Deterministic start vector with nonzero overlap in every symmetry
  // sector reachable from the standard basis.
  Eigen::VectorXd v(dim);
  for (int i = 0; i < dim; ++i) v[i] = 1.0 / (1.0 + i % 97) + 1e-3 * (i % 13);
  v.normalize();

  std::vector<Eigen::VectorXd> basis{v};
  Eigen::MatrixXd proj = Eigen::MatrixXd::Zero(cycle, cycle);
  double best_residual = std::numeric_limits<double>::infinity();
  double energy = 0.0;
  Eigen::VectorXd ritz;
  long matvecs = 0;

  while (true) {
    // Grow the subspace to the cycle length.
    bool invariant = false;
    while (static_cast<int>(basis.size()) < cycle) {
      const int j = static_cast<int>(basis.size()) - 1;
      Eigen::VectorXd w = h * basis[j];
      ++matvecs;
      for (int i = 0; i <= j; ++i) {
        const double c = basis[i].dot(w);
        proj(i, j) = proj(j, i) = c;
        w -= c * basis[i];
      }
      for (const auto& q : basis) w -= q.dot(w) * q;  // second pass
      const double wnorm = w.norm();
      if (wnorm < 1e-13 * hnorm) {
        invariant = true;  // exact invariant subspace reached
        break;
      }
      basis.push_back(w / wnorm);
    }

    const int m = static_cast<int>(basis.size());
    // Close the projection of the last vector.
    {
      const int j = m - 1;
      Eigen::VectorXd u = h * basis[j];
      ++matvecs;
      for (int i = 0; i <= j; ++i) proj(i, j) = proj(j, i) = basis[i].dot(u);
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(proj.topLeftCorner(m, m));
    energy = es.eigenvalues()[0];
    ritz = Eigen::VectorXd::Zero(dim);
    for (int i = 0; i < m; ++i) ritz += es.eigenvectors()(i, 0) * basis[i];
    ritz.normalize();
    Eigen::VectorXd resid = h * ritz - energy * ritz;
    ++matvecs;
    best_residual = std::min(best_residual, resid.norm());
    if (resid.norm() <= tol * hnorm || invariant || m >= dim) break;
    if (matvecs >= max_matvecs)
      throw solver_error("lanczos: no convergence within iteration budget",
                         best_residual);

    // Restart from the lowest Ritz vectors plus the current residual
    // direction.
    const int k = std::min(keep, m - 1);
    std::vector<Eigen::VectorXd> next(k, Eigen::VectorXd::Zero(dim));
    for (int c = 0; c < k; ++c)
      for (int i = 0; i < m; ++i) next[c] += es.eigenvectors()(i, c) * basis[i];
    basis = std::move(next);
    for (auto& q : basis) q.normalize();
    Eigen::VectorXd w = resid;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : basis) w -= q.dot(w) * q;
    proj.setZero();
    for (int c = 0; c < k; ++c) proj(c, c) = es.eigenvalues()[c];
    if (w.norm() > 1e-13 * hnorm) {
      basis.push_back(w.normalized());
      // Couplings of the appended direction are filled when its H-image
      // is computed on the next growth step; seed the known column now.
      const int j = k;
      Eigen::VectorXd u = h * basis[j];
      ++matvecs;
      for (int i = 0; i <= j; ++i) proj(i, j) = proj(j, i) = basis[i].dot(u);
      Eigen::VectorXd w2 = u;
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& q : basis) w2 -= q.dot(w2) * q;
      if (w2.norm() > 1e-13 * hnorm) basis.push_back(w2.normalized());
    }
  }

  fix_sign(ritz);
  return {energy, ritz, best_residual};
}

}  // namespace

GroundStateResult ground_state(const Eigen::SparseMatrix<double>& h,
                               double tol, int dense_threshold) {
  if (h.rows() != h.cols())
    throw std::invalid_argument("ground_state: matrix not square");
  const int dim = static_cast<int>(h.rows());
  if (dim <= dense_threshold) {
    Eigen::MatrixXd dense(h);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense);
    GroundStateResult r;
    r.energy = es.eigenvalues()[0];
    r.vector = es.eigenvectors().col(0);
    r.vector.normalize();
    fix_sign(r.vector);
    r.residual = (h * r.vector - r.energy * r.vector).norm();
    return r;
  }
  return lanczos_lowest(h, tol);
}

}  // namespace q1d
