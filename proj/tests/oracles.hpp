// Independent numerical oracles used by the test suites. Everything here
// is deliberately implemented with different numerics than the library
// under test (adaptive Simpson instead of Gaussian quadrature, finite
// differences instead of basis expansions).
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace oracle {

// Adaptive Simpson quadrature with absolute tolerance.
inline double simpson_step(const std::function<double(double)>& f, double a,
                           double b, double fa, double fm, double fb,
                           double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0) return left + right;
  if (std::abs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a,
                        double b, double tol = 1e-11, int depth = 40) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, a, b, fa, fm, fb, whole, tol, depth);
}

// Defining transverse average of the Coulomb kernel: the relative
// transverse coordinate of two particles in the Gaussian ground mode is
// itself Gaussian (2D, variance 1/eps per axis), so
//   U(x) = int_0^inf eps s e^{-eps s^2 / 2} / sqrt(x^2 + s^2) ds.
inline double transverse_averaged_coulomb(double x, double eps) {
  const double smax = 12.0 / std::sqrt(eps) + std::abs(x);
  auto f = [&](double s) {
    if (s == 0.0) return x == 0.0 ? eps : 0.0;  // removable 0/0 at origin
    return eps * s * std::exp(-0.5 * eps * s * s) /
           std::sqrt(x * x + s * s);
  };
  // Split at the turnover scale s = |x| so the coarse first samples of the
  // adaptive rule cannot step over the peaked region.
  const double cut = std::min(std::abs(x), 0.5 * smax);
  if (cut > 0.0)
    return integrate(f, 0.0, cut, 5e-13) + integrate(f, cut, smax, 5e-13);
  return integrate(f, 0.0, smax, 1e-12);
}

// Lowest eigenvalue of -1/2 u'' + V(r) u on [a, b] with Dirichlet ends,
// second-order finite differences plus Richardson extrapolation. The
// tridiagonal eigenvalue is found by Sturm-sequence bisection, so large
// grids stay cheap.
inline double fd_ground_energy(const std::function<double(double)>& V,
                               double a, double b, int n) {
  auto solve = [&](int m) {
    const double h = (b - a) / (m + 1);
    std::vector<double> diag(m);
    const double off = -0.5 / (h * h);
    double lo = 1e300, hi = -1e300;
    for (int i = 0; i < m; ++i) {
      diag[i] = 1.0 / (h * h) + V(a + (i + 1) * h);
      lo = std::min(lo, diag[i] - 2.0 * std::abs(off));
      hi = std::max(hi, diag[i] + 2.0 * std::abs(off));
    }
    // Count of eigenvalues below lambda via the LDL^T sign sequence.
    auto count_below = [&](double lambda) {
      int count = 0;
      double d = 1.0;
      for (int i = 0; i < m; ++i) {
        d = diag[i] - lambda - (i ? off * off / d : 0.0);
        if (d == 0.0) d = 1e-300;
        if (d < 0.0) ++count;
      }
      return count;
    };
    for (int it = 0; it < 200 && hi - lo > 1e-13 * (1.0 + std::abs(lo));
         ++it) {
      const double mid = 0.5 * (lo + hi);
      (count_below(mid) >= 1 ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
  };
  const double coarse = solve(n);
  const double fine = solve(2 * n + 1);  // nested grid
  return fine + (fine - coarse) / 3.0;
}

}  // namespace oracle
