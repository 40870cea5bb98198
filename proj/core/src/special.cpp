#include "q1d/special.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace q1d {

double erfcx(double t) {
  if (std::isnan(t)) return t;
  if (t < 0.0) {
    // Only small negative arguments are meaningful here; the reflection
    // overflows for t << -26 just like exp(t^2) does.
    return 2.0 * std::exp(t * t) - erfcx(-t);
  }
  if (t < 12.0) {
    // exp(t^2) stays below ~3.5e62 and erfc(t) above ~1.4e-64: the direct
    // product is safe and accurate in this range.
    return std::exp(t * t) * std::erfc(t);
  }
  // Laplace continued fraction, evaluated backward.
  //   sqrt(pi) erfcx(t) = 1/(t + (1/2)/(t + (2/2)/(t + (3/2)/(t + ...))))
  double f = 0.0;
  for (int n = 40; n >= 1; --n) f = (0.5 * n) / (t + f);
  return (1.0 / std::sqrt(M_PI)) / (t + f);
}

namespace {

// Golub-Welsch: nodes are eigenvalues of the Jacobi matrix, weights are
// mu0 * (first eigenvector component)^2.
QuadratureRule golub_welsch(const Eigen::VectorXd& diag,
                            const Eigen::VectorXd& subdiag, double mu0) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, subdiag);
  QuadratureRule rule;
  rule.nodes = es.eigenvalues();
  const int n = static_cast<int>(diag.size());
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    const double v0 = es.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v0 * v0;
  }
  return rule;
}

// Enforce exact +/- symmetry of a rule whose measure is even.
void symmetrize(QuadratureRule& rule) {
  const int n = static_cast<int>(rule.nodes.size());
  for (int i = 0; i < n / 2; ++i) {
    const int j = n - 1 - i;
    const double x = 0.5 * (rule.nodes[j] - rule.nodes[i]);
    const double w = 0.5 * (rule.weights[i] + rule.weights[j]);
    rule.nodes[i] = -x;
    rule.nodes[j] = x;
    rule.weights[i] = rule.weights[j] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
}

}  // namespace

QuadratureRule gauss_hermite(int order) {
  QuadratureRule rule = gauss_hermite_total(order);
  for (int i = 0; i < order; ++i)
    rule.weights[i] *= std::exp(-rule.nodes[i] * rule.nodes[i]);
  return rule;
}

QuadratureRule gauss_hermite_total(int order) {
  if (order < 1) throw std::invalid_argument("gauss_hermite: order < 1");
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(order);
  Eigen::VectorXd sub(order - 1 > 0 ? order - 1 : 0);
  for (int k = 1; k < order; ++k) sub[k - 1] = std::sqrt(0.5 * k);
  QuadratureRule rule = golub_welsch(diag, sub, std::sqrt(M_PI));
  symmetrize(rule);
  // The eigenvector-based weights at the outermost nodes are products of
  // components far below machine noise; recompute every weight from the
  // Christoffel function, 1/sum_k phi_k(x_i)^2, whose terms are all O(1).
  // This is the e^{x^2}-weighted ("total") form directly.
  for (int i = 0; i < order; ++i) {
    const Eigen::VectorXd phi = ho_eigenfunctions(order, rule.nodes[i]);
    rule.weights[i] = 1.0 / phi.squaredNorm();
  }
  return rule;
}

QuadratureRule gauss_legendre(int order, double a, double b) {
  if (order < 1) throw std::invalid_argument("gauss_legendre: order < 1");
  if (!(b > a)) throw std::invalid_argument("gauss_legendre: empty interval");
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(order);
  Eigen::VectorXd sub(order - 1 > 0 ? order - 1 : 0);
  for (int k = 1; k < order; ++k) sub[k - 1] = k / std::sqrt(4.0 * k * k - 1.0);
  QuadratureRule rule = golub_welsch(diag, sub, 2.0);
  symmetrize(rule);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  for (int i = 0; i < order; ++i) {
    rule.nodes[i] = mid + half * rule.nodes[i];
    rule.weights[i] *= half;
  }
  return rule;
}

QuadratureRule gauss_laguerre(int order) {
  if (order < 1) throw std::invalid_argument("gauss_laguerre: order < 1");
  Eigen::VectorXd diag(order);
  Eigen::VectorXd sub(order - 1 > 0 ? order - 1 : 0);
  for (int k = 0; k < order; ++k) diag[k] = 2.0 * k + 1.0;
  for (int k = 1; k < order; ++k) sub[k - 1] = static_cast<double>(k);
  QuadratureRule rule = golub_welsch(diag, sub, 1.0);
  // Same Christoffel-function rescue as for the Hermite rule: Laguerre
  // polynomials are orthonormal under e^{-x} as-is.
  for (int i = 0; i < order; ++i) {
    const double x = rule.nodes[i];
    double lm = 0.0, l = 1.0, s = 1.0;
    for (int k = 0; k + 1 < order; ++k) {
      const double ln = ((2.0 * k + 1.0 - x) * l - k * lm) / (k + 1.0);
      lm = l;
      l = ln;
      s += l * l;
    }
    rule.weights[i] = 1.0 / s;
  }
  return rule;
}

Eigen::VectorXd ho_eigenfunctions(int count, double x) {
  Eigen::VectorXd out(count);
  if (count <= 0) return out;
  const double g = std::pow(M_PI, -0.25) * std::exp(-0.5 * x * x);
  out[0] = g;
  if (count > 1) out[1] = std::sqrt(2.0) * x * g;
  for (int n = 2; n < count; ++n)
    out[n] = x * std::sqrt(2.0 / n) * out[n - 1] -
             std::sqrt((n - 1.0) / n) * out[n - 2];
  return out;
}

double ho_eigenfunction(int n, double x) {
  if (n < 0) throw std::invalid_argument("ho_eigenfunction: n < 0");
  return ho_eigenfunctions(n + 1, x)[n];
}

Eigen::VectorXd ho_polynomials(int count, double x) {
  Eigen::VectorXd out(count);
  if (count <= 0) return out;
  out[0] = std::pow(M_PI, -0.25);
  if (count > 1) out[1] = std::sqrt(2.0) * x * out[0];
  for (int n = 2; n < count; ++n)
    out[n] = x * std::sqrt(2.0 / n) * out[n - 1] -
             std::sqrt((n - 1.0) / n) * out[n - 2];
  return out;
}

double factorial(int n) {
  static const auto table = [] {
    std::array<double, 171> t{};
    t[0] = 1.0;
    for (int i = 1; i <= 170; ++i) t[i] = t[i - 1] * i;
    return t;
  }();
  if (n < 0 || n > 170) throw std::invalid_argument("factorial: out of range");
  return table[n];
}

}  // namespace q1d
