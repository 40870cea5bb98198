#pragma once

#include <Eigen/Dense>

namespace q1d {

/// Scaled complementary error function e^{t^2} erfc(t).
/// Accurate to better than 1e-13 relative for t in [0, 1e6]; never
/// overflows for t >= 0.
double erfcx(double t);

struct QuadratureRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// Gauss-Hermite rule: sum_i w_i f(x_i) ~ int f(x) e^{-x^2} dx.
QuadratureRule gauss_hermite(int order);

/// Gauss-Hermite rule with the weight function divided out:
/// sum_i w_i f(x_i) ~ int f(x) dx for f of the form (poly) * e^{-x^2}.
QuadratureRule gauss_hermite_total(int order);

/// Gauss-Legendre rule on [a, b].
QuadratureRule gauss_legendre(int order, double a, double b);

/// Gauss-Laguerre rule: sum_i w_i f(u_i) ~ int_0^inf f(u) e^{-u} du.
QuadratureRule gauss_laguerre(int order);

/// Normalized harmonic-oscillator eigenfunction (unit mass and frequency).
double ho_eigenfunction(int n, double x);

/// Values of all oscillator eigenfunctions 0..count-1 at x.
Eigen::VectorXd ho_eigenfunctions(int count, double x);

/// Polynomial parts p_n(x) = phi_n(x) e^{x^2/2} for n = 0..count-1.
/// Stable for moderate x; used where the Gaussian is carried by a
/// quadrature weight instead.
Eigen::VectorXd ho_polynomials(int count, double x);

/// n! as a double, n <= 170.
double factorial(int n);

}  // namespace q1d
