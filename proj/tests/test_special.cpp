#include <cmath>

#include <doctest.h>

#include <q1d/special.hpp>

#include "oracles.hpp"

using namespace q1d;

TEST_CASE("erfcx matches std::erfc where the latter is representable") {
  for (double t : {0.0, 1e-8, 0.1, 0.5, 1.0, 2.0, 5.0, 11.9, 12.1, 20.0}) {
    const double expected = std::exp(t * t) * std::erfc(t);
    CHECK(erfcx(t) == doctest::Approx(expected).epsilon(1e-13));
  }
}

TEST_CASE("erfcx asymptotic tail and overflow safety") {
  // 1/(sqrt(pi) t) (1 - 1/(2t^2)) < erfcx(t) < 1/(sqrt(pi) t) for t > 0.
  for (double t : {50.0, 1e3, 1e6, 1e12}) {
    const double upper = 1.0 / (std::sqrt(M_PI) * t);
    CHECK(erfcx(t) < upper);
    CHECK(erfcx(t) >= upper * (1.0 - 0.5 / (t * t)) * (1.0 - 4e-16));
    CHECK(std::isfinite(erfcx(t)));
  }
  // Continuity across the algorithm switch near t = 12: the difference is
  // bounded by the local slope (|erfcx'| < 0.01 there) times the gap.
  const double below = erfcx(12.0 - 1e-9);
  const double above = erfcx(12.0 + 1e-9);
  CHECK(std::abs(below - above) < 0.01 * 2e-9 + 1e-12 * below);
}

TEST_CASE("gauss_hermite integrates even moments exactly") {
  const QuadratureRule rule = gauss_hermite(20);
  // int x^{2k} e^{-x^2} dx = Gamma(k + 1/2).
  double expected = std::sqrt(M_PI);
  for (int k = 0; k <= 8; ++k) {
    double sum = 0.0;
    for (int i = 0; i < rule.nodes.size(); ++i)
      sum += rule.weights[i] * std::pow(rule.nodes[i], 2 * k);
    CHECK(sum == doctest::Approx(expected).epsilon(1e-12));
    expected *= k + 0.5;
  }
}

TEST_CASE("gauss_hermite_total integrates Gaussian-enveloped polynomials") {
  const QuadratureRule rule = gauss_hermite_total(24);
  double expected = std::sqrt(M_PI);
  for (int k = 0; k <= 8; ++k) {
    double sum = 0.0;
    for (int i = 0; i < rule.nodes.size(); ++i)
      sum += rule.weights[i] *
             std::pow(rule.nodes[i], 2 * k) *
             std::exp(-rule.nodes[i] * rule.nodes[i]);
    CHECK(sum == doctest::Approx(expected).epsilon(1e-12));
    expected *= k + 0.5;
  }
}

TEST_CASE("high-order Hermite weights stay accurate at extreme nodes") {
  // Eigenvector-squared (Golub-Welsch) weights underflow to noise at the
  // outermost nodes of large rules; orthonormality of the highest modes
  // is the sharpest detector of that failure.
  const int order = 96;
  const QuadratureRule rule = gauss_hermite_total(order);
  for (int a : {90, 93, 95})
    for (int b : {90, 95}) {
      double sum = 0.0;
      for (int i = 0; i < rule.nodes.size(); ++i) {
        const Eigen::VectorXd phi = ho_eigenfunctions(order, rule.nodes[i]);
        sum += rule.weights[i] * phi[a] * phi[b];
      }
      CHECK(sum == doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-9));
    }
}

TEST_CASE("gauss_legendre on a shifted interval") {
  const QuadratureRule rule = gauss_legendre(12, 0.5, 2.5);
  for (int k = 0; k <= 10; ++k) {
    double sum = 0.0;
    for (int i = 0; i < rule.nodes.size(); ++i)
      sum += rule.weights[i] * std::pow(rule.nodes[i], k);
    const double expected =
        (std::pow(2.5, k + 1) - std::pow(0.5, k + 1)) / (k + 1);
    CHECK(sum == doctest::Approx(expected).epsilon(1e-13));
  }
}

TEST_CASE("gauss_laguerre moments and high-order orthonormality") {
  const QuadratureRule rule = gauss_laguerre(16);
  double expected = 1.0;
  for (int k = 0; k <= 10; ++k) {
    double sum = 0.0;
    for (int i = 0; i < rule.nodes.size(); ++i)
      sum += rule.weights[i] * std::pow(rule.nodes[i], k);
    CHECK(sum == doctest::Approx(expected).epsilon(1e-11));
    expected *= k + 1;  // int x^k e^{-x} = k!
  }

  // Plain Laguerre polynomials are orthonormal under e^{-x}; the highest
  // pair probes the rescued weights at the large-x nodes.
  const int order = 64;
  const QuadratureRule big = gauss_laguerre(order);
  auto laguerre = [&](int n, double x) {
    double lm = 1.0, l = 1.0 - x;
    if (n == 0) return lm;
    for (int k = 1; k < n; ++k) {
      const double next = ((2.0 * k + 1.0 - x) * l - k * lm) / (k + 1);
      lm = l;
      l = next;
    }
    return l;
  };
  for (int a : {60, 62})
    for (int b : {60, 63}) {
      double sum = 0.0;
      for (int i = 0; i < big.nodes.size(); ++i)
        sum += big.weights[i] * laguerre(a, big.nodes[i]) *
               laguerre(b, big.nodes[i]);
      CHECK(sum == doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-8));
    }
}

TEST_CASE("oscillator eigenfunctions: values, norm, recursion consistency") {
  CHECK(ho_eigenfunction(0, 0.0) ==
        doctest::Approx(std::pow(M_PI, -0.25)).epsilon(1e-14));
  CHECK(ho_eigenfunction(1, 0.0) == doctest::Approx(0.0));
  // Unit L2 norm via the independent adaptive integrator.
  for (int n : {0, 3, 10, 25}) {
    const double nrm = oracle::integrate(
        [&](double x) {
          const double p = ho_eigenfunction(n, x);
          return p * p;
        },
        -12.0, 12.0, 1e-12);
    CHECK(nrm == doctest::Approx(1.0).epsilon(1e-10));
  }
  // Vector evaluation agrees with the scalar one.
  const Eigen::VectorXd phi = ho_eigenfunctions(12, 0.7);
  for (int n = 0; n < 12; ++n)
    CHECK(phi[n] == doctest::Approx(ho_eigenfunction(n, 0.7)).epsilon(1e-14));
  // Polynomial parts carry the stripped Gaussian.
  const Eigen::VectorXd poly = ho_polynomials(12, 0.7);
  for (int n = 0; n < 12; ++n)
    CHECK(poly[n] * std::exp(-0.5 * 0.7 * 0.7) ==
          doctest::Approx(phi[n]).epsilon(1e-13));
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1.0);
  CHECK(factorial(5) == 120.0);
  CHECK(factorial(20) == doctest::Approx(2432902008176640000.0));
  CHECK(std::isfinite(factorial(170)));
}
