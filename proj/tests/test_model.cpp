#include <cmath>
#include <random>

#include <doctest.h>

#include <q1d/model.hpp>

#include "oracles.hpp"

using namespace q1d;

TEST_CASE("effective interaction at contact: U(0) = sqrt(eps pi / 2)") {
  for (double eps : {1.0, 5.0, 30.0, 100.0, 1e4})
    CHECK(effective_interaction(0.0, eps) ==
          doctest::Approx(std::sqrt(eps * M_PI / 2.0)).epsilon(1e-12));
}

TEST_CASE("effective interaction scaling identity") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ux(-8.0, 8.0);
  std::uniform_real_distribution<double> ue(0.5, 200.0);
  for (int i = 0; i < 100; ++i) {
    const double x = ux(rng);
    const double eps = ue(rng);
    const double lhs = effective_interaction(x, eps);
    const double rhs =
        std::sqrt(eps) * effective_interaction(std::sqrt(eps) * x, 1.0);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("effective interaction equals the defining transverse average") {
  for (double eps : {2.0, 30.0, 100.0})
    for (double x : {0.0, 0.05, 0.3, 1.0, 4.0}) {
      const double expected = oracle::transverse_averaged_coulomb(x, eps);
      CHECK(effective_interaction(x, eps) ==
            doctest::Approx(expected).epsilon(1e-8));
    }
}

TEST_CASE("effective interaction shape: monotone, Coulombic tail") {
  const double eps = 30.0;
  double prev = effective_interaction(0.0, eps);
  for (double x = 0.1; x <= 8.0; x += 0.1) {
    const double u = effective_interaction(x, eps);
    CHECK(u < prev);
    CHECK(u > 0.0);
    prev = u;
  }
  for (double x : {5.0, 20.0, 100.0}) {
    // Asymptotically Coulombic from below: the transverse spread only
    // increases the separation, U = (1/x)(1 - 1/(eps x^2) + ...).
    const double u = effective_interaction(x, eps);
    CHECK(u < 1.0 / x);
    CHECK(u > (1.0 / x) * (1.0 - 1.0 / (eps * x * x)));
  }
  // Symmetric in x.
  CHECK(effective_interaction(-1.3, eps) ==
        effective_interaction(1.3, eps));
}

TEST_CASE("transverse mode is the normalized oscillator ground state") {
  const double eps = 12.0;
  CHECK(transverse_mode(0.0, eps) ==
        doctest::Approx(std::pow(eps / M_PI, 0.25)).epsilon(1e-13));
  const double nrm = oracle::integrate(
      [&](double z) {
        const double p = transverse_mode(z, eps);
        return p * p;
      },
      -4.0, 4.0, 1e-12);
  CHECK(nrm == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(Anisotropy::finite(0.0), std::invalid_argument);
  CHECK_THROWS_AS(Anisotropy::finite(-3.0), std::invalid_argument);
  CHECK_THROWS_AS(Anisotropy::strict_1d().epsilon(), std::logic_error);
  CHECK(Anisotropy::strict_1d().is_strict_1d());
  CHECK(Anisotropy::finite(5.0).epsilon() == 5.0);
  CHECK(Anisotropy::finite(5.0) == Anisotropy::finite(5.0));
  CHECK(!(Anisotropy::finite(5.0) == Anisotropy::strict_1d()));

  CHECK_THROWS_AS(TrapParams(1, 1.0, Anisotropy::finite(5.0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(TrapParams(5, 1.0, Anisotropy::finite(5.0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(TrapParams(2, -1.0, Anisotropy::finite(5.0)),
                  std::invalid_argument);
  CHECK(TrapParams(2, 0.0, Anisotropy::strict_1d()).g == 0.0);

  CHECK_THROWS_AS(EffectivePotential(0.0), std::invalid_argument);
}
