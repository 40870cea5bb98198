#pragma once

#include <stdexcept>

namespace q1d {

/// Transverse-to-longitudinal trap frequency ratio. Either a finite value
/// epsilon > 0 or the strict 1D limit (epsilon -> infinity), which selects
/// a different interaction kernel and solver path downstream.
class Anisotropy {
 public:
  static Anisotropy finite(double epsilon) {
    if (!(epsilon > 0.0))
      throw std::invalid_argument("Anisotropy: epsilon must be > 0");
    return Anisotropy(epsilon);
  }
  static Anisotropy strict_1d() { return Anisotropy(); }

  bool is_strict_1d() const { return strict_; }
  double epsilon() const {
    if (strict_)
      throw std::logic_error("Anisotropy: epsilon() in the strict 1D limit");
    return epsilon_;
  }

  bool operator==(const Anisotropy& o) const {
    return strict_ == o.strict_ && (strict_ || epsilon_ == o.epsilon_);
  }

 private:
  Anisotropy() : strict_(true), epsilon_(0.0) {}
  explicit Anisotropy(double eps) : strict_(false), epsilon_(eps) {}
  bool strict_;
  double epsilon_;
};

/// Physical control parameters of one run point, in trap units
/// (lengths in sqrt(hbar/(m omega_x)), energies in hbar omega_x).
struct TrapParams {
  int n_particles;
  double g;
  Anisotropy anisotropy;

  TrapParams(int n, double coupling, Anisotropy aniso)
      : n_particles(n), g(coupling), anisotropy(aniso) {
    if (n < 2 || n > 4)
      throw std::invalid_argument("TrapParams: n_particles must be in [2,4]");
    if (!(coupling >= 0.0))
      throw std::invalid_argument("TrapParams: g must be >= 0");
  }
};

/// Gaussian ground mode of the transverse oscillator,
/// phi(z) = (eps/pi)^{1/4} exp(-eps z^2 / 2).
double transverse_mode(double z, double epsilon);

/// Transverse-averaged Coulomb interaction per unit g,
///   U(x; eps) = sqrt(eps pi / 2) erfcx(sqrt(eps/2) |x|),
/// finite at x = 0 and -> 1/|x| at large separation.
double effective_interaction(double x, double epsilon);

/// The same interaction bound to a fixed anisotropy.
class EffectivePotential {
 public:
  explicit EffectivePotential(double epsilon) : epsilon_(epsilon) {
    if (!(epsilon > 0.0))
      throw std::invalid_argument("EffectivePotential: epsilon must be > 0");
  }
  double operator()(double x) const {
    return effective_interaction(x, epsilon_);
  }
  double epsilon() const { return epsilon_; }

 private:
  double epsilon_;
};

}  // namespace q1d
