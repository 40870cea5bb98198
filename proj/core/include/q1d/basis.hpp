#pragma once

#include <vector>

#include <Eigen/Dense>

#include "q1d/model.hpp"
#include "q1d/special.hpp"

namespace q1d {

/// Truncated harmonic-oscillator single-particle basis (unit mass and
/// frequency after scaling) plus the Gauss-Hermite order used for matrix
/// elements.
struct OrbitalBasis {
  int n_max;
  int quadrature_order;

  explicit OrbitalBasis(int n_max_, int quadrature_order_ = 0)
      : n_max(n_max_),
        quadrature_order(quadrature_order_ > 0 ? quadrature_order_
                                               : default_quadrature(n_max_)) {
    if (n_max < 1) throw std::invalid_argument("OrbitalBasis: n_max < 1");
    if (quadrature_order < 2 * n_max + 16)
      throw std::invalid_argument(
          "OrbitalBasis: quadrature_order must be >= 2*n_max + 16");
  }

  static int default_quadrature(int n_max) { return 2 * n_max + 32; }
};

enum class TensorKind { Smooth, AntisymmetrizedCoulomb };

/// Dense 4-index two-body matrix elements V[i][j][k][l] with i,k attached
/// to particle 1 and j,l to particle 2.
class TwoBodyTensor {
 public:
  TwoBodyTensor(TensorKind kind, int n_max, double epsilon,
                int quadrature_order)
      : kind_(kind), n_max_(n_max), epsilon_(epsilon),
        quadrature_order_(quadrature_order),
        data_(static_cast<size_t>(n_max) * n_max * n_max * n_max, 0.0) {}

  double operator()(int i, int j, int k, int l) const {
    return data_[idx(i, j, k, l)];
  }
  double& at(int i, int j, int k, int l) { return data_[idx(i, j, k, l)]; }

  TensorKind kind() const { return kind_; }
  int n_max() const { return n_max_; }
  /// Anisotropy the tensor was built with; 0 for the Coulomb kind.
  double epsilon() const { return epsilon_; }
  int quadrature_order() const { return quadrature_order_; }
  const std::vector<double>& raw() const { return data_; }
  std::vector<double>& raw() { return data_; }

 private:
  size_t idx(int i, int j, int k, int l) const {
    return ((static_cast<size_t>(i) * n_max_ + j) * n_max_ + k) * n_max_ + l;
  }
  TensorKind kind_;
  int n_max_;
  double epsilon_;
  int quadrature_order_;
  std::vector<double> data_;
};

/// V[i][j][k][l] = int phi_i(x1) phi_j(x2) U(x1-x2) phi_k(x1) phi_l(x2),
/// by tensor-product Gauss-Hermite quadrature. All 8-fold real-kernel
/// symmetries hold exactly by construction.
TwoBodyTensor smooth_tensor(const OrbitalBasis& basis,
                            const EffectivePotential& potential);

/// Antisymmetrized matrix elements of the bare Coulomb kernel 1/|x1-x2|,
/// Vt[i][j][k][l] = V[ijkl] - V[ijlk], evaluated through the
/// center-of-mass/relative expansion restricted to odd relative channels,
/// where every integral is finite.
TwoBodyTensor antisymmetrized_coulomb_tensor(const OrbitalBasis& basis);

struct MoshinskyTerm {
  int com;   // center-of-mass quantum number N
  int rel;   // relative quantum number K, with N + K = i + j
  double coefficient;
};

/// Exact expansion phi_i(x1) phi_j(x2) =
///   sum M_{NK} Phi_N((x1+x2)/sqrt2) phi_K((x1-x2)/sqrt2).
std::vector<MoshinskyTerm> moshinsky_coefficients(int i, int j);

}  // namespace q1d
