#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Sparse>

namespace q1d {

class solver_error : public std::runtime_error {
 public:
  solver_error(const std::string& what, double best_residual)
      : std::runtime_error(what), best_residual_(best_residual) {}
  double best_residual() const { return best_residual_; }

 private:
  double best_residual_;
};

struct GroundStateResult {
  double energy;
  Eigen::VectorXd vector;  // unit norm, largest-|entry| component positive
  double residual;         // ||Hv - Ev||
};

/// Lowest eigenpair of a real symmetric matrix. Dense diagonalization for
/// dimensions up to `dense_threshold`, Lanczos with full
/// reorthogonalization above it. Throws solver_error on non-convergence.
GroundStateResult ground_state(const Eigen::SparseMatrix<double>& h,
                               double tol = 1e-10,
                               int dense_threshold = 2000);

}  // namespace q1d
