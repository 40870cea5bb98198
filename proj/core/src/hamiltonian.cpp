#include "q1d/hamiltonian.hpp"

#include <cmath>
#include <unordered_map>

namespace q1d {

namespace {

Eigen::SparseMatrix<double> symmetrized(
    const Eigen::SparseMatrix<double>& h) {
  Eigen::SparseMatrix<double> ht = h.transpose();
  return 0.5 * (h + ht);
}

int parity_below(uint64_t mask, int orbital) {
  const uint64_t below = mask & ((uint64_t{1} << orbital) - 1);
  return (__builtin_popcountll(below) % 2 == 0) ? 1 : -1;
}

}  // namespace

Eigen::SparseMatrix<double> build_bosonic_hamiltonian(
    const TrapParams& params, const OrbitalBasis& basis,
    const TwoBodyTensor& tensor, const ConfigurationSpace& space) {
  if (params.anisotropy.is_strict_1d())
    throw std::invalid_argument(
        "build_bosonic_hamiltonian: requires finite anisotropy");
  if (tensor.kind() != TensorKind::Smooth ||
      tensor.epsilon() != params.anisotropy.epsilon() ||
      tensor.n_max() != basis.n_max)
    throw std::invalid_argument(
        "build_bosonic_hamiltonian: tensor does not match params/basis");
  if (space.statistics() != Statistics::Symmetric ||
      space.n_max() != basis.n_max ||
      space.n_particles() != params.n_particles)
    throw std::invalid_argument(
        "build_bosonic_hamiltonian: configuration space mismatch");

  const int m = basis.n_max;
  const int dim = space.dimension();
  const double g = params.g;
  const double shift = params.n_particles * params.anisotropy.epsilon();

  std::vector<Eigen::Triplet<double>> triplets;
  std::vector<uint8_t> occ2, occ4;
  for (int c = 0; c < dim; ++c) {
    const auto& occ = space.occupation(c);
    double diag = shift;
    for (int o = 0; o < m; ++o) diag += occ[o] * (o + 0.5);
    triplets.emplace_back(c, c, diag);
    if (g == 0.0) continue;

    // (g/2) sum_{ijkl} V[ijkl] a+_i a+_j a_l a_k applied to |occ>.
    for (int k = 0; k < m; ++k) {
      if (occ[k] == 0) continue;
      const double amp_k = std::sqrt(static_cast<double>(occ[k]));
      for (int l = 0; l < m; ++l) {
        const int nl = occ[l] - (l == k ? 1 : 0);
        if (nl <= 0) continue;
        const double amp_kl = amp_k * std::sqrt(static_cast<double>(nl));
        occ2 = occ;
        --occ2[k];
        --occ2[l];
        for (int j = 0; j < m; ++j) {
          const double amp_klj =
              amp_kl * std::sqrt(static_cast<double>(occ2[j] + 1));
          for (int i = 0; i < m; ++i) {
            if ((i + j + k + l) % 2 != 0) continue;  // parity selection
            const double v = tensor(i, j, k, l);
            if (v == 0.0) continue;
            occ4 = occ2;
            ++occ4[j];
            const double amp =
                amp_klj * std::sqrt(static_cast<double>(occ4[i] + 1));
            ++occ4[i];
            const int row = space.index_of(occ4);
            triplets.emplace_back(row, c, 0.5 * g * v * amp);
          }
        }
      }
    }
  }

  Eigen::SparseMatrix<double> h(dim, dim);
  h.setFromTriplets(triplets.begin(), triplets.end());
  return symmetrized(h);
}

Eigen::SparseMatrix<double> build_fermionized_hamiltonian(
    double g, const OrbitalBasis& basis, const TwoBodyTensor& tensor,
    const ConfigurationSpace& space) {
  if (tensor.kind() != TensorKind::AntisymmetrizedCoulomb ||
      tensor.n_max() != basis.n_max)
    throw std::invalid_argument(
        "build_fermionized_hamiltonian: tensor does not match basis");
  if (space.statistics() != Statistics::Antisymmetric ||
      space.n_max() != basis.n_max)
    throw std::invalid_argument(
        "build_fermionized_hamiltonian: configuration space mismatch");
  if (!(g >= 0.0))
    throw std::invalid_argument("build_fermionized_hamiltonian: g < 0");

  const int m = basis.n_max;
  const int dim = space.dimension();

  std::vector<uint64_t> masks(dim);
  std::unordered_map<uint64_t, int> index;
  index.reserve(dim * 2);
  for (int c = 0; c < dim; ++c) {
    uint64_t mask = 0;
    for (int o : space.orbitals(c)) mask |= uint64_t{1} << o;
    masks[c] = mask;
    index[mask] = c;
  }

  std::vector<Eigen::Triplet<double>> triplets;
  for (int c = 0; c < dim; ++c) {
    const uint64_t mask = masks[c];
    const auto orbitals = space.orbitals(c);
    double diag = 0.0;
    for (int o : orbitals) diag += o + 0.5;
    triplets.emplace_back(c, c, diag);
    if (g == 0.0) continue;

    // g sum_{i<j,k<l} Vt[ijkl] a+_i a+_j a_l a_k applied to |mask>.
    for (size_t ak = 0; ak < orbitals.size(); ++ak) {
      for (size_t al = ak + 1; al < orbitals.size(); ++al) {
        const int k = orbitals[ak];
        const int l = orbitals[al];
        int sign0 = parity_below(mask, k);
        const uint64_t m1 = mask & ~(uint64_t{1} << k);
        sign0 *= parity_below(m1, l);
        const uint64_t m2 = m1 & ~(uint64_t{1} << l);
        for (int j = 1; j < m; ++j) {
          if (m2 & (uint64_t{1} << j)) continue;
          const int sj = parity_below(m2, j);
          const uint64_t m3 = m2 | (uint64_t{1} << j);
          for (int i = 0; i < j; ++i) {
            if (m3 & (uint64_t{1} << i)) continue;
            if ((i + j + k + l) % 2 != 0) continue;
            const double v = tensor(i, j, k, l);
            if (v == 0.0) continue;
            const int sign = sign0 * sj * parity_below(m3, i);
            const uint64_t m4 = m3 | (uint64_t{1} << i);
            triplets.emplace_back(index.at(m4), c, g * v * sign);
          }
        }
      }
    }
  }

  Eigen::SparseMatrix<double> h(dim, dim);
  h.setFromTriplets(triplets.begin(), triplets.end());
  return symmetrized(h);
}

}  // namespace q1d
