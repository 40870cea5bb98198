#include "q1d/config_space.hpp"

#include <stdexcept>

namespace q1d {

namespace {

void enumerate(std::vector<uint8_t>& occ, int orbital, int remaining,
               int max_per_orbital,
               std::vector<std::vector<uint8_t>>& out) {
  const int n_max = static_cast<int>(occ.size());
  if (orbital == n_max) {
    if (remaining == 0) out.push_back(occ);
    return;
  }
  const int cap = std::min(remaining, max_per_orbital);
  // Descending first occupation gives lexicographically decreasing order;
  // we want plain lexicographic ascending, so start from 0.
  for (int n = 0; n <= cap; ++n) {
    occ[orbital] = static_cast<uint8_t>(n);
    enumerate(occ, orbital + 1, remaining - n, max_per_orbital, out);
  }
  occ[orbital] = 0;
}

}  // namespace

ConfigurationSpace::ConfigurationSpace(Statistics s, int n_max,
                                       int n_particles)
    : statistics_(s), n_max_(n_max), n_particles_(n_particles) {
  if (n_max < 1) throw std::invalid_argument("ConfigurationSpace: n_max < 1");
  if (n_particles < 1)
    throw std::invalid_argument("ConfigurationSpace: n_particles < 1");
  if (s == Statistics::Antisymmetric && n_max < n_particles)
    throw std::invalid_argument(
        "ConfigurationSpace: antisymmetric space needs n_max >= N");
  std::vector<uint8_t> occ(n_max, 0);
  const int cap = (s == Statistics::Antisymmetric) ? 1 : n_particles;
  enumerate(occ, 0, n_particles, cap, occupations_);
  for (int i = 0; i < static_cast<int>(occupations_.size()); ++i)
    index_[occupations_[i]] = i;
}

ConfigurationSpace ConfigurationSpace::symmetric(int n_max, int n_particles) {
  return ConfigurationSpace(Statistics::Symmetric, n_max, n_particles);
}

ConfigurationSpace ConfigurationSpace::antisymmetric(int n_max,
                                                     int n_particles) {
  return ConfigurationSpace(Statistics::Antisymmetric, n_max, n_particles);
}

std::vector<int> ConfigurationSpace::orbitals(int index) const {
  std::vector<int> orbs;
  orbs.reserve(n_particles_);
  const auto& occ = occupations_[index];
  for (int o = 0; o < n_max_; ++o)
    for (int c = 0; c < occ[o]; ++c) orbs.push_back(o);
  return orbs;
}

int ConfigurationSpace::index_of(const std::vector<uint8_t>& occ) const {
  auto it = index_.find(occ);
  return it == index_.end() ? -1 : it->second;
}

}  // namespace q1d
