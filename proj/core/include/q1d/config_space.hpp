#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

namespace q1d {

enum class Statistics { Symmetric, Antisymmetric };

/// Occupation-number configurations over n_max orbitals with a fixed total
/// particle number. Enumeration is lexicographic in the occupation vector
/// and therefore identical across runs and platforms.
class ConfigurationSpace {
 public:
  static ConfigurationSpace symmetric(int n_max, int n_particles);
  static ConfigurationSpace antisymmetric(int n_max, int n_particles);

  Statistics statistics() const { return statistics_; }
  int n_max() const { return n_max_; }
  int n_particles() const { return n_particles_; }
  int dimension() const { return static_cast<int>(occupations_.size()); }

  const std::vector<uint8_t>& occupation(int index) const {
    return occupations_[index];
  }
  /// Occupied orbital list (with multiplicity), ascending.
  std::vector<int> orbitals(int index) const;

  /// Index of an occupation vector; -1 if absent.
  int index_of(const std::vector<uint8_t>& occ) const;

 private:
  ConfigurationSpace(Statistics s, int n_max, int n_particles);
  Statistics statistics_;
  int n_max_;
  int n_particles_;
  std::vector<std::vector<uint8_t>> occupations_;
  std::map<std::vector<uint8_t>, int> index_;
};

}  // namespace q1d
