#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <doctest.h>

#include <q1d/grid_solver.hpp>
#include <q1d/io.hpp>

using namespace q1d;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("q1d-io-test-" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const {
    return (path / name).string();
  }
};

}  // namespace

TEST_CASE("tensor cache: bit-exact roundtrip") {
  TempDir tmp;
  const OrbitalBasis basis(6);
  const TwoBodyTensor original =
      smooth_tensor(basis, EffectivePotential(30.0));
  const std::string path = tmp.file("tensor.bin");
  save_tensor(original, path);
  const TwoBodyTensor loaded = load_tensor(path);
  CHECK(loaded.kind() == original.kind());
  CHECK(loaded.n_max() == original.n_max());
  CHECK(loaded.epsilon() == original.epsilon());
  CHECK(loaded.quadrature_order() == original.quadrature_order());
  CHECK(loaded.raw() == original.raw());
}

TEST_CASE("tensor cache: key mismatch triggers a rebuild") {
  TempDir tmp;
  const OrbitalBasis basis(6);
  const std::string path = tmp.file("tensor.bin");

  const TwoBodyTensor first =
      cached_smooth_tensor(basis, EffectivePotential(30.0), path);
  CHECK(std::filesystem::exists(path));

  // Same key: served from the cache, identical bits.
  const TwoBodyTensor again =
      cached_smooth_tensor(basis, EffectivePotential(30.0), path);
  CHECK(again.raw() == first.raw());

  // Different anisotropy: the stale file must not be served.
  const TwoBodyTensor other =
      cached_smooth_tensor(basis, EffectivePotential(10.0), path);
  CHECK(other.epsilon() == 10.0);
  CHECK(other.raw() != first.raw());
  CHECK(load_tensor(path).epsilon() == 10.0);  // cache was rewritten

  // Coulomb cache shares the format but not the key space.
  const TwoBodyTensor coulomb = cached_coulomb_tensor(basis, path);
  CHECK(coulomb.kind() == TensorKind::AntisymmetrizedCoulomb);

  // Empty path bypasses caching entirely.
  const TwoBodyTensor direct =
      cached_smooth_tensor(basis, EffectivePotential(30.0), "");
  CHECK(direct.raw() == first.raw());
}

TEST_CASE("tensor cache: corrupted files are rejected") {
  TempDir tmp;
  const std::string path = tmp.file("bad.bin");
  {
    std::ofstream out(path, std::ios::binary);
    out << "Q1DXjunkjunkjunk";
  }
  CHECK_THROWS(load_tensor(path));
  CHECK_THROWS(load_tensor(tmp.file("missing.bin")));

  // cached_* recovers by rebuilding.
  const OrbitalBasis basis(4);
  const TwoBodyTensor rebuilt =
      cached_smooth_tensor(basis, EffectivePotential(5.0), path);
  CHECK(rebuilt.n_max() == 4);
  CHECK(load_tensor(path).epsilon() == 5.0);
}

TEST_CASE("grid-state snapshot roundtrip") {
  TempDir tmp;
  const TrapParams params(2, 1.0, Anisotropy::finite(10.0));
  GridAxes axes = default_grid_axes(params);
  axes.points = 64;
  const GridState state = imaginary_time_ground_state(params, axes);
  const std::string path = tmp.file("state.bin");
  save_grid_state(state, path);
  const GridState loaded = load_grid_state(path);
  CHECK(loaded.params.n_particles == 2);
  CHECK(loaded.params.g == 1.0);
  CHECK(loaded.params.anisotropy == params.anisotropy);
  CHECK(loaded.axes.points == axes.points);
  CHECK(loaded.axes.extent == axes.extent);
  CHECK(loaded.energy == state.energy);
  CHECK((loaded.amplitudes - state.amplitudes).cwiseAbs().maxCoeff() == 0.0);

  // Strict-1D states have no grid representation; a snapshot claiming one
  // must be refused on load.
  GridState strict = state;
  strict.params = TrapParams(2, 1.0, Anisotropy::strict_1d());
  const std::string bad = tmp.file("strict.bin");
  save_grid_state(strict, bad);
  CHECK_THROWS(load_grid_state(bad));
}
