#include "q1d/io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <functional>

static_assert(std::endian::native == std::endian::little,
              "binary formats assume a little-endian host");

namespace q1d {

namespace {

constexpr uint32_t kTensorVersion = 1;
constexpr uint32_t kSnapshotVersion = 1;

void write_u32(std::ostream& out, uint32_t v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

void write_f64(std::ostream& out, double v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

uint32_t read_u32(std::istream& in) {
  uint32_t v = 0;
  in.read(reinterpret_cast<char*>(&v), sizeof v);
  return v;
}

double read_f64(std::istream& in) {
  double v = 0;
  in.read(reinterpret_cast<char*>(&v), sizeof v);
  return v;
}

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw std::runtime_error(path + ": " + what);
}

}  // namespace

void save_tensor(const TwoBodyTensor& tensor, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(path, "cannot open for writing");
  out.write("Q1DT", 4);
  write_u32(out, kTensorVersion);
  write_u32(out, static_cast<uint32_t>(tensor.kind()));
  write_u32(out, static_cast<uint32_t>(tensor.n_max()));
  write_u32(out, static_cast<uint32_t>(tensor.quadrature_order()));
  write_f64(out, tensor.epsilon());
  const auto& data = tensor.raw();
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size() * sizeof(double)));
  if (!out) fail(path, "write failed");
}

TwoBodyTensor load_tensor(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path, "cannot open for reading");
  char magic[4] = {};
  in.read(magic, 4);
  if (!in || std::memcmp(magic, "Q1DT", 4) != 0)
    fail(path, "not a tensor cache file");
  if (read_u32(in) != kTensorVersion) fail(path, "unsupported format version");
  const uint32_t kind = read_u32(in);
  if (kind > 1) fail(path, "unknown tensor kind");
  const int n_max = static_cast<int>(read_u32(in));
  const int quad = static_cast<int>(read_u32(in));
  const double eps = read_f64(in);
  if (n_max < 1 || n_max > 4096) fail(path, "implausible n_max");
  TwoBodyTensor tensor(static_cast<TensorKind>(kind), n_max, eps, quad);
  auto& data = tensor.raw();
  in.read(reinterpret_cast<char*>(data.data()),
          static_cast<std::streamsize>(data.size() * sizeof(double)));
  if (!in) fail(path, "truncated tensor data");
  return tensor;
}

namespace {

TwoBodyTensor cached_tensor(const OrbitalBasis& basis, TensorKind kind,
                            double epsilon, const std::string& path,
                            const std::function<TwoBodyTensor()>& build) {
  if (!path.empty()) {
    try {
      TwoBodyTensor tensor = load_tensor(path);
      if (tensor.kind() == kind && tensor.n_max() == basis.n_max &&
          tensor.quadrature_order() == basis.quadrature_order &&
          tensor.epsilon() == epsilon)
        return tensor;
    } catch (const std::runtime_error&) {
      // Missing or stale cache: rebuild below.
    }
  }
  TwoBodyTensor tensor = build();
  if (!path.empty()) save_tensor(tensor, path);
  return tensor;
}

}  // namespace

TwoBodyTensor cached_smooth_tensor(const OrbitalBasis& basis,
                                   const EffectivePotential& potential,
                                   const std::string& path) {
  return cached_tensor(basis, TensorKind::Smooth, potential.epsilon(), path,
                       [&] { return smooth_tensor(basis, potential); });
}

TwoBodyTensor cached_coulomb_tensor(const OrbitalBasis& basis,
                                    const std::string& path) {
  return cached_tensor(basis, TensorKind::AntisymmetrizedCoulomb, 0.0, path,
                       [&] { return antisymmetrized_coulomb_tensor(basis); });
}

void save_grid_state(const GridState& state, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(path, "cannot open for writing");
  out.write("Q1DS", 4);
  write_u32(out, kSnapshotVersion);
  write_u32(out, static_cast<uint32_t>(state.params.n_particles));
  const bool strict = state.params.anisotropy.is_strict_1d();
  write_u32(out, strict ? 1u : 0u);
  write_f64(out, state.params.g);
  write_f64(out, strict ? 0.0 : state.params.anisotropy.epsilon());
  write_u32(out, static_cast<uint32_t>(state.axes.points));
  write_f64(out, state.axes.extent);
  write_f64(out, state.energy);
  out.write(reinterpret_cast<const char*>(state.amplitudes.data()),
            static_cast<std::streamsize>(state.amplitudes.size() *
                                         sizeof(double)));
  if (!out) fail(path, "write failed");
}

GridState load_grid_state(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path, "cannot open for reading");
  char magic[4] = {};
  in.read(magic, 4);
  if (!in || std::memcmp(magic, "Q1DS", 4) != 0)
    fail(path, "not a state snapshot file");
  if (read_u32(in) != kSnapshotVersion)
    fail(path, "unsupported format version");
  const int n = static_cast<int>(read_u32(in));
  const bool strict = read_u32(in) != 0;
  const double g = read_f64(in);
  const double eps = read_f64(in);
  const int points = static_cast<int>(read_u32(in));
  const double extent = read_f64(in);
  const double energy = read_f64(in);
  if (strict) fail(path, "grid snapshots cannot carry the strict 1D limit");
  if (points < 2 || points > (1 << 20)) fail(path, "implausible grid size");
  TrapParams params(n, g, Anisotropy::finite(eps));
  size_t size = 1;
  for (int d = 0; d < n; ++d) size *= static_cast<size_t>(points);
  GridState state{params, GridAxes{points, extent},
                  Eigen::VectorXd(static_cast<Eigen::Index>(size)), energy};
  in.read(reinterpret_cast<char*>(state.amplitudes.data()),
          static_cast<std::streamsize>(size * sizeof(double)));
  if (!in) fail(path, "truncated amplitude data");
  return state;
}

}  // namespace q1d
