// Command-line driver: parameter sweeps over (N, g, eps) with CSV/PGM
// artifacts. All numeric output goes through fixed %.17g formatting so
// identical configurations reproduce byte-identical files.
#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include <q1d/correlation.hpp>
#include <q1d/eigensolver.hpp>
#include <q1d/grid_solver.hpp>
#include <q1d/hamiltonian.hpp>
#include <q1d/limits.hpp>
#include <q1d/pipeline.hpp>

namespace {

constexpr const char* kToolVersion = "1.0.0";

constexpr int kExitUsage = 2;
constexpr int kExitSolver = 3;
constexpr int kExitIo = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::string token;
  std::istringstream in(csv);
  while (std::getline(in, token, ',')) {
    if (!token.empty()) out.push_back(token);
  }
  return out;
}

std::vector<double> parse_doubles(const std::string& csv,
                                  const std::string& flag) {
  std::vector<double> out;
  for (const auto& t : split_list(csv)) {
    try {
      size_t used = 0;
      const double v = std::stod(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError(flag + ": cannot parse '" + t + "'");
    }
  }
  if (out.empty()) throw UsageError(flag + ": empty list");
  return out;
}

std::vector<int> parse_ints(const std::string& csv, const std::string& flag) {
  std::vector<int> out;
  for (double v : parse_doubles(csv, flag)) {
    if (v != static_cast<int>(v))
      throw UsageError(flag + ": expected integers");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

// Anisotropy list entries are finite values or the token `inf`.
std::vector<q1d::Anisotropy> parse_anisotropies(const std::string& csv) {
  std::vector<q1d::Anisotropy> out;
  for (const auto& t : split_list(csv)) {
    if (t == "inf") {
      out.push_back(q1d::Anisotropy::strict_1d());
    } else {
      try {
        out.push_back(q1d::Anisotropy::finite(std::stod(t)));
      } catch (const std::exception&) {
        throw UsageError("--eps: cannot parse '" + t + "'");
      }
    }
  }
  if (out.empty()) throw UsageError("--eps: empty list");
  return out;
}

std::string anisotropy_label(const q1d::Anisotropy& a) {
  return a.is_strict_1d() ? "inf" : fmt(a.epsilon());
}

double anisotropy_order(const q1d::Anisotropy& a) {
  return a.is_strict_1d() ? std::numeric_limits<double>::infinity()
                          : a.epsilon();
}

uint64_t fnv1a(const std::string& data) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

struct Options {
  std::string command;
  std::vector<int> n_list{2};
  std::vector<double> g_list{1.0};
  std::vector<q1d::Anisotropy> eps_list{q1d::Anisotropy::finite(30.0)};
  std::string method = "ci";
  int n_max = 0;
  int grid_points = 0;
  std::string out_dir = ".";
  int jobs = 1;
  bool force = false;
  uint64_t seed = 0;
  bool seed_given = false;
  double xmin = 0.05, xmax = 10.0;
  int samples = 200;

  // Canonical serialization used for the provenance hash.
  std::string canonical() const {
    std::ostringstream s;
    s << command << ";n=";
    for (int n : n_list) s << n << ",";
    s << ";g=";
    for (double g : g_list) s << fmt(g) << ",";
    s << ";eps=";
    for (const auto& e : eps_list) s << anisotropy_label(e) << ",";
    s << ";method=" << method << ";nmax=" << n_max << ";grid=" << grid_points
      << ";seed=" << (seed_given ? std::to_string(seed) : "-")
      << ";x=" << fmt(xmin) << ":" << fmt(xmax) << ":" << samples;
    return s.str();
  }
};

class OutputFile {
 public:
  OutputFile(const Options& opt, const std::string& name, bool binary = false)
      : path_(std::filesystem::path(opt.out_dir) / name) {
    std::error_code ec;
    std::filesystem::create_directories(opt.out_dir, ec);
    if (ec) throw IoError(path_.string() + ": cannot create out directory");
    if (std::filesystem::exists(path_) && !opt.force)
      throw IoError(path_.string() + ": exists (pass --force to overwrite)");
    stream_.open(path_, binary ? std::ios::binary | std::ios::trunc
                               : std::ios::trunc);
    if (!stream_) throw IoError(path_.string() + ": cannot open for writing");
  }

  void header(const Options& opt) {
    char hash[32];
    std::snprintf(hash, sizeof hash, "%016llx",
                  static_cast<unsigned long long>(fnv1a(opt.canonical())));
    stream_ << "# tool-version=" << kToolVersion << "\n"
            << "# config-hash=" << hash << "\n";
  }

  std::ofstream& raw() { return stream_; }
  const std::filesystem::path& path() const { return path_; }

  void close() {
    stream_.close();
    if (stream_.fail()) throw IoError(path_.string() + ": write failed");
  }

 private:
  std::filesystem::path path_;
  std::ofstream stream_;
};

struct SweepPoint {
  q1d::TrapParams params;
  q1d::Method method;
};

q1d::SolveOptions solve_options(const Options& opt, q1d::Method method) {
  q1d::SolveOptions s;
  s.method = method;
  s.n_max = opt.n_max;
  s.grid_points = opt.grid_points;
  return s;
}

std::vector<SweepPoint> enumerate_points(const Options& opt) {
  std::vector<q1d::Method> methods;
  if (opt.method == "ci") {
    methods = {q1d::Method::CI};
  } else if (opt.method == "grid") {
    methods = {q1d::Method::Grid};
  } else if (opt.method == "both") {
    methods = {q1d::Method::CI, q1d::Method::Grid};
  } else {
    throw UsageError("--method: expected ci, grid or both");
  }

  // Deterministic lexicographic order over (N, g, eps), methods inner.
  auto n_sorted = opt.n_list;
  std::sort(n_sorted.begin(), n_sorted.end());
  auto g_sorted = opt.g_list;
  std::sort(g_sorted.begin(), g_sorted.end());
  auto e_sorted = opt.eps_list;
  std::stable_sort(e_sorted.begin(), e_sorted.end(),
                   [](const q1d::Anisotropy& a, const q1d::Anisotropy& b) {
                     return anisotropy_order(a) < anisotropy_order(b);
                   });

  std::vector<SweepPoint> points;
  for (int n : n_sorted) {
    if (n < 2 || n > 4) throw UsageError("--n: particle number must be 2..4");
    for (double g : g_sorted) {
      if (g < 0) throw UsageError("--g: coupling must be >= 0");
      for (const auto& eps : e_sorted)
        for (q1d::Method m : methods) {
          if (m == q1d::Method::Grid && n == 4)
            throw UsageError("grid method supports N=2,3 only");
          if (m == q1d::Method::Grid && eps.is_strict_1d())
            throw UsageError(
                "grid method needs finite --eps (strict 1D runs use ci)");
          points.push_back({q1d::TrapParams(n, g, eps), m});
        }
    }
  }
  return points;
}

std::vector<q1d::CorrelationReport> run_points(
    const Options& opt, const std::vector<SweepPoint>& points) {
  std::vector<std::optional<q1d::CorrelationReport>> reports(points.size());
  const int jobs =
      std::max(1, std::min<int>(opt.jobs, static_cast<int>(points.size())));
  std::atomic<size_t> next{0};
  auto worker = [&] {
    while (true) {
      const size_t i = next.fetch_add(1);
      if (i >= points.size()) break;
      reports[i] =
          q1d::solve_point(points[i].params, solve_options(opt, points[i].method));
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::vector<q1d::CorrelationReport> out;
  out.reserve(reports.size());
  for (auto& r : reports) out.push_back(std::move(*r));
  return out;
}

int cmd_potential(const Options& opt) {
  if (!(opt.xmax > opt.xmin) || opt.samples < 2)
    throw UsageError("potential: bad x range");
  for (const auto& e : opt.eps_list)
    if (e.is_strict_1d())
      throw UsageError("potential: strict 1D has no finite-range kernel");

  OutputFile out(opt, "potential.csv");
  out.header(opt);
  out.raw() << "x,epsilon,u_eff,coulomb\n";
  for (const auto& e : opt.eps_list) {
    for (int i = 0; i < opt.samples; ++i) {
      const double x =
          opt.xmin + (opt.xmax - opt.xmin) * i / (opt.samples - 1);
      out.raw() << fmt(x) << "," << fmt(e.epsilon()) << ","
                << fmt(q1d::effective_interaction(x, e.epsilon())) << ","
                << fmt(1.0 / x) << "\n";
    }
  }
  out.close();
  return 0;
}

int cmd_sweep(const Options& opt) {
  const auto points = enumerate_points(opt);
  const auto reports = run_points(opt, points);

  OutputFile out(opt, "sweep.csv");
  out.header(opt);
  out.raw() << "N,g,epsilon,method,energy,linear_entropy,lambda_0,lambda_1,"
               "lambda_2,lambda_3,lambda_4,lambda_5,lambda_6,lambda_7,"
               "converged\n";
  bool failed = false;
  for (size_t i = 0; i < points.size(); ++i) {
    const auto& r = reports[i];
    const auto& p = points[i];
    out.raw() << p.params.n_particles << "," << fmt(p.params.g) << ","
              << anisotropy_label(p.params.anisotropy) << ","
              << (p.method == q1d::Method::CI ? "ci" : "grid") << ",";
    if (r.converged) {
      out.raw() << fmt(r.energy) << "," << fmt(r.entropy);
      for (int l = 0; l < 8; ++l)
        out.raw() << ","
                  << fmt(l < r.occupancies.size() ? r.occupancies[l] : 0.0);
      out.raw() << ",true\n";
    } else {
      failed = true;
      out.raw() << "nan,nan,nan,nan,nan,nan,nan,nan,nan,nan,false\n";
      std::fprintf(stderr, "q1d: point N=%d g=%s eps=%s failed: %s\n",
                   p.params.n_particles, fmt(p.params.g).c_str(),
                   anisotropy_label(p.params.anisotropy).c_str(),
                   r.error.c_str());
    }
  }
  out.close();
  return failed ? kExitSolver : 0;
}

// rdm.csv: first row the x grid, then one row per x' with the kernel
// samples. rdm.pgm: 8-bit P5 heatmap, dark = high.
void write_rdm_outputs(const Options& opt, const Eigen::VectorXd& nodes,
                       const Eigen::MatrixXd& kernel) {
  OutputFile csv(opt, "rdm.csv");
  csv.header(opt);
  for (int j = 0; j < nodes.size(); ++j)
    csv.raw() << (j ? "," : "") << fmt(nodes[j]);
  csv.raw() << "\n";
  for (int i = 0; i < nodes.size(); ++i) {
    csv.raw() << fmt(nodes[i]);
    for (int j = 0; j < nodes.size(); ++j)
      csv.raw() << "," << fmt(kernel(i, j));
    csv.raw() << "\n";
  }
  csv.close();

  OutputFile pgm(opt, "rdm.pgm", /*binary=*/true);
  const double peak = std::max(kernel.maxCoeff(), 1e-300);
  pgm.raw() << "P5\n";
  pgm.header(opt);
  pgm.raw() << kernel.cols() << " " << kernel.rows() << "\n255\n";
  for (int i = 0; i < kernel.rows(); ++i)
    for (int j = 0; j < kernel.cols(); ++j) {
      const double v = std::max(kernel(i, j), 0.0) / peak;
      const int level = 255 - static_cast<int>(std::lround(255.0 * v));
      pgm.raw().put(static_cast<char>(std::clamp(level, 0, 255)));
    }
  pgm.close();
}

int cmd_rdm(const Options& opt) {
  if (opt.n_list.size() != 1 || opt.g_list.size() != 1 ||
      opt.eps_list.size() != 1)
    throw UsageError("rdm: exactly one (N, g, eps) point expected");
  if (opt.method == "both")
    throw UsageError("rdm: pick one method (ci or grid)");
  using namespace q1d;
  const TrapParams params(opt.n_list[0], opt.g_list[0], opt.eps_list[0]);
  const Method method = opt.method == "grid" ? Method::Grid : Method::CI;
  if (method == Method::Grid &&
      (params.n_particles == 4 || params.anisotropy.is_strict_1d()))
    throw UsageError("rdm: grid method needs finite --eps and N=2,3");

  if (params.n_particles == 4 && params.anisotropy.is_strict_1d() &&
      opt.seed_given) {
    // Seeded run: Monte Carlo fallback for the strict N=4 integration.
    const SolveOptions sopt = solve_options(opt, method);
    const int n_max =
        sopt.n_max > 0 ? sopt.n_max : default_n_max(params.n_particles);
    OrbitalBasis basis(n_max);
    TwoBodyTensor tensor = antisymmetrized_coulomb_tensor(basis);
    auto space = std::make_shared<ConfigurationSpace>(
        ConfigurationSpace::antisymmetric(n_max, params.n_particles));
    auto h = build_fermionized_hamiltonian(params.g, basis, tensor, *space);
    GroundStateResult gs = ground_state(h, sopt.eigen_tol);
    CIState state{space, gs.vector, gs.energy, params};
    const FermionizedQuadrature quad =
        FermionizedQuadrature::defaults(params.n_particles, params.g);
    MonteCarloRdm mc = rdm_from_fermionized_mc(
        state, quad.extent, quad.outer_nodes, 200000, opt.seed);
    write_rdm_outputs(opt, mc.rdm.nodes, mc.rdm.kernel);
    std::fprintf(stderr, "q1d: monte-carlo entropy standard error %s\n",
                 fmt(mc.entropy_standard_error).c_str());
    return 0;
  }

  const ReducedDensityMatrix rdm =
      solve_rdm_spatial(params, solve_options(opt, method));
  write_rdm_outputs(opt, rdm.nodes, rdm.kernel);
  return 0;
}

int cmd_density(const Options& opt) {
  const auto points = enumerate_points(opt);
  const auto reports = run_points(opt, points);
  bool failed = false;
  for (size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    const auto& r = reports[i];
    if (!r.converged) {
      failed = true;
      std::fprintf(stderr, "q1d: point N=%d g=%s eps=%s failed: %s\n",
                   p.params.n_particles, fmt(p.params.g).c_str(),
                   anisotropy_label(p.params.anisotropy).c_str(),
                   r.error.c_str());
      continue;
    }
    std::ostringstream name;
    name << "density_N" << p.params.n_particles << "_g" << fmt(p.params.g)
         << "_eps" << anisotropy_label(p.params.anisotropy)
         << (p.method == q1d::Method::Grid ? "_grid" : "") << ".csv";
    OutputFile out(opt, name.str());
    out.header(opt);
    out.raw() << "x,n_of_x\n";
    for (int k = 0; k < r.density.x.size(); ++k)
      out.raw() << fmt(r.density.x[k]) << "," << fmt(r.density.n[k]) << "\n";
    out.close();
  }
  return failed ? kExitSolver : 0;
}

int cmd_validate3d(const Options& opt) {
  using namespace q1d;
  OutputFile out(opt, "validate3d.csv");
  out.header(opt);
  out.raw() << "g,epsilon,E_3d,E_1d,delta_e\n";
  auto g_sorted = opt.g_list;
  std::sort(g_sorted.begin(), g_sorted.end());
  auto e_sorted = opt.eps_list;
  std::sort(e_sorted.begin(), e_sorted.end(),
            [](const Anisotropy& a, const Anisotropy& b) {
              return anisotropy_order(a) < anisotropy_order(b);
            });
  bool failed = false;
  for (double g : g_sorted)
    for (const auto& eps : e_sorted) {
      if (eps.is_strict_1d())
        throw UsageError("validate3d: needs finite --eps values");
      try {
        const double e3 = full3d_two_body_energy(
            g, eps.epsilon(), default_relative_axes(g, eps.epsilon()));
        SolveOptions sopt;
        sopt.n_max = opt.n_max > 0
                         ? opt.n_max
                         : std::max(24, static_cast<int>(std::ceil(
                                            4.0 * std::sqrt(eps.epsilon()))));
        const CorrelationReport rep =
            solve_point_strict(TrapParams(2, g, eps), sopt);
        out.raw() << fmt(g) << "," << fmt(eps.epsilon()) << "," << fmt(e3)
                  << "," << fmt(rep.energy) << ","
                  << fmt(std::abs(e3 - rep.energy) / e3) << "\n";
      } catch (const std::exception& e) {
        failed = true;
        std::fprintf(stderr, "q1d: validate3d g=%s eps=%s failed: %s\n",
                     fmt(g).c_str(), anisotropy_label(eps).c_str(), e.what());
        out.raw() << fmt(g) << "," << fmt(eps.epsilon())
                  << ",nan,nan,nan\n";
      }
    }
  out.close();
  return failed ? kExitSolver : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Correlations of trapped quasi-one-dimensional charged bosons"};
  app.set_config("--config", "", "flat key=value configuration file");
  Options opt;
  std::string g_csv = "1", n_csv = "2", eps_csv = "30";
  app.add_option("--n", n_csv, "particle numbers, comma list (2..4)");
  app.add_option("--g", g_csv, "coupling strengths, comma list");
  app.add_option("--eps", eps_csv,
                 "anisotropies, comma list; 'inf' selects the strict 1D "
                 "(fermionized) limit");
  app.add_option("--method", opt.method, "ci | grid | both");
  app.add_option("--nmax", opt.n_max, "orbital basis size override");
  app.add_option("--grid", opt.grid_points, "grid points per axis override");
  app.add_option("--out", opt.out_dir, "output directory");
  app.add_option("--jobs", opt.jobs, "concurrent solver threads");
  app.add_flag("--force", opt.force, "overwrite existing output files");
  auto* seed_opt = app.add_option(
      "--seed", opt.seed,
      "Monte Carlo fallback seed (N=4 strict-1D integration only)");
  app.add_option("--xmin", opt.xmin, "potential: smallest sample");
  app.add_option("--xmax", opt.xmax, "potential: largest sample");
  app.add_option("--samples", opt.samples, "potential: sample count");

  app.require_subcommand(1);
  auto* c_pot = app.add_subcommand("potential", "tabulate the effective kernel");
  auto* c_sweep = app.add_subcommand("sweep", "entropy/occupancy sweep");
  auto* c_rdm = app.add_subcommand("rdm", "kernel heatmap for one point");
  auto* c_den = app.add_subcommand("density", "density profiles");
  auto* c_val = app.add_subcommand("validate3d", "single-mode error table");
  for (CLI::App* s : {c_pot, c_sweep, c_rdm, c_den, c_val}) s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  opt.seed_given = seed_opt->count() > 0;
  try {
    opt.n_list = parse_ints(n_csv, "--n");
    opt.g_list = parse_doubles(g_csv, "--g");
    opt.eps_list = parse_anisotropies(eps_csv);
    if (opt.jobs < 1) throw UsageError("--jobs: must be >= 1");

    if (c_pot->parsed()) {
      opt.command = "potential";
      return cmd_potential(opt);
    }
    if (c_sweep->parsed()) {
      opt.command = "sweep";
      return cmd_sweep(opt);
    }
    if (c_rdm->parsed()) {
      opt.command = "rdm";
      return cmd_rdm(opt);
    }
    if (c_den->parsed()) {
      opt.command = "density";
      return cmd_density(opt);
    }
    opt.command = "validate3d";
    return cmd_validate3d(opt);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "q1d: %s\n", e.what());
    return kExitUsage;
  } catch (const IoError& e) {
    std::fprintf(stderr, "q1d: %s\n", e.what());
    return kExitIo;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "q1d: %s\n", e.what());
    return kExitSolver;
  }
}
