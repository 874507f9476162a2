#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "config.hpp"
#include "nlperim/energy.hpp"
#include "nlperim/errors.hpp"
#include "nlperim/grid.hpp"
#include "nlperim/kernel.hpp"
#include "nlperim/parallel.hpp"
#include "nlperim/plateau.hpp"
#include "nlperim/rng.hpp"
#include "nlperim/serialize.hpp"
#include "nlperim/sweep.hpp"

using namespace nlperim;
using nlperim::cli::Config;
using nlperim::cli::ConfigError;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitBudget = 3;
constexpr int kExitAssert = 4;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::array<double, kMaxDim> parse_vector(const std::string& s, int d, const std::string& what) {
  std::array<double, kMaxDim> v{};
  const auto parts = split(s, ',');
  if (static_cast<int>(parts.size()) != d)
    throw ConfigError(what + " needs " + std::to_string(d) + " components, got '" + s + "'");
  for (int a = 0; a < d; ++a) {
    try {
      v[a] = std::stod(parts[a]);
    } catch (const std::exception&) {
      throw ConfigError("bad number '" + parts[a] + "' in " + what);
    }
  }
  return v;
}

// Shape grammar: kind:field=value;field=value  with comma-separated vectors,
// e.g. "ball:c=0.5,0.5;r=0.25", "halfspace:axis=1;offset=0",
// "box:lo=0,0;hi=1,1", "annulus:c=0,0;rin=0.1;rout=0.3", "file:mask.cells".
ShapeSpec parse_shape(const std::string& spec, int d) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw ConfigError("malformed shape '" + spec + "'");
  const std::string kind = spec.substr(0, colon);
  const std::string body = spec.substr(colon + 1);
  if (kind == "file") return ShapeSpec::custom_set(read_cell_set(body));

  std::map<std::string, std::string> fields;
  for (const auto& part : split(body, ';')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw ConfigError("malformed shape field '" + part + "'");
    fields[part.substr(0, eq)] = part.substr(eq + 1);
  }
  auto need = [&](const std::string& key) {
    const auto it = fields.find(key);
    if (it == fields.end())
      throw ConfigError("shape '" + spec + "' is missing field '" + key + "'");
    return it->second;
  };
  auto number = [&](const std::string& key) {
    try {
      return std::stod(need(key));
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception&) {
      throw ConfigError("bad number in shape field '" + key + "'");
    }
  };

  if (kind == "halfspace")
    return ShapeSpec::halfspace(static_cast<int>(number("axis")), number("offset"));
  if (kind == "ball") return ShapeSpec::ball(parse_vector(need("c"), d, "ball center"), number("r"));
  if (kind == "box")
    return ShapeSpec::box(parse_vector(need("lo"), d, "box lo"),
                          parse_vector(need("hi"), d, "box hi"));
  if (kind == "annulus")
    return ShapeSpec::annulus(parse_vector(need("c"), d, "annulus center"), number("rin"),
                              number("rout"));
  throw ConfigError("unknown shape kind '" + kind + "'");
}

QuadratureConfig quadrature_from(const Config& cfg) {
  QuadratureConfig q;
  q.radial_nodes = static_cast<int>(cfg.get_int_or("quadrature", "radial_nodes", q.radial_nodes));
  q.tail_tolerance = cfg.get_double_or("quadrature", "tail_tolerance", q.tail_tolerance);
  q.subcell_refinement =
      static_cast<int>(cfg.get_int_or("quadrature", "subcell_refinement", q.subcell_refinement));
  validate(q);
  return q;
}

void apply_threads(const Config& cfg, const std::string& section, int flag_threads) {
  const int n = flag_threads >= 0
                    ? flag_threads
                    : static_cast<int>(cfg.get_int_or(section, "threads", 0));
  parallel::set_max_threads(n);
}

void emit(const Json& doc, const std::string& path) {
  const std::string text = doc.dump(2) + "\n";
  std::cout << text;
  if (!path.empty()) {
    std::ofstream f(path);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    f << text;
  }
}

int run_constants(const std::string& kernel_id, int dim, const QuadratureConfig& quad) {
  const KernelSpec k = parse_kernel(kernel_id, dim);
  const AdmissibilityReport rep = check_admissibility(k, quad);
  if (!rep.C2_prime) {
    std::cerr << "kernel '" << kernel_id << "' fails the radial moment condition\n";
    return kExitConfig;
  }
  const KernelConstants c = compute_constants(k, quad);
  Json doc = constants_to_json(c);
  doc["kernel_id"] = kernel_id;
  doc["dim"] = dim;
  doc["admissibility"] = admissibility_to_json(rep);
  emit(doc, "");
  return kExitOk;
}

int run_perimeter(const std::string& config_path, int flag_threads) {
  const Config cfg = Config::parse_file(config_path);
  apply_threads(cfg, "perimeter", flag_threads);
  const QuadratureConfig quad = quadrature_from(cfg);
  const int d = static_cast<int>(cfg.get_int("perimeter", "dim"));
  const std::string kernel_id = cfg.get_string("perimeter", "kernel");
  const double epsilon = cfg.get_double_or("perimeter", "epsilon", 1.0);
  const long long seed = cfg.get_int_or("perimeter", "seed", 0);
  const std::size_t budget =
      static_cast<std::size_t>(cfg.get_int_or("perimeter", "budget", kDefaultCellBudget));

  KernelSpec k = parse_kernel(kernel_id, d);
  if (epsilon != 1.0) k = rescale(k, epsilon);

  const ShapeSpec omega_shape = parse_shape(cfg.get_string("perimeter", "omega"), d);
  const ShapeSpec set_shape = parse_shape(cfg.get_string("perimeter", "set"), d);

  GridSpec grid;
  if (omega_shape.kind == ShapeSpec::Kind::Custom) {
    grid = omega_shape.custom->grid();
  } else if (omega_shape.kind == ShapeSpec::Kind::Box) {
    const double h = cfg.get_double("perimeter", "cell_size");
    grid = grid_with_collar(d, h, omega_shape.lo, omega_shape.hi, k.truncation_radius, budget);
  } else {
    throw ConfigError("omega must be a box shape or a mask file");
  }
  const CellSet omega = make_shape(omega_shape, grid);
  const DomainMask dom = make_domain_mask(omega, k.truncation_radius);
  const CellSet cells = make_shape(set_shape, grid);
  const PairWeightTable w = build_weights(k, grid, quad);
  const EnergyBreakdown br = nonlocal_perimeter(cells, dom, w);

  Json doc = energy_to_json(br, kernel_id, grid, epsilon);
  doc["config_hash"] = fnv1a_hex(cfg.raw_text());
  doc["seed"] = seed;
  emit(doc, cfg.get_string_or("perimeter", "output_json", ""));

  const std::string csv_path = cfg.get_string_or("perimeter", "output_csv", "");
  if (!csv_path.empty()) {
    std::ofstream f(csv_path);
    if (!f) throw IoError("cannot open '" + csv_path + "'");
    f << "J1,J2,J,L_in,L_out1,L_out2\n";
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", br.j1, br.j2, br.j,
                  br.l_in, br.l_out1, br.l_out2);
    f << buf;
  }
  return kExitOk;
}

int run_plateau(const std::string& config_path, int flag_threads) {
  const Config cfg = Config::parse_file(config_path);
  apply_threads(cfg, "plateau", flag_threads);
  const QuadratureConfig quad = quadrature_from(cfg);
  const int d = static_cast<int>(cfg.get_int("plateau", "dim"));
  const std::string kernel_id = cfg.get_string("plateau", "kernel");
  const long long seed = cfg.get_int_or("plateau", "seed", 0);
  const KernelSpec k = parse_kernel(kernel_id, d);

  const CellSet omega = read_cell_set(cfg.get_string("plateau", "omega_mask"));
  const CellSet trace = read_cell_set(cfg.get_string("plateau", "boundary_mask"));
  if (!(omega.grid() == trace.grid()))
    throw ConfigError("omega and boundary masks live on different grids");
  if (cfg.has("plateau", "grid")) {
    std::ifstream f(cfg.get_string("plateau", "grid"));
    if (!f) throw ConfigError("cannot open grid file");
    // header-only reference file; must agree with the masks
    const CellSet ref = read_cell_set(f);
    if (!(ref.grid() == omega.grid())) throw ConfigError("grid file disagrees with the masks");
  }

  DomainMask dom = make_domain_mask(omega, k.truncation_radius);
  PlateauProblem problem =
      make_plateau_problem(std::move(dom), trace, build_weights(k, omega.grid(), quad));

  const std::string mode = cfg.get_string_or("plateau", "mode", "exact");
  const std::size_t node_budget =
      static_cast<std::size_t>(cfg.get_int_or("plateau", "node_budget", 100000));

  PlateauSolution sol;
  Json doc;
  if (mode == "exact") {
    sol = solve_exact(problem, node_budget);
    doc["certificate"] = "ExactMinCut";
  } else if (mode == "relaxed") {
    const double delta = cfg.get_double_or("plateau", "delta", 1e-2);
    const int steps = static_cast<int>(cfg.get_int_or("plateau", "steps", 500));
    const RelaxedSolution rel = solve_relaxed(problem, delta, steps);
    sol = rel.thresholded;
    doc["certificate"] = "ThresholdedRelaxation";
    doc["t_star"] = rel.t_star;
    doc["smoothed_energy"] = rel.smoothed_energy;
    doc["converged"] = rel.converged;
    const std::string field_path = cfg.get_string_or("plateau", "output_field", "");
    if (!field_path.empty()) write_phase_field(field_path, rel.u);
  } else {
    throw ConfigError("mode must be 'exact' or 'relaxed'");
  }

  const Json energy = energy_to_json(sol.energy, kernel_id, omega.grid(), 1.0);
  for (auto it = energy.begin(); it != energy.end(); ++it) doc[it.key()] = it.value();
  doc["config_hash"] = fnv1a_hex(cfg.raw_text());
  doc["seed"] = seed;
  doc["free_cells"] = problem.dom.omega.count();
  emit(doc, cfg.get_string_or("plateau", "output_json", ""));

  const std::string bitmap_path = cfg.get_string_or("plateau", "output_bitmap", "");
  if (!bitmap_path.empty()) write_cell_set(bitmap_path, sol.minimizer);
  return kExitOk;
}

int run_gamma(const std::string& config_path, int flag_threads) {
  const Config cfg = Config::parse_file(config_path);
  apply_threads(cfg, "gamma", flag_threads);
  const QuadratureConfig quad = quadrature_from(cfg);
  const int d = static_cast<int>(cfg.get_int("gamma", "dim"));
  const std::string kernel_id = cfg.get_string("gamma", "kernel");
  const long long seed = cfg.get_int_or("gamma", "seed", 0);
  const std::size_t budget =
      static_cast<std::size_t>(cfg.get_int_or("gamma", "budget", kDefaultCellBudget));
  const int q_factor = static_cast<int>(cfg.get_int_or("gamma", "q", 8));

  const KernelSpec k = parse_kernel(kernel_id, d);
  const ShapeSpec set_shape = parse_shape(cfg.get_string("gamma", "set"), d);
  const ShapeSpec omega_shape = parse_shape(cfg.get_string("gamma", "omega"), d);
  const std::vector<double> eps = cfg.get_double_list("gamma", "epsilons");

  const auto records = run_sweep(set_shape, omega_shape, k, eps, q_factor, quad, budget);

  const std::string channel_name = cfg.get_string_or("gamma", "channel", "J1");
  SweepChannel channel = SweepChannel::J1;
  if (channel_name == "J2")
    channel = SweepChannel::J2;
  else if (channel_name == "full")
    channel = SweepChannel::Full;
  else if (channel_name != "J1")
    throw ConfigError("channel must be J1, J2 or full");
  const ExtrapolationResult fit = extrapolate(records, channel);

  const std::string csv_path = cfg.get_string_or("gamma", "output_csv", "");
  if (!csv_path.empty()) {
    std::ofstream f(csv_path);
    if (!f) throw IoError("cannot open '" + csv_path + "'");
    write_sweep_csv(f, records);
  }

  Json doc;
  doc["kernel_id"] = kernel_id;
  doc["channel"] = channel_name;
  doc["q"] = q_factor;
  doc["config_hash"] = fnv1a_hex(cfg.raw_text());
  doc["seed"] = seed;
  doc["records"] = Json::array();
  for (const auto& r : records) {
    Json rec;
    rec["epsilon"] = r.epsilon;
    rec["h"] = r.h;
    rec["ratio_J1"] = r.ratio_j1;
    rec["ratio_J2"] = r.ratio_j2;
    rec["ref_J1"] = r.ref_j1;
    rec["ref_J2"] = r.ref_j2;
    doc["records"].push_back(rec);
  }
  doc["extrapolation"] = extrapolation_to_json(fit);
  emit(doc, cfg.get_string_or("gamma", "output_json", ""));

  const double gate = cfg.get_double_or("gamma", "assert_rel_error", -1.0);
  if (gate >= 0.0 && fit.relative_error > gate) {
    std::cerr << "relative error " << fit.relative_error << " exceeds the configured gate " << gate
              << "\n";
    return kExitAssert;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// property suites for the `check` subcommand

struct CheckRunner {
  int failures = 0;
  void report(const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS  " : "FAIL  ") << name;
    if (!detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++failures;
  }
};

int run_check(std::uint64_t seed, bool quick) {
  const QuadratureConfig quad{};
  CheckRunner run;
  std::mt19937_64 rng(seed);

  {  // admissibility of the catalog
    bool ok = true;
    std::string detail;
    for (const auto& id : builtin_catalog()) {
      const auto rep = check_admissibility(parse_kernel(id, 2), quad);
      const bool want_c4 = id.rfind("ball", 0) != 0;
      if (!rep.C2 || !rep.C2_prime || !rep.C3 || rep.C4 != want_c4) {
        ok = false;
        detail = id;
      }
    }
    run.report("kernel admissibility over the catalog", ok, detail);
  }
  {  // constant identity c_K = alpha/2 c'_K, d in {1,2,3}
    bool ok = true;
    double worst = 0;
    for (const auto& id : builtin_catalog()) {
      for (int d : {1, 2, 3}) {
        const auto c = compute_constants(parse_kernel(id, d), quad);
        worst = std::max(worst, std::abs(c.c_K - 0.5 * c.alpha_1d * c.c_prime_K) / c.c_K);
      }
    }
    ok = worst <= 1e-6;
    run.report("constant identity across the catalog", ok,
               "max rel dev " + std::to_string(worst));
  }
  {  // surface factor closed form
    bool ok = true;
    for (int d : {1, 2, 3}) {
      const auto c = compute_constants(make_gaussian(1.0, d), quad);
      const double closed = 2.0 * unit_ball_volume(d - 1) / (d * unit_ball_volume(d));
      ok = ok && std::abs(c.alpha_1d - closed) <= 1e-6 * closed;
    }
    run.report("sphere average factor vs closed form", ok);
  }
  {  // mass invariance under rescaling
    bool ok = true;
    for (const auto& id : builtin_catalog()) {
      const auto k = parse_kernel(id, 2);
      const double m0 = kernel_mass(k, quad);
      for (double eps : {0.5, 0.25, 0.125})
        ok = ok && std::abs(kernel_mass(rescale(k, eps), quad) - m0) <= 1e-6 * m0;
    }
    run.report("mass preserving rescalings", ok);
  }
  {  // first-moment homogeneity
    const auto k = make_exponential(1.0, 2);
    const double base = compute_constants(k, quad).c_prime_K;
    bool ok = true;
    for (double eps : {0.5, 0.25})
      ok = ok &&
           std::abs(compute_constants(rescale(k, eps), quad).c_prime_K - eps * base) <= 1e-8 * base;
    run.report("first moment homogeneity under rescaling", ok);
  }

  const GridSpec g = grid_covering(2, 1.0 / 16, {-0.5, -0.5, 0}, {0.5, 0.5, 0});
  const CellSet omega = make_shape(ShapeSpec::box({-0.25, -0.25, 0}, {0.25, 0.25, 0}), g);
  const DomainMask dom = make_domain_mask(omega, 0.25);
  const PairWeightTable w = build_weights(make_exponential(1.0, 2, 0.25), g, quad);
  auto random_set = [&]() {
    std::vector<std::uint8_t> ind(g.cell_count());
    for (auto& v : ind) v = rng() & 1;
    return CellSet(g, std::move(ind));
  };

  {  // coarea
    const int trials = quick ? 3 : 10;
    double worst = 0;
    for (int t = 0; t < trials; ++t) {
      std::vector<double> levels(8);
      for (auto& v : levels) v = (rng() % 10000) / 10000.0;
      std::vector<double> vals(g.cell_count());
      for (auto& v : vals) v = levels[rng() % levels.size()];
      const auto sides = coarea_check(PhaseField(g, vals), dom, w, levels);
      worst = std::max(worst, std::abs(sides.lhs - sides.rhs) / std::max(sides.lhs, 1e-300));
    }
    run.report("discrete coarea identity", worst <= 1e-10, "max rel dev " + std::to_string(worst));
  }
  {  // submodularity
    const int trials = quick ? 10 : 50;
    bool ok = true;
    for (int t = 0; t < trials; ++t) {
      const CellSet a = random_set();
      const CellSet b = random_set();
      const double pa = nonlocal_perimeter(a, dom, w).j;
      const double pb = nonlocal_perimeter(b, dom, w).j;
      ok = ok && submodularity_gap(a, b, dom, w) >= -1e-9 * (pa + pb);
    }
    run.report("submodularity of the nonlocal perimeter", ok);
  }
  {  // symmetry and translation invariance
    const CellSet a = make_shape(ShapeSpec::ball({-0.15, -0.1, 0}, 0.1), g);
    const CellSet b = make_shape(ShapeSpec::box({0.0, -0.2, 0}, {0.2, 0.1, 0}), g);
    const bool sym = interaction(a, b, w) == interaction(b, a, w);
    const std::array<int, kMaxDim> shift{2, 3, 0};
    const bool trans =
        interaction(translate(a, shift), translate(b, shift), w) == interaction(a, b, w);
    run.report("interaction symmetry and translation invariance", sym && trans);
  }
  {  // decomposition identities
    const CellSet e = random_set();
    const auto br = nonlocal_perimeter(e, dom, w);
    const bool ok =
        br.j1 == 2.0 * br.l_in && br.j2 == br.l_out1 + br.l_out2 && br.j == 0.5 * br.j1 + br.j2;
    run.report("energy decomposition identities", ok);
  }
  {  // min cut vs exhaustive enumeration on 3x3 problems
    const int trials = quick ? 2 : 5;
    const GridSpec tg = grid_covering(2, 0.25, {0, 0, 0}, {1.75, 1.75, 0});
    const CellSet tom = make_shape(ShapeSpec::box({0.5, 0.5, 0}, {1.25, 1.25, 0}), tg);
    const PairWeightTable tw = build_weights(make_exponential(1.0, 2, 2.0), tg, quad);
    bool ok = true;
    for (int t = 0; t < trials; ++t) {
      DomainMask tdom = make_domain_mask(tom, 2.0);
      std::vector<std::uint8_t> trace(tg.cell_count(), 0);
      for (std::size_t i = 0; i < trace.size(); ++i)
        if (tdom.region[i] == 2) trace[i] = rng() & 1;
      PlateauProblem p = make_plateau_problem(std::move(tdom), CellSet(tg, trace), tw);
      std::vector<std::size_t> free_cells;
      for (std::size_t i = 0; i < tg.cell_count(); ++i)
        if (p.dom.region[i] == 1) free_cells.push_back(i);
      double best = std::numeric_limits<double>::infinity();
      for (unsigned labels = 0; labels < (1u << free_cells.size()); ++labels) {
        std::vector<std::uint8_t> ind(p.boundary.indicator());
        for (std::size_t a = 0; a < free_cells.size(); ++a)
          ind[free_cells[a]] = (labels >> a) & 1u;
        best = std::min(best, nonlocal_perimeter(CellSet(tg, ind), p.dom, p.weights).j);
      }
      const PlateauSolution sol = solve_exact(p);
      ok = ok && std::abs(sol.energy.j - best) <= 1e-9 * std::max(1.0, best);
    }
    run.report("exact solver vs exhaustive enumeration", ok);
  }

  std::cout << (run.failures == 0 ? "all checks passed\n"
                                  : std::to_string(run.failures) + " check(s) failed\n");
  return run.failures == 0 ? kExitOk : kExitAssert;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"nonlocal perimeter toolkit"};
  app.require_subcommand(1);
  int threads = -1;
  app.add_option("--threads", threads, "worker cap for the cell loops (0 = all cores)");

  auto* constants = app.add_subcommand("constants", "kernel limit constants as JSON");
  std::string kernel_id;
  int dim = 2;
  int radial_nodes = 48;
  double tail_tol = 1e-6;
  constants->add_option("--kernel", kernel_id, "catalog id, e.g. exp:lambda=1")->required();
  constants->add_option("--dim", dim, "ambient dimension");
  constants->add_option("--radial-nodes", radial_nodes, "Gauss-Legendre order");
  constants->add_option("--tail-tol", tail_tol, "admissible discarded tail mass");

  std::string config_path;
  auto* perimeter = app.add_subcommand("perimeter", "nonlocal perimeter of a configured set");
  perimeter->add_option("--config", config_path, "experiment config file")->required();
  auto* plateau = app.add_subcommand("plateau", "solve the prescribed-trace minimisation");
  plateau->add_option("--config", config_path, "problem config file")->required();
  auto* gamma = app.add_subcommand("gamma", "epsilon sweep and extrapolation");
  gamma->add_option("--config", config_path, "sweep config file")->required();

  auto* check = app.add_subcommand("check", "run the property suites");
  std::uint64_t seed = 7;
  bool quick = false;
  check->add_option("--seed", seed, "rng seed");
  check->add_flag("--quick", quick, "reduced trial counts");

  CLI11_PARSE(app, argc, argv);
  if (threads >= 0) parallel::set_max_threads(threads);

  if (constants->parsed()) {
    QuadratureConfig quad;
    quad.radial_nodes = radial_nodes;
    quad.tail_tolerance = tail_tol;
    validate(quad);
    return run_constants(kernel_id, dim, quad);
  }
  if (perimeter->parsed()) return run_perimeter(config_path, threads);
  if (plateau->parsed()) return run_plateau(config_path, threads);
  if (gamma->parsed()) return run_gamma(config_path, threads);
  if (check->parsed()) return run_check(seed, quick);
  return kExitConfig;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const BudgetExceeded& e) {
    std::cerr << e.what() << "\n";
    return kExitBudget;
  } catch (const ConfigError& e) {
    std::cerr << e.what() << "\n";
    return kExitConfig;
  } catch (const UnknownKernel& e) {
    std::cerr << e.what() << "\n";
    return kExitConfig;
  } catch (const IoError& e) {
    std::cerr << e.what() << "\n";
    return kExitConfig;
  } catch (const InvalidArgument& e) {
    std::cerr << e.what() << "\n";
    return kExitConfig;
  } catch (const UnsupportedDimension& e) {
    std::cerr << e.what() << "\n";
    return kExitConfig;
  } catch (const DegenerateShape& e) {
    std::cerr << e.what() << "\n";
    return kExitConfig;
  } catch (const UnsupportedShape& e) {
    std::cerr << e.what() << "\n";
    return kExitConfig;
  } catch (const GridMismatch& e) {
    std::cerr << e.what() << "\n";
    return kExitConfig;
  } catch (const CollarTooSmall& e) {
    std::cerr << e.what() << "\n";
    return kExitConfig;
  } catch (const NonConvexDomain& e) {
    std::cerr << e.what() << "\n";
    return kExitConfig;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}
