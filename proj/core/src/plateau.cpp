#include "nlperim/plateau.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nlperim/errors.hpp"
#include "nlperim/maxflow.hpp"
#include "nlperim/parallel.hpp"
#include "nlperim/rng.hpp"

namespace nlperim {

PlateauProblem make_plateau_problem(DomainMask dom, const CellSet& exterior_trace,
                                    PairWeightTable weights) {
  if (!(dom.grid == exterior_trace.grid()) || !(dom.grid == weights.grid))
    throw GridMismatch("plateau inputs live on different grids");
  if (weights.reach > dom.collar_radius * (1.0 + 1e-12))
    throw CollarTooSmall("kernel reach exceeds the collar radius");
  PlateauProblem p;
  p.boundary = set_intersection(exterior_trace, dom.collar);
  p.dom = std::move(dom);
  p.weights = std::move(weights);
  return p;
}

namespace {

std::vector<std::size_t> omega_cell_list(const DomainMask& dom) {
  std::vector<std::size_t> cells;
  for (std::size_t i = 0; i < dom.region.size(); ++i)
    if (dom.region[i] == 1) cells.push_back(i);
  return cells;
}

// Terminal capacities: interactions of a free cell with the fixed collar.
// keep[i] is paid when the cell joins the set (collar complement neighbours),
// drop[i] when it does not (collar set neighbours).
void collar_capacities(const PlateauProblem& p, const std::vector<std::size_t>& cells,
                       std::vector<double>& keep, std::vector<double>& drop) {
  const GridSpec& g = p.dom.grid;
  const auto& w = p.weights;
  const auto& region = p.dom.region;
  const auto& bnd = p.boundary.indicator();
  keep.assign(cells.size(), 0.0);
  drop.assign(cells.size(), 0.0);
  parallel::for_range(cells.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t ci = b; ci < e; ++ci) {
      const std::size_t i = cells[ci];
      const auto c = g.coords(i);
      double cost1 = 0.0, cost0 = 0.0;
      for (std::size_t oi = 0; oi < w.offsets.size(); ++oi) {
        const auto& o = w.offsets[oi];
        bool in = true;
        for (int a = 0; a < g.dimension; ++a) {
          const int ja = c[a] + o[a];
          if (ja < 0 || ja >= g.counts[a]) {
            in = false;
            break;
          }
        }
        if (!in) continue;
        const std::size_t jj =
            static_cast<std::size_t>(static_cast<std::ptrdiff_t>(i) + w.deltas[oi]);
        if (region[jj] != 2) continue;
        if (bnd[jj])
          cost0 += w.weights[oi];
        else
          cost1 += w.weights[oi];
      }
      keep[ci] = cost1;
      drop[ci] = cost0;
    }
  });
}

CellSet assemble_minimizer(const PlateauProblem& p, const std::vector<std::size_t>& cells,
                           const std::vector<std::uint8_t>& labels) {
  std::vector<std::uint8_t> ind(p.boundary.indicator());
  for (std::size_t ci = 0; ci < cells.size(); ++ci) ind[cells[ci]] = labels[ci];
  return CellSet(p.dom.grid, std::move(ind));
}

}  // namespace

PlateauSolution solve_exact(const PlateauProblem& p, std::size_t node_budget) {
  const GridSpec& g = p.dom.grid;
  const auto cells = omega_cell_list(p.dom);
  if (cells.size() > node_budget)
    throw BudgetExceeded(std::to_string(cells.size()) + " free cells exceed the node budget");

  std::vector<std::int32_t> node_of(g.cell_count(), -1);
  for (std::size_t ci = 0; ci < cells.size(); ++ci)
    node_of[cells[ci]] = static_cast<std::int32_t>(ci);

  const int n_free = static_cast<int>(cells.size());
  const int s = n_free;
  const int t = n_free + 1;
  MinCutSolver solver(n_free + 2);

  std::vector<double> keep, drop;
  collar_capacities(p, cells, keep, drop);
  for (int ci = 0; ci < n_free; ++ci) {
    if (drop[ci] > 0.0) solver.add_edge(s, ci, drop[ci], 0.0);
    if (keep[ci] > 0.0) solver.add_edge(ci, t, keep[ci], 0.0);
  }

  const auto& w = p.weights;
  for (int ci = 0; ci < n_free; ++ci) {
    const std::size_t i = cells[ci];
    const auto c = g.coords(i);
    for (std::size_t oi = 0; oi < w.offsets.size(); ++oi) {
      const auto& o = w.offsets[oi];
      // each unordered pair once, via the lexicographically positive offset
      bool positive = false;
      for (int a = 0; a < g.dimension; ++a) {
        if (o[a] != 0) {
          positive = o[a] > 0;
          break;
        }
      }
      if (!positive) continue;
      bool in = true;
      for (int a = 0; a < g.dimension; ++a) {
        const int ja = c[a] + o[a];
        if (ja < 0 || ja >= g.counts[a]) {
          in = false;
          break;
        }
      }
      if (!in) continue;
      const std::size_t jj =
          static_cast<std::size_t>(static_cast<std::ptrdiff_t>(i) + w.deltas[oi]);
      const std::int32_t cj = node_of[jj];
      if (cj < 0) continue;
      if (w.weights[oi] > 0.0) solver.add_edge(ci, cj, w.weights[oi], w.weights[oi]);
    }
  }

  const auto side = solver.min_cut(s, t);
  std::vector<std::uint8_t> labels(cells.size());
  for (std::size_t ci = 0; ci < cells.size(); ++ci) labels[ci] = side[ci];

  PlateauSolution sol;
  sol.minimizer = assemble_minimizer(p, cells, labels);
  sol.energy = nonlocal_perimeter(sol.minimizer, p.dom, p.weights);
  sol.certificate = Certificate::ExactMinCut;
  return sol;
}

namespace {

double smoothed_abs(double t, double delta) { return std::sqrt(t * t + delta * delta); }

double smoothed_energy_value(const PlateauProblem& p, const std::vector<double>& u,
                             const std::vector<std::size_t>& cells, double delta) {
  const GridSpec& g = p.dom.grid;
  const auto& w = p.weights;
  const auto& region = p.dom.region;
  std::vector<double> percell(cells.size(), 0.0);
  parallel::for_range(cells.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t ci = b; ci < e; ++ci) {
      const std::size_t i = cells[ci];
      const auto c = g.coords(i);
      double s_in = 0.0, s_out = 0.0;
      for (std::size_t oi = 0; oi < w.offsets.size(); ++oi) {
        const auto& o = w.offsets[oi];
        bool in = true;
        for (int a = 0; a < g.dimension; ++a) {
          const int ja = c[a] + o[a];
          if (ja < 0 || ja >= g.counts[a]) {
            in = false;
            break;
          }
        }
        if (!in) continue;
        const std::size_t jj =
            static_cast<std::size_t>(static_cast<std::ptrdiff_t>(i) + w.deltas[oi]);
        if (region[jj] == 1)
          s_in += w.weights[oi] * smoothed_abs(u[i] - u[jj], delta);
        else if (region[jj] == 2)
          s_out += w.weights[oi] * smoothed_abs(u[i] - u[jj], delta);
      }
      percell[ci] = 0.5 * s_in + s_out;
    }
  });
  return pairwise_sum(percell);
}

}  // namespace

RelaxedSolution solve_relaxed(const PlateauProblem& p, double delta, int steps, double step_size,
                              const PhaseField* init) {
  if (!(delta > 0)) throw InvalidArgument("smoothing delta must be positive");
  if (steps < 0) throw InvalidArgument("step count must be >= 0");
  const GridSpec& g = p.dom.grid;
  const auto cells = omega_cell_list(p.dom);
  const auto& region = p.dom.region;

  std::vector<double> u(g.cell_count(), 0.0);
  for (std::size_t i = 0; i < u.size(); ++i)
    if (region[i] == 2) u[i] = p.boundary.contains(i) ? 1.0 : 0.0;
  if (init) {
    if (!(init->grid() == g)) throw GridMismatch("initial field lives on another grid");
    for (const std::size_t i : cells) u[i] = (*init)[i];
  } else {
    for (const std::size_t i : cells) u[i] = 0.5;
  }

  const double tau = step_size > 0 ? step_size : delta / (2.0 * p.weights.offset_weight_sum);
  const auto& w = p.weights;
  std::vector<double> grad(cells.size(), 0.0);

  const int checkpoint = steps - std::max(1, steps / 10);
  double energy_at_checkpoint = 0.0;
  if (steps > 0 && checkpoint == 0)
    energy_at_checkpoint = smoothed_energy_value(p, u, cells, delta);

  for (int it = 0; it < steps; ++it) {
    parallel::for_range(cells.size(), [&](std::size_t b, std::size_t e) {
      for (std::size_t ci = b; ci < e; ++ci) {
        const std::size_t i = cells[ci];
        const auto c = g.coords(i);
        double s = 0.0;
        for (std::size_t oi = 0; oi < w.offsets.size(); ++oi) {
          const auto& o = w.offsets[oi];
          bool in = true;
          for (int a = 0; a < g.dimension; ++a) {
            const int ja = c[a] + o[a];
            if (ja < 0 || ja >= g.counts[a]) {
              in = false;
              break;
            }
          }
          if (!in) continue;
          const std::size_t jj =
              static_cast<std::size_t>(static_cast<std::ptrdiff_t>(i) + w.deltas[oi]);
          if (region[jj] == 0) continue;
          const double diff = u[i] - u[jj];
          s += w.weights[oi] * diff / smoothed_abs(diff, delta);
        }
        grad[ci] = s;
      }
    });
    for (std::size_t ci = 0; ci < cells.size(); ++ci)
      u[cells[ci]] = std::clamp(u[cells[ci]] - tau * grad[ci], 0.0, 1.0);
    if (it + 1 == checkpoint) energy_at_checkpoint = smoothed_energy_value(p, u, cells, delta);
  }

  RelaxedSolution out;
  out.smoothed_energy = smoothed_energy_value(p, u, cells, delta);
  if (steps > 0) {
    const double drop = energy_at_checkpoint - out.smoothed_energy;
    out.final_decrease = drop / std::max(std::abs(out.smoothed_energy), 1e-300);
    out.converged = out.final_decrease <= 1e-4;
  }

  PhaseField field(g, u);
  out.u = field;

  // Coarea threshold scan: 101 uniform levels plus the value set of u.
  std::vector<double> candidates;
  for (int k = 1; k <= 101; ++k) candidates.push_back(k / 102.0);
  std::vector<double> values;
  for (const std::size_t i : cells) values.push_back(u[i]);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (values.size() <= 1000) {
    for (std::size_t i = 0; i + 1 < values.size(); ++i)
      candidates.push_back(0.5 * (values[i] + values[i + 1]));
    if (!values.empty()) {
      if (values.front() > 0.0) candidates.push_back(0.5 * values.front());
      if (values.back() < 1.0) candidates.push_back(0.5 * (values.back() + 1.0));
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  double best_t = 0.5;
  double best_energy = std::numeric_limits<double>::infinity();
  CellSet best_set;
  for (const double t : candidates) {
    if (!(t > 0.0 && t < 1.0)) continue;
    CellSet level = superlevel_set(field, t);
    const double energy = nonlocal_perimeter(level, p.dom, p.weights).j;
    if (energy < best_energy) {
      best_energy = energy;
      best_t = t;
      best_set = std::move(level);
    }
  }

  out.t_star = best_t;
  out.thresholded.minimizer = best_set;
  out.thresholded.energy = nonlocal_perimeter(best_set, p.dom, p.weights);
  out.thresholded.certificate = Certificate::ThresholdedRelaxation;
  return out;
}

OptimalityReport check_optimality(const PlateauSolution& sol, const PlateauProblem& p, int trials,
                                  std::uint64_t seed) {
  const GridSpec& g = p.dom.grid;
  const CellSet& E = sol.minimizer;
  const CellSet Ec = set_complement(E);
  SplitMix64 rng(seed);

  std::vector<std::size_t> outside, inside;
  for (std::size_t i = 0; i < g.cell_count(); ++i) {
    if (p.dom.region[i] != 1) continue;
    (E.contains(i) ? inside : outside).push_back(i);
  }

  OptimalityReport rep;
  rep.trials = 2 * trials;
  auto relative_violation = [](double lhs, double rhs) {
    const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    return (lhs - rhs) / scale;
  };

  auto random_subset = [&](const std::vector<std::size_t>& pool) {
    std::vector<std::uint8_t> ind(g.cell_count(), 0);
    const double prob = 0.05 + 0.9 * rng.uniform();
    for (const std::size_t i : pool)
      if (rng.uniform() < prob) ind[i] = 1;
    return CellSet(g, std::move(ind));
  };

  for (int trial = 0; trial < trials; ++trial) {
    {  // F inside the complement: joining F must not pay off
      const CellSet F = random_subset(outside);
      const double lhs = interaction(E, F, p.weights);
      const double rhs = interaction(set_difference(Ec, F), F, p.weights);
      const double v = relative_violation(lhs, rhs);
      if (v > rep.max_violation) rep.max_violation = v;
      if (v > 1e-9) ++rep.violations;
    }
    {  // F inside the set: carving F out must not pay off
      const CellSet F = random_subset(inside);
      const double lhs = interaction(Ec, F, p.weights);
      const double rhs = interaction(set_difference(E, F), F, p.weights);
      const double v = relative_violation(lhs, rhs);
      if (v > rep.max_violation) rep.max_violation = v;
      if (v > 1e-9) ++rep.violations;
    }
  }
  return rep;
}

std::vector<FlatnessRow> flatness_experiment(const KernelSpec& k, int dimension,
                                             const std::vector<int>& resolutions,
                                             const QuadratureConfig& q) {
  if (k.dimension != dimension) throw GridMismatch("kernel dimension mismatch");
  const AdmissibilityReport rep = check_admissibility(k, q);

  std::vector<FlatnessRow> rows;
  for (const int res : resolutions) {
    const double h = 1.0 / res;
    std::array<double, kMaxDim> lo{}, hi{};
    for (int a = 0; a < dimension; ++a) {
      lo[a] = -0.5;
      hi[a] = 0.5;
    }
    const GridSpec grid = grid_with_collar(dimension, h, lo, hi, k.truncation_radius);
    const CellSet omega = make_shape(ShapeSpec::box(lo, hi), grid);
    DomainMask dom = make_domain_mask(omega, k.truncation_radius);
    const CellSet halfspace = make_shape(ShapeSpec::halfspace(dimension - 1, 0.0), grid);
    PlateauProblem p =
        make_plateau_problem(std::move(dom), halfspace, build_weights(k, grid, q));
    const PlateauSolution sol = solve_exact(p);

    const CellSet participating = set_union(p.dom.omega, p.dom.collar);
    const CellSet reference = set_intersection(halfspace, participating);
    FlatnessRow row;
    row.resolution = res;
    row.symmetric_difference = symmetric_difference_count(sol.minimizer, reference);
    row.c4_holds = rep.C4;
    row.energy = sol.energy.j;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace nlperim
