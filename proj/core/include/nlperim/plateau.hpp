#pragma once

#include <cstdint>
#include <vector>

#include "nlperim/energy.hpp"
#include "nlperim/grid.hpp"

namespace nlperim {

/// Minimise Per_K(., Omega) over sets with a prescribed trace on the collar.
struct PlateauProblem {
  DomainMask dom;
  CellSet boundary;  // trace of the prescribed exterior set on the collar
  PairWeightTable weights;
};

/// Intersects the trace with the collar and validates grids and reach.
PlateauProblem make_plateau_problem(DomainMask dom, const CellSet& exterior_trace,
                                    PairWeightTable weights);

enum class Certificate { ExactMinCut, ThresholdedRelaxation, Enumeration };

struct PlateauSolution {
  CellSet minimizer;  // boundary trace on the collar, labels on Omega
  EnergyBreakdown energy;
  Certificate certificate = Certificate::ExactMinCut;
};

/// Global minimiser by reduction to s-t min cut: one node per free cell,
/// pairwise capacities w(j-i), terminal capacities from the fixed collar.
/// Exact because the pairwise couplings are nonnegative (submodular energy).
PlateauSolution solve_exact(const PlateauProblem& p, std::size_t node_budget = 100000);

struct RelaxedSolution {
  PhaseField u;
  PlateauSolution thresholded;
  double t_star = 0.5;
  double smoothed_energy = 0.0;
  bool converged = true;
  double final_decrease = 0.0;  // relative drop over the last 10% of steps
};

/// Projected gradient descent on the smoothed energy (|t| -> sqrt(t^2+d^2)),
/// then a coarea threshold scan over 101 uniform levels plus the value set
/// of u. step_size 0 selects delta / (2 row-sum).
RelaxedSolution solve_relaxed(const PlateauProblem& p, double delta, int steps,
                              double step_size = 0.0, const PhaseField* init = nullptr);

struct OptimalityReport {
  int trials = 0;
  double max_violation = 0.0;  // relative, positive part
  int violations = 0;          // beyond 1e-9 relative
};

/// Random-competitor test of the minimiser variational inequalities.
OptimalityReport check_optimality(const PlateauSolution& sol, const PlateauProblem& p, int trials,
                                  std::uint64_t seed);

struct FlatnessRow {
  int resolution = 0;
  std::size_t symmetric_difference = 0;  // cells vs the discrete halfspace
  bool c4_holds = true;
  double energy = 0.0;
};

/// Plateau problem on the unit cube with halfspace trace, across resolutions.
std::vector<FlatnessRow> flatness_experiment(const KernelSpec& k, int dimension,
                                             const std::vector<int>& resolutions,
                                             const QuadratureConfig& q);

}  // namespace nlperim
