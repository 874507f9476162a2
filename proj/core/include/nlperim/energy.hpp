#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "nlperim/grid.hpp"
#include "nlperim/kernel.hpp"

namespace nlperim {

/// Cell-pair quadrature weights w(o) ~ integral over cell x (cell+o) of
/// K(y-x), indexed by the integer offset o != 0 with |o| h <= R_trunc.
/// w(o) = w(-o) holds exactly by construction.
struct PairWeightTable {
  KernelSpec kernel;
  GridSpec grid;
  std::vector<std::array<int, kMaxDim>> offsets;  // lexicographic order
  std::vector<double> weights;
  std::vector<std::ptrdiff_t> deltas;  // row-major index shifts
  std::array<int, kMaxDim> max_extent{};
  double reach = 0.0;              // truncation radius at build time
  double offset_weight_sum = 0.0;  // sum of all w(o); interior row sum
};

/// Midpoint weights away from the diagonal; within the Chebyshev-2 band the
/// cell-pair integral is resolved with subcell_refinement^d points per cell.
/// Throws SingularWeightOverflow when a near-diagonal quadrature diverges.
PairWeightTable build_weights(const KernelSpec& k, const GridSpec& g, const QuadratureConfig& q);

/// Nonlocal interaction between two sets: sum of w(j-i) over i in E, j in F.
/// Symmetric in (E, F) and translation invariant, both exactly.
double interaction(const CellSet& E, const CellSet& F, const PairWeightTable& w);

struct EnergyBreakdown {
  double j1 = 0.0;      // 2 l_in
  double j2 = 0.0;      // l_out1 + l_out2
  double j = 0.0;       // j1/2 + j2
  double l_in = 0.0;    // coupling inside omega
  double l_out1 = 0.0;  // set in omega vs complement in the collar
  double l_out2 = 0.0;  // set in the collar vs complement in omega
};

/// Nonlocal perimeter of E relative to the mask; E beyond the collar is
/// ignored (zero contribution under the truncated kernel).
EnergyBreakdown nonlocal_perimeter(const CellSet& E, const DomainMask& dom,
                                   const PairWeightTable& w);

/// Energy of a [0,1]-valued field; coincides with nonlocal_perimeter
/// field-by-field when u is an indicator.
EnergyBreakdown nonlocal_energy(const PhaseField& u, const DomainMask& dom,
                                const PairWeightTable& w);

struct CoareaSides {
  double lhs = 0.0;  // J(u)
  double rhs = 0.0;  // sum over level gaps of gap * Per_K of the superlevel
};
/// Discrete coarea identity for piecewise-constant fields; levels must be
/// the distinct values of u. Throws NonFiniteLevels.
CoareaSides coarea_check(const PhaseField& u, const DomainMask& dom, const PairWeightTable& w,
                         std::vector<double> levels);

/// Per(E) + Per(F) - Per(E cap F) - Per(E cup F); >= 0 up to rounding.
double submodularity_gap(const CellSet& E, const CellSet& F, const DomainMask& dom,
                         const PairWeightTable& w);

struct LocalityDefectPoint {
  double epsilon = 0.0;
  double value = 0.0;  // (1/eps) L_{K_eps}(E, F)
};
/// Rescaled interactions of two disjoint sets along an epsilon list; weights
/// are rebuilt per epsilon. Throws SetsOverlap.
std::vector<LocalityDefectPoint> locality_defect(const CellSet& E, const CellSet& F,
                                                 const KernelSpec& k,
                                                 const std::vector<double>& eps_list,
                                                 const QuadratureConfig& q);

struct BvBound {
  double j1 = 0.0;
  double bound = 0.0;  // c'_K Per(E, Omega) (1 + tol)
};
/// BV comparison on a convex box window. Throws NonConvexDomain unless the
/// window shape is an axis-aligned box.
BvBound bv_bound_check(const ShapeSpec& set_shape, const ShapeSpec& window_box,
                       const PairWeightTable& w, const QuadratureConfig& q, double tol = 0.02);

}  // namespace nlperim
