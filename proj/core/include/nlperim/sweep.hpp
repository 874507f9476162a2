#pragma once

#include <span>
#include <vector>

#include "nlperim/energy.hpp"
#include "nlperim/grid.hpp"
#include "nlperim/kernel.hpp"

namespace nlperim {

/// One epsilon point of a rescaled-energy sweep.
struct SweepRecord {
  double epsilon = 0.0;
  double h = 0.0;         // grid step, epsilon / resolution_factor
  double ratio_j1 = 0.0;  // J1_eps / (2 eps)
  double ratio_j2 = 0.0;  // J2_eps / eps
  double ref_j1 = 0.0;    // c_K Per(E, Omega)
  double ref_j2 = 0.0;    // c_K H^{d-1}(boundary of E on boundary of Omega)
};

/// Rasterises E and Omega at h = eps/q per point, rescales the kernel and
/// fills both ratios and references. Omega must be a box shape with an
/// exact classical perimeter for E.
std::vector<SweepRecord> run_sweep(const ShapeSpec& set_shape, const ShapeSpec& omega_box,
                                   const KernelSpec& k, const std::vector<double>& eps_list,
                                   int resolution_factor, const QuadratureConfig& q,
                                   std::size_t cell_budget = kDefaultCellBudget);

struct ExtrapolationResult {
  double limit = 0.0;
  double slope = 0.0;
  double residual = 0.0;        // rms of the affine fit
  double relative_error = 0.0;  // vs the record reference (absolute when ref = 0)
};

enum class SweepChannel { J1, J2, Full };

/// Affine least-squares fit ratio ~ limit + slope*eps. Needs >= 3 distinct
/// epsilon values; throws InsufficientPoints otherwise.
ExtrapolationResult extrapolate(std::span<const SweepRecord> records,
                                SweepChannel channel = SweepChannel::J1);

struct LiminfRow {
  double epsilon = 0.0;
  double flat_ratio = 0.0;       // (1/2eps) J1_eps of the halfspace
  double perturbed_ratio = 0.0;  // same for the wiggled interface
};

/// Sinusoidal interface perturbations of amplitude a*eps against the flat
/// halfspace on the unit cube; the flat ratio should never be undercut.
std::vector<LiminfRow> liminf_probe(const KernelSpec& k, double amplitude,
                                    const std::vector<double>& eps_list, int resolution_factor,
                                    const QuadratureConfig& q,
                                    std::size_t cell_budget = kDefaultCellBudget);

}  // namespace nlperim
