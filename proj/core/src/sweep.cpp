#include "nlperim/sweep.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include "nlperim/errors.hpp"

namespace nlperim {

std::vector<SweepRecord> run_sweep(const ShapeSpec& set_shape, const ShapeSpec& omega_box,
                                   const KernelSpec& k, const std::vector<double>& eps_list,
                                   int resolution_factor, const QuadratureConfig& q,
                                   std::size_t cell_budget) {
  if (omega_box.kind != ShapeSpec::Kind::Box)
    throw UnsupportedShape("sweep windows must be box shapes");
  if (resolution_factor < 8) throw InvalidArgument("resolution factor must be >= 8");
  const int d = k.dimension;
  const KernelConstants constants = compute_constants(k, q);
  const double per = classical_perimeter(set_shape, omega_box.lo, omega_box.hi, d);
  const double shared = shared_boundary_measure(set_shape, omega_box.lo, omega_box.hi, d);

  std::vector<SweepRecord> records;
  records.reserve(eps_list.size());
  for (const double eps : eps_list) {
    if (!(eps > 0)) throw NonPositiveEpsilon("sweep epsilon must be positive");
    const double h = eps / resolution_factor;
    const KernelSpec keps = rescale(k, eps);
    const GridSpec grid =
        grid_with_collar(d, h, omega_box.lo, omega_box.hi, keps.truncation_radius, cell_budget);
    const CellSet omega = make_shape(omega_box, grid);
    const DomainMask dom = make_domain_mask(omega, keps.truncation_radius);
    const CellSet cells = make_shape(set_shape, grid);
    const PairWeightTable w = build_weights(keps, grid, q);
    const EnergyBreakdown br = nonlocal_perimeter(cells, dom, w);

    SweepRecord rec;
    rec.epsilon = eps;
    rec.h = h;
    rec.ratio_j1 = br.j1 / (2.0 * eps);
    rec.ratio_j2 = br.j2 / eps;
    rec.ref_j1 = constants.c_K * per;
    rec.ref_j2 = constants.c_K * shared;
    records.push_back(rec);
  }
  return records;
}

ExtrapolationResult extrapolate(std::span<const SweepRecord> records, SweepChannel channel) {
  std::set<double> distinct;
  for (const auto& r : records) distinct.insert(r.epsilon);
  if (records.size() < 3 || distinct.size() < 3)
    throw InsufficientPoints("affine extrapolation needs >= 3 distinct epsilon values");

  auto value = [channel](const SweepRecord& r) {
    switch (channel) {
      case SweepChannel::J1:
        return r.ratio_j1;
      case SweepChannel::J2:
        return r.ratio_j2;
      case SweepChannel::Full:
        return r.ratio_j1 + r.ratio_j2;
    }
    return 0.0;
  };
  auto reference = [channel](const SweepRecord& r) {
    switch (channel) {
      case SweepChannel::J1:
        return r.ref_j1;
      case SweepChannel::J2:
        return r.ref_j2;
      case SweepChannel::Full:
        return r.ref_j1 + r.ref_j2;
    }
    return 0.0;
  };

  const double n = static_cast<double>(records.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& r : records) {
    sx += r.epsilon;
    sy += value(r);
    sxx += r.epsilon * r.epsilon;
    sxy += r.epsilon * value(r);
  }
  const double det = n * sxx - sx * sx;
  ExtrapolationResult out;
  out.slope = (n * sxy - sx * sy) / det;
  out.limit = (sy - out.slope * sx) / n;

  double ss = 0.0;
  for (const auto& r : records) {
    const double e = value(r) - (out.limit + out.slope * r.epsilon);
    ss += e * e;
  }
  out.residual = std::sqrt(ss / n);

  const double ref = reference(records[0]);
  out.relative_error = std::abs(ref) > 1e-300 ? std::abs(out.limit - ref) / std::abs(ref)
                                              : std::abs(out.limit - ref);
  return out;
}

std::vector<LiminfRow> liminf_probe(const KernelSpec& k, double amplitude,
                                    const std::vector<double>& eps_list, int resolution_factor,
                                    const QuadratureConfig& q, std::size_t cell_budget) {
  const int d = k.dimension;
  if (d < 2) throw UnsupportedDimension("interface perturbations need d >= 2");
  std::vector<LiminfRow> rows;
  rows.reserve(eps_list.size());

  std::array<double, kMaxDim> lo{}, hi{};
  for (int a = 0; a < d; ++a) {
    lo[a] = -0.5;
    hi[a] = 0.5;
  }

  for (const double eps : eps_list) {
    if (!(eps > 0)) throw NonPositiveEpsilon("probe epsilon must be positive");
    const double h = eps / resolution_factor;
    const KernelSpec keps = rescale(k, eps);
    const GridSpec grid = grid_with_collar(d, h, lo, hi, keps.truncation_radius, cell_budget);
    const CellSet omega = make_shape(ShapeSpec::box(lo, hi), grid);
    const DomainMask dom = make_domain_mask(omega, keps.truncation_radius);
    const PairWeightTable w = build_weights(keps, grid, q);

    const CellSet flat = make_shape(ShapeSpec::halfspace(d - 1, 0.0), grid);

    // interface displaced by a*eps*sin(2 pi x_1)
    std::vector<std::uint8_t> ind(grid.cell_count(), 0);
    for (std::size_t i = 0; i < ind.size(); ++i) {
      const auto x = grid.center(grid.coords(i));
      const double displacement = amplitude * eps * std::sin(2.0 * std::numbers::pi * x[0]);
      ind[i] = x[d - 1] < displacement ? 1 : 0;
    }
    const CellSet perturbed(grid, std::move(ind));

    LiminfRow row;
    row.epsilon = eps;
    row.flat_ratio = nonlocal_perimeter(flat, dom, w).j1 / (2.0 * eps);
    row.perturbed_ratio = nonlocal_perimeter(perturbed, dom, w).j1 / (2.0 * eps);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace nlperim
