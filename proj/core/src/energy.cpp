#include "nlperim/energy.hpp"

#include <algorithm>
#include <cmath>

#include "nlperim/errors.hpp"
#include "nlperim/parallel.hpp"

namespace nlperim {

namespace {

bool offset_within(const std::array<int, kMaxDim>& o, double h, double reach) {
  double s = 0.0;
  for (int a = 0; a < kMaxDim; ++a) s += static_cast<double>(o[a]) * o[a];
  return s * h * h <= reach * reach * (1.0 + 1e-12);
}

int chebyshev(const std::array<int, kMaxDim>& o) {
  int m = 0;
  for (int a = 0; a < kMaxDim; ++a) m = std::max(m, std::abs(o[a]));
  return m;
}

// Cell-pair integral by the subcell midpoint rule, collapsed over equal
// subcell differences: the pair count at difference delta is the tensor
// tent prod_a (m - |delta_a|).
double subcell_weight(const KernelSpec& k, const GridSpec& g,
                      const std::array<int, kMaxDim>& o, int m) {
  const int d = g.dimension;
  const double h = g.cell_size;
  std::array<int, kMaxDim> delta{};
  for (int a = 0; a < d; ++a) delta[a] = -(m - 1);
  double sum = 0.0;
  while (true) {
    double cnt = 1.0, r2 = 0.0;
    for (int a = 0; a < d; ++a) {
      cnt *= m - std::abs(delta[a]);
      const double comp = (o[a] + static_cast<double>(delta[a]) / m) * h;
      r2 += comp * comp;
    }
    sum += cnt * k.radial(std::sqrt(r2));
    int a = d - 1;
    while (a >= 0) {
      if (++delta[a] <= m - 1) break;
      delta[a] = -(m - 1);
      --a;
    }
    if (a < 0) break;
  }
  return sum * std::pow(h / m, 2.0 * d);
}

}  // namespace

PairWeightTable build_weights(const KernelSpec& k, const GridSpec& g, const QuadratureConfig& q) {
  validate(q);
  if (k.dimension != g.dimension)
    throw GridMismatch("kernel dimension does not match the grid");
  PairWeightTable table;
  table.kernel = k;
  table.grid = g;
  table.reach = k.truncation_radius;
  const int d = g.dimension;
  const double h = g.cell_size;
  const int ext = static_cast<int>(std::floor(k.truncation_radius / h * (1.0 + 1e-12)));
  for (int a = 0; a < d; ++a) table.max_extent[a] = ext;

  std::array<int, kMaxDim> o{};
  std::array<int, kMaxDim> lo{}, hi{};
  for (int a = 0; a < d; ++a) {
    lo[a] = -ext;
    hi[a] = ext;
  }
  for (int a = 0; a < d; ++a) o[a] = lo[a];

  std::array<std::ptrdiff_t, kMaxDim> stride{};
  stride[kMaxDim - 1] = 1;
  for (int a = kMaxDim - 2; a >= 0; --a) stride[a] = stride[a + 1] * g.counts[a + 1];

  const double h2d = std::pow(h, 2.0 * d);
  while (true) {
    bool zero = true;
    for (int a = 0; a < d; ++a) zero = zero && o[a] == 0;
    if (!zero && offset_within(o, h, k.truncation_radius)) {
      double w;
      // Mirror offsets copy the already computed weight so evenness holds
      // bit for bit; the canonical representative has positive leading
      // nonzero component and is generated first in lexicographic order.
      bool canonical = false;
      for (int a = 0; a < d; ++a) {
        if (o[a] != 0) {
          canonical = o[a] > 0;
          break;
        }
      }
      if (!canonical) {
        w = std::numeric_limits<double>::quiet_NaN();  // filled from mirror below
      } else if (chebyshev(o) <= 2) {
        const int m = q.subcell_refinement;
        w = subcell_weight(k, g, o, m);
        if (chebyshev(o) <= 1 && m >= 4) {
          const double coarse = subcell_weight(k, g, o, m / 2);
          if (!(w <= 1.3 * coarse + 1e-300))
            throw SingularWeightOverflow("near-diagonal weight does not stabilise");
        }
        if (!std::isfinite(w)) throw SingularWeightOverflow("non-finite near-diagonal weight");
      } else {
        double r2 = 0.0;
        for (int a = 0; a < d; ++a) r2 += static_cast<double>(o[a]) * o[a];
        w = k.radial(std::sqrt(r2) * h) * h2d;
        if (!std::isfinite(w)) throw SingularWeightOverflow("non-finite midpoint weight");
      }
      std::ptrdiff_t delta = 0;
      for (int a = 0; a < d; ++a) delta += o[a] * stride[a];
      table.offsets.push_back(o);
      table.weights.push_back(w);
      table.deltas.push_back(delta);
    }
    int a = d - 1;
    while (a >= 0) {
      if (++o[a] <= hi[a]) break;
      o[a] = lo[a];
      --a;
    }
    if (a < 0) break;
  }

  // Fill mirrored weights; offsets are lexicographic, so -o is located by
  // binary search.
  for (std::size_t i = 0; i < table.offsets.size(); ++i) {
    if (!std::isnan(table.weights[i])) continue;
    std::array<int, kMaxDim> neg{};
    for (int a = 0; a < kMaxDim; ++a) neg[a] = -table.offsets[i][a];
    const auto it = std::lower_bound(table.offsets.begin(), table.offsets.end(), neg);
    table.weights[i] = table.weights[static_cast<std::size_t>(it - table.offsets.begin())];
  }

  std::vector<double> ws = table.weights;
  table.offset_weight_sum = pairwise_sum(ws);
  return table;
}

namespace {

struct IndexBox {
  std::array<int, kMaxDim> lo{};
  std::array<int, kMaxDim> hi{};  // inclusive
  bool empty = true;
};

IndexBox index_bbox(const CellSet& s) {
  IndexBox b;
  const GridSpec& g = s.grid();
  for (std::size_t i = 0; i < s.indicator().size(); ++i) {
    if (!s.contains(i)) continue;
    const auto c = g.coords(i);
    if (b.empty) {
      b.lo = b.hi = c;
      b.empty = false;
    } else {
      for (int a = 0; a < kMaxDim; ++a) {
        b.lo[a] = std::min(b.lo[a], c[a]);
        b.hi[a] = std::max(b.hi[a], c[a]);
      }
    }
  }
  return b;
}

bool offset_connects(const std::array<int, kMaxDim>& o, const IndexBox& from, const IndexBox& to) {
  if (from.empty || to.empty) return false;
  for (int a = 0; a < kMaxDim; ++a)
    if (from.lo[a] + o[a] > to.hi[a] || from.hi[a] + o[a] < to.lo[a]) return false;
  return true;
}

void require_table_grid(const GridSpec& g, const PairWeightTable& w) {
  if (!(g == w.grid)) throw GridMismatch("weight table built for another grid");
}

}  // namespace

double interaction(const CellSet& E, const CellSet& F, const PairWeightTable& w) {
  require_table_grid(E.grid(), w);
  require_table_grid(F.grid(), w);
  const GridSpec& g = w.grid;

  const IndexBox be = index_bbox(E);
  const IndexBox bf = index_bbox(F);
  if (be.empty || bf.empty) return 0.0;

  // Offsets that cannot connect the two index bounding boxes in either
  // direction contribute exact zeros and are dropped up front.
  std::vector<std::size_t> active;
  active.reserve(w.offsets.size());
  for (std::size_t oi = 0; oi < w.offsets.size(); ++oi)
    if (offset_connects(w.offsets[oi], be, bf) || offset_connects(w.offsets[oi], bf, be))
      active.push_back(oi);

  std::vector<std::size_t> cells;
  for (std::size_t i = 0; i < g.cell_count(); ++i)
    if (E.contains(i) || F.contains(i)) cells.push_back(i);

  const auto& ind_e = E.indicator();
  const auto& ind_f = F.indicator();
  std::vector<double> percell(cells.size(), 0.0);
  parallel::for_range(cells.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t ci = b; ci < e; ++ci) {
      const std::size_t i = cells[ci];
      const auto c = g.coords(i);
      const bool in_e = ind_e[i] != 0;
      const bool in_f = ind_f[i] != 0;
      double to_f = 0.0, to_e = 0.0;
      for (const std::size_t oi : active) {
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
        const std::size_t jj = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(i) + w.deltas[oi]);
        if (in_e && ind_f[jj]) to_f += w.weights[oi];
        if (in_f && ind_e[jj]) to_e += w.weights[oi];
      }
      percell[ci] = 0.5 * (to_f + to_e);
    }
  });
  return pairwise_sum(percell);
}

namespace {

struct MaskContext {
  std::vector<std::size_t> omega_cells;
  bool interior = false;  // every omega cell keeps all offsets inside the box
};

MaskContext mask_context(const DomainMask& dom, const PairWeightTable& w) {
  MaskContext ctx;
  const GridSpec& g = dom.grid;
  IndexBox bb;
  for (std::size_t i = 0; i < g.cell_count(); ++i) {
    if (dom.region[i] != 1) continue;
    ctx.omega_cells.push_back(i);
    const auto c = g.coords(i);
    if (bb.empty) {
      bb.lo = bb.hi = c;
      bb.empty = false;
    } else {
      for (int a = 0; a < kMaxDim; ++a) {
        bb.lo[a] = std::min(bb.lo[a], c[a]);
        bb.hi[a] = std::max(bb.hi[a], c[a]);
      }
    }
  }
  if (!bb.empty) {
    ctx.interior = true;
    for (int a = 0; a < g.dimension; ++a) {
      if (bb.lo[a] - w.max_extent[a] < 0 || bb.hi[a] + w.max_extent[a] >= g.counts[a])
        ctx.interior = false;
    }
  }
  return ctx;
}

}  // namespace

EnergyBreakdown nonlocal_energy(const PhaseField& u, const DomainMask& dom,
                                const PairWeightTable& w) {
  require_table_grid(u.grid(), w);
  require_table_grid(dom.grid, w);
  if (w.reach > dom.collar_radius * (1.0 + 1e-12))
    throw CollarTooSmall("kernel reach exceeds the collar radius");

  const GridSpec& g = dom.grid;
  const MaskContext ctx = mask_context(dom, w);
  const std::size_t n = ctx.omega_cells.size();
  std::vector<double> acc_in(n, 0.0), acc_o1(n, 0.0), acc_o2(n, 0.0);
  const auto& region = dom.region;
  const auto& vals = u.values();
  const std::size_t n_off = w.offsets.size();

  parallel::for_range(n, [&](std::size_t b, std::size_t e) {
    for (std::size_t ci = b; ci < e; ++ci) {
      const std::size_t i = ctx.omega_cells[ci];
      const double ui = vals[i];
      double s_in = 0.0, s_o1 = 0.0, s_o2 = 0.0;
      if (ctx.interior) {
        for (std::size_t oi = 0; oi < n_off; ++oi) {
          const std::size_t jj =
              static_cast<std::size_t>(static_cast<std::ptrdiff_t>(i) + w.deltas[oi]);
          const std::uint8_t reg = region[jj];
          if (reg == 0) continue;
          const double diff = ui - vals[jj];
          if (reg == 1) {
            s_in += w.weights[oi] * std::abs(diff);
          } else {
            s_o1 += w.weights[oi] * std::max(diff, 0.0);
            s_o2 += w.weights[oi] * std::max(-diff, 0.0);
          }
        }
      } else {
        const auto c = g.coords(i);
        for (std::size_t oi = 0; oi < n_off; ++oi) {
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
          const std::uint8_t reg = region[jj];
          if (reg == 0) continue;
          const double diff = ui - vals[jj];
          if (reg == 1) {
            s_in += w.weights[oi] * std::abs(diff);
          } else {
            s_o1 += w.weights[oi] * std::max(diff, 0.0);
            s_o2 += w.weights[oi] * std::max(-diff, 0.0);
          }
        }
      }
      acc_in[ci] = 0.5 * s_in;
      acc_o1[ci] = s_o1;
      acc_o2[ci] = s_o2;
    }
  });

  EnergyBreakdown out;
  out.l_in = pairwise_sum(acc_in);
  out.l_out1 = pairwise_sum(acc_o1);
  out.l_out2 = pairwise_sum(acc_o2);
  out.j1 = 2.0 * out.l_in;
  out.j2 = out.l_out1 + out.l_out2;
  out.j = 0.5 * out.j1 + out.j2;
  return out;
}

EnergyBreakdown nonlocal_perimeter(const CellSet& E, const DomainMask& dom,
                                   const PairWeightTable& w) {
  require_table_grid(E.grid(), w);
  return nonlocal_energy(indicator_field(E), dom, w);
}

CoareaSides coarea_check(const PhaseField& u, const DomainMask& dom, const PairWeightTable& w,
                         std::vector<double> levels) {
  for (double t : levels)
    if (!std::isfinite(t)) throw NonFiniteLevels("level list contains a non-finite value");
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  CoareaSides sides;
  sides.lhs = nonlocal_energy(u, dom, w).j;

  // Segment [0,1] by the distinct values; Per_K of the superlevel set is
  // constant on each open gap.
  std::vector<double> knots = {0.0};
  for (double t : levels)
    if (t > 0.0 && t < 1.0) knots.push_back(t);
  knots.push_back(1.0);
  double rhs = 0.0;
  for (std::size_t s = 0; s + 1 < knots.size(); ++s) {
    const double width = knots[s + 1] - knots[s];
    if (width <= 0.0) continue;
    const double t_mid = 0.5 * (knots[s] + knots[s + 1]);
    const CellSet level = superlevel_set(u, t_mid);
    rhs += width * nonlocal_perimeter(level, dom, w).j;
  }
  sides.rhs = rhs;
  return sides;
}

double submodularity_gap(const CellSet& E, const CellSet& F, const DomainMask& dom,
                         const PairWeightTable& w) {
  const double pe = nonlocal_perimeter(E, dom, w).j;
  const double pf = nonlocal_perimeter(F, dom, w).j;
  const double pi = nonlocal_perimeter(set_intersection(E, F), dom, w).j;
  const double pu = nonlocal_perimeter(set_union(E, F), dom, w).j;
  // paired so that identical evaluations cancel exactly (F = E, nested sets)
  return (pe - pi) + (pf - pu);
}

std::vector<LocalityDefectPoint> locality_defect(const CellSet& E, const CellSet& F,
                                                 const KernelSpec& k,
                                                 const std::vector<double>& eps_list,
                                                 const QuadratureConfig& q) {
  if (!(E.grid() == F.grid())) throw GridMismatch("sets live on different grids");
  if (set_intersection(E, F).count() != 0) throw SetsOverlap("locality defect needs disjoint sets");
  std::vector<LocalityDefectPoint> out;
  out.reserve(eps_list.size());
  for (double eps : eps_list) {
    const KernelSpec keps = rescale(k, eps);
    const PairWeightTable w = build_weights(keps, E.grid(), q);
    out.push_back({eps, interaction(E, F, w) / eps});
  }
  return out;
}

BvBound bv_bound_check(const ShapeSpec& set_shape, const ShapeSpec& window_box,
                       const PairWeightTable& w, const QuadratureConfig& q, double tol) {
  if (window_box.kind != ShapeSpec::Kind::Box)
    throw NonConvexDomain("only axis-aligned box windows are accepted");
  const GridSpec& g = w.grid;
  const CellSet omega = make_shape(window_box, g);
  const DomainMask dom = make_domain_mask(omega, w.reach);
  const CellSet cells = make_shape(set_shape, g);
  BvBound out;
  out.j1 = nonlocal_perimeter(cells, dom, w).j1;
  const KernelConstants c = compute_constants(w.kernel, q);
  const double per = classical_perimeter(set_shape, window_box.lo, window_box.hi, g.dimension);
  out.bound = c.c_prime_K * per * (1.0 + tol);
  return out;
}

}  // namespace nlperim
