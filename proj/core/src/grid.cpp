#include "nlperim/grid.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include "nlperim/errors.hpp"

namespace nlperim {

namespace {

void check_grid(const GridSpec& g) {
  if (g.dimension < 1 || g.dimension > kMaxDim)
    throw UnsupportedDimension("grid dimension must lie in [1, " + std::to_string(kMaxDim) + "]");
  if (!(g.cell_size > 0)) throw InvalidArgument("cell size must be positive");
  for (int a = 0; a < g.dimension; ++a)
    if (g.counts[a] < 1) throw InvalidArgument("cell counts must be >= 1");
  for (int a = g.dimension; a < kMaxDim; ++a)
    if (g.counts[a] != 1) throw InvalidArgument("unused axes must carry count 1");
}

double open_overlap(double a0, double a1, double b0, double b1) {
  return std::max(0.0, std::min(a1, b1) - std::max(a0, b0));
}

}  // namespace

std::size_t GridSpec::cell_count() const {
  std::size_t n = 1;
  for (int a = 0; a < kMaxDim; ++a) n *= static_cast<std::size_t>(counts[a]);
  return n;
}

std::size_t GridSpec::index(const std::array<int, kMaxDim>& c) const {
  std::size_t idx = 0;
  for (int a = 0; a < kMaxDim; ++a) idx = idx * counts[a] + c[a];
  return idx;
}

std::array<int, kMaxDim> GridSpec::coords(std::size_t index) const {
  std::array<int, kMaxDim> c{};
  for (int a = kMaxDim - 1; a >= 0; --a) {
    c[a] = static_cast<int>(index % counts[a]);
    index /= counts[a];
  }
  return c;
}

std::array<double, kMaxDim> GridSpec::center(const std::array<int, kMaxDim>& c) const {
  std::array<double, kMaxDim> x{};
  for (int a = 0; a < kMaxDim; ++a) x[a] = origin[a] + (c[a] + 0.5) * cell_size;
  return x;
}

std::array<double, kMaxDim> GridSpec::box_hi() const {
  std::array<double, kMaxDim> hi = origin;
  for (int a = 0; a < kMaxDim; ++a) hi[a] += counts[a] * cell_size;
  return hi;
}

GridSpec make_grid(int dimension, double cell_size, const std::array<double, kMaxDim>& origin,
                   const std::array<int, kMaxDim>& counts, std::size_t budget) {
  GridSpec g;
  g.dimension = dimension;
  g.cell_size = cell_size;
  g.origin = origin;
  g.counts = counts;
  for (int a = dimension; a < kMaxDim; ++a) {
    g.counts[a] = 1;
    g.origin[a] = 0.0;
  }
  check_grid(g);
  if (g.cell_count() > budget)
    throw BudgetExceeded(std::to_string(g.cell_count()) + " cells exceed budget " +
                         std::to_string(budget));
  return g;
}

GridSpec grid_covering(int dimension, double cell_size, const std::array<double, kMaxDim>& lo,
                       const std::array<double, kMaxDim>& hi, std::size_t budget) {
  std::array<int, kMaxDim> counts{1, 1, 1};
  for (int a = 0; a < dimension; ++a) {
    const double span = hi[a] - lo[a];
    if (!(span > 0)) throw InvalidArgument("box extents must be positive");
    const long long n = std::llround(span / cell_size);
    if (n < 1 || std::abs(n * cell_size - span) > 1e-9 * std::max(1.0, span))
      throw InvalidArgument("box extent is not an integer multiple of the cell size");
    counts[a] = static_cast<int>(n);
  }
  return make_grid(dimension, cell_size, lo, counts, budget);
}

GridSpec grid_with_collar(int dimension, double cell_size, const std::array<double, kMaxDim>& lo,
                          const std::array<double, kMaxDim>& hi, double reach, std::size_t budget) {
  const int margin = static_cast<int>(std::ceil(reach / cell_size - 1e-12));
  std::array<double, kMaxDim> lo2 = lo, hi2 = hi;
  for (int a = 0; a < dimension; ++a) {
    lo2[a] -= margin * cell_size;
    hi2[a] += margin * cell_size;
  }
  return grid_covering(dimension, cell_size, lo2, hi2, budget);
}

CellSet::CellSet(GridSpec grid, std::vector<std::uint8_t> indicator)
    : grid_(std::move(grid)), indicator_(std::move(indicator)) {
  if (indicator_.size() != grid_.cell_count())
    throw InvalidArgument("indicator length does not match the grid");
}

std::size_t CellSet::count() const {
  std::size_t n = 0;
  for (auto v : indicator_) n += v != 0;
  return n;
}

namespace {
void require_same_grid(const GridSpec& a, const GridSpec& b) {
  if (!(a == b)) throw GridMismatch("operands live on different grids");
}
}  // namespace

CellSet empty_set(const GridSpec& grid) {
  return CellSet(grid, std::vector<std::uint8_t>(grid.cell_count(), 0));
}

CellSet full_set(const GridSpec& grid) {
  return CellSet(grid, std::vector<std::uint8_t>(grid.cell_count(), 1));
}

CellSet set_union(const CellSet& a, const CellSet& b) {
  require_same_grid(a.grid(), b.grid());
  std::vector<std::uint8_t> ind(a.indicator());
  for (std::size_t i = 0; i < ind.size(); ++i) ind[i] = ind[i] | b.indicator()[i];
  return CellSet(a.grid(), std::move(ind));
}

CellSet set_intersection(const CellSet& a, const CellSet& b) {
  require_same_grid(a.grid(), b.grid());
  std::vector<std::uint8_t> ind(a.indicator());
  for (std::size_t i = 0; i < ind.size(); ++i) ind[i] = ind[i] & b.indicator()[i];
  return CellSet(a.grid(), std::move(ind));
}

CellSet set_difference(const CellSet& a, const CellSet& b) {
  require_same_grid(a.grid(), b.grid());
  std::vector<std::uint8_t> ind(a.indicator());
  for (std::size_t i = 0; i < ind.size(); ++i) ind[i] = ind[i] & static_cast<std::uint8_t>(!b.indicator()[i]);
  return CellSet(a.grid(), std::move(ind));
}

CellSet set_complement(const CellSet& a) {
  std::vector<std::uint8_t> ind(a.indicator());
  for (auto& v : ind) v = v ? 0 : 1;
  return CellSet(a.grid(), std::move(ind));
}

CellSet translate(const CellSet& a, const std::array<int, kMaxDim>& shift) {
  const GridSpec& g = a.grid();
  std::vector<std::uint8_t> ind(g.cell_count(), 0);
  for (std::size_t i = 0; i < ind.size(); ++i) {
    if (!a.contains(i)) continue;
    auto c = g.coords(i);
    bool in = true;
    for (int ax = 0; ax < kMaxDim; ++ax) {
      c[ax] += shift[ax];
      if (c[ax] < 0 || c[ax] >= g.counts[ax]) in = false;
    }
    if (!in) throw InvalidArgument("translation leaves the bounding box");
    ind[g.index(c)] = 1;
  }
  return CellSet(g, std::move(ind));
}

std::size_t symmetric_difference_count(const CellSet& a, const CellSet& b) {
  require_same_grid(a.grid(), b.grid());
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.indicator().size(); ++i)
    n += a.indicator()[i] != b.indicator()[i];
  return n;
}

double lebesgue_measure(const CellSet& s) {
  return static_cast<double>(s.count()) * std::pow(s.grid().cell_size, s.grid().dimension);
}

ShapeSpec ShapeSpec::halfspace(int axis, double offset) {
  ShapeSpec s;
  s.kind = Kind::Halfspace;
  s.axis = axis;
  s.offset = offset;
  return s;
}

ShapeSpec ShapeSpec::ball(const std::array<double, kMaxDim>& center, double radius) {
  ShapeSpec s;
  s.kind = Kind::Ball;
  s.center = center;
  s.radius = radius;
  return s;
}

ShapeSpec ShapeSpec::box(const std::array<double, kMaxDim>& lo, const std::array<double, kMaxDim>& hi) {
  ShapeSpec s;
  s.kind = Kind::Box;
  s.lo = lo;
  s.hi = hi;
  return s;
}

ShapeSpec ShapeSpec::annulus(const std::array<double, kMaxDim>& center, double r_in, double r_out) {
  ShapeSpec s;
  s.kind = Kind::Annulus;
  s.center = center;
  s.r_in = r_in;
  s.r_out = r_out;
  return s;
}

ShapeSpec ShapeSpec::custom_set(CellSet cells) {
  ShapeSpec s;
  s.kind = Kind::Custom;
  s.custom = std::make_shared<CellSet>(std::move(cells));
  return s;
}

namespace {

void check_shape(const ShapeSpec& s, int dimension) {
  switch (s.kind) {
    case ShapeSpec::Kind::Halfspace:
      if (s.axis < 0 || s.axis >= dimension) throw DegenerateShape("halfspace axis out of range");
      break;
    case ShapeSpec::Kind::Ball:
      if (!(s.radius > 0)) throw DegenerateShape("ball radius must be positive");
      break;
    case ShapeSpec::Kind::Box:
      for (int a = 0; a < dimension; ++a)
        if (!(s.hi[a] > s.lo[a])) throw DegenerateShape("box corners are inverted");
      break;
    case ShapeSpec::Kind::Annulus:
      if (!(s.r_out > s.r_in) || s.r_in < 0) throw DegenerateShape("annulus radii are inverted");
      break;
    case ShapeSpec::Kind::Custom:
      if (!s.custom) throw DegenerateShape("custom shape without cells");
      break;
  }
}

double sq_dist(const std::array<double, kMaxDim>& x, const std::array<double, kMaxDim>& c, int d) {
  double s = 0;
  for (int a = 0; a < d; ++a) s += (x[a] - c[a]) * (x[a] - c[a]);
  return s;
}

}  // namespace

CellSet make_shape(const ShapeSpec& shape, const GridSpec& grid) {
  check_shape(shape, grid.dimension);
  if (shape.kind == ShapeSpec::Kind::Custom) {
    if (!(shape.custom->grid() == grid)) throw GridMismatch("custom shape lives on another grid");
    return *shape.custom;
  }
  std::vector<std::uint8_t> ind(grid.cell_count(), 0);
  const int d = grid.dimension;
  for (std::size_t i = 0; i < ind.size(); ++i) {
    const auto x = grid.center(grid.coords(i));
    bool in = false;
    switch (shape.kind) {
      case ShapeSpec::Kind::Halfspace:
        in = x[shape.axis] < shape.offset;
        break;
      case ShapeSpec::Kind::Ball:
        in = sq_dist(x, shape.center, d) < shape.radius * shape.radius;
        break;
      case ShapeSpec::Kind::Box: {
        in = true;
        for (int a = 0; a < d; ++a) in = in && x[a] > shape.lo[a] && x[a] < shape.hi[a];
        break;
      }
      case ShapeSpec::Kind::Annulus: {
        const double r2 = sq_dist(x, shape.center, d);
        in = r2 > shape.r_in * shape.r_in && r2 < shape.r_out * shape.r_out;
        break;
      }
      case ShapeSpec::Kind::Custom:
        break;
    }
    ind[i] = in ? 1 : 0;
  }
  return CellSet(grid, std::move(ind));
}

namespace {

// H^1 length of the circle {c + r e(theta)} strictly inside the open box.
double circle_length_in_box(const std::array<double, kMaxDim>& c, double r,
                            const std::array<double, kMaxDim>& lo,
                            const std::array<double, kMaxDim>& hi) {
  std::vector<double> cuts = {0.0, 2.0 * std::numbers::pi};
  auto add_cos_cuts = [&](double t) {
    if (t > -1.0 && t < 1.0) {
      const double a = std::acos(t);
      cuts.push_back(a);
      cuts.push_back(2.0 * std::numbers::pi - a);
    }
  };
  auto add_sin_cuts = [&](double t) {
    if (t > -1.0 && t < 1.0) {
      double a = std::asin(t);
      if (a < 0) a += 2.0 * std::numbers::pi;
      cuts.push_back(a);
      double b = std::numbers::pi - std::asin(t);
      if (b < 0) b += 2.0 * std::numbers::pi;
      cuts.push_back(b);
    }
  };
  add_cos_cuts((lo[0] - c[0]) / r);
  add_cos_cuts((hi[0] - c[0]) / r);
  add_sin_cuts((lo[1] - c[1]) / r);
  add_sin_cuts((hi[1] - c[1]) / r);
  std::sort(cuts.begin(), cuts.end());
  double length = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
    const double x = c[0] + r * std::cos(mid);
    const double y = c[1] + r * std::sin(mid);
    if (x > lo[0] && x < hi[0] && y > lo[1] && y < hi[1]) length += cuts[i + 1] - cuts[i];
  }
  return r * length;
}

double sphere_measure_in_box(const std::array<double, kMaxDim>& c, double r,
                             const std::array<double, kMaxDim>& lo,
                             const std::array<double, kMaxDim>& hi, int d) {
  if (d == 1) {
    double m = 0.0;
    if (c[0] - r > lo[0] && c[0] - r < hi[0]) m += 1.0;
    if (c[0] + r > lo[0] && c[0] + r < hi[0]) m += 1.0;
    return m;
  }
  if (d == 2) return circle_length_in_box(c, r, lo, hi);
  // d == 3: closed forms for the untouched sphere and for cuts along a
  // single axis (spherical zone); anything else has no simple expression.
  int cut_axes = 0;
  int cut_axis = -1;
  for (int a = 0; a < 3; ++a) {
    if (c[a] - r < lo[a] || c[a] + r > hi[a]) {
      ++cut_axes;
      cut_axis = a;
    }
  }
  if (cut_axes == 0) return 4.0 * std::numbers::pi * r * r;
  if (cut_axes == 1) {
    const double zlo = std::max(lo[cut_axis], c[cut_axis] - r);
    const double zhi = std::min(hi[cut_axis], c[cut_axis] + r);
    return 2.0 * std::numbers::pi * r * std::max(0.0, zhi - zlo);
  }
  throw UnsupportedShape("sphere cut by several box faces in d=3");
}

}  // namespace

double classical_perimeter(const ShapeSpec& shape, const std::array<double, kMaxDim>& wlo,
                           const std::array<double, kMaxDim>& whi, int d) {
  check_shape(shape, d);
  switch (shape.kind) {
    case ShapeSpec::Kind::Halfspace: {
      if (!(shape.offset > wlo[shape.axis] && shape.offset < whi[shape.axis])) return 0.0;
      double m = 1.0;
      for (int a = 0; a < d; ++a)
        if (a != shape.axis) m *= whi[a] - wlo[a];
      return m;
    }
    case ShapeSpec::Kind::Ball:
      return sphere_measure_in_box(shape.center, shape.radius, wlo, whi, d);
    case ShapeSpec::Kind::Annulus:
      if (d != 2) throw UnsupportedShape("annulus perimeter only available in d=2");
      return circle_length_in_box(shape.center, shape.r_in, wlo, whi) +
             circle_length_in_box(shape.center, shape.r_out, wlo, whi);
    case ShapeSpec::Kind::Box: {
      double m = 0.0;
      for (int a = 0; a < d; ++a) {
        for (double plane : {shape.lo[a], shape.hi[a]}) {
          if (!(plane > wlo[a] && plane < whi[a])) continue;
          double face = 1.0;
          for (int b = 0; b < d; ++b)
            if (b != a) face *= open_overlap(shape.lo[b], shape.hi[b], wlo[b], whi[b]);
          m += face;
        }
      }
      return m;
    }
    case ShapeSpec::Kind::Custom:
      throw UnsupportedShape("no analytic perimeter for arbitrary indicators");
  }
  return 0.0;
}

double shared_boundary_measure(const ShapeSpec& shape, const std::array<double, kMaxDim>& wlo,
                               const std::array<double, kMaxDim>& whi, int d) {
  check_shape(shape, d);
  const double tol = 1e-12;
  switch (shape.kind) {
    case ShapeSpec::Kind::Halfspace: {
      const bool on_face = std::abs(shape.offset - wlo[shape.axis]) <= tol ||
                           std::abs(shape.offset - whi[shape.axis]) <= tol;
      if (!on_face) return 0.0;
      double m = 1.0;
      for (int a = 0; a < d; ++a)
        if (a != shape.axis) m *= whi[a] - wlo[a];
      return m;
    }
    case ShapeSpec::Kind::Ball:
    case ShapeSpec::Kind::Annulus:
      return 0.0;  // sphere meets a plane in measure zero
    case ShapeSpec::Kind::Box: {
      double m = 0.0;
      for (int a = 0; a < d; ++a) {
        for (double plane : {shape.lo[a], shape.hi[a]}) {
          if (std::abs(plane - wlo[a]) > tol && std::abs(plane - whi[a]) > tol) continue;
          double face = 1.0;
          for (int b = 0; b < d; ++b)
            if (b != a) face *= open_overlap(shape.lo[b], shape.hi[b], wlo[b], whi[b]);
          m += face;
        }
      }
      return m;
    }
    case ShapeSpec::Kind::Custom:
      throw UnsupportedShape("no analytic boundary for arbitrary indicators");
  }
  return 0.0;
}

std::vector<double> squared_cell_distances(const CellSet& sites) {
  const GridSpec& g = sites.grid();
  const std::size_t n = g.cell_count();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(n);
  for (std::size_t i = 0; i < n; ++i) dist[i] = sites.contains(i) ? 0.0 : inf;

  // Felzenszwalb-Huttenlocher lower envelope, one axis at a time. Cells with
  // no finite parabola keep distance infinity.
  auto transform_line = [inf](std::vector<double>& f) {
    const int m = static_cast<int>(f.size());
    std::vector<int> v(m);
    std::vector<double> z(m + 1);
    int k = -1;
    for (int q = 0; q < m; ++q) {
      if (f[q] == inf) continue;
      double s = 0.0;
      while (k >= 0) {
        const int p = v[k];
        s = ((f[q] + q * q) - (f[p] + p * p)) / (2.0 * (q - p));
        if (s <= z[k])
          --k;
        else
          break;
      }
      if (k < 0) {
        k = 0;
        v[0] = q;
        z[0] = -inf;
      } else {
        ++k;
        v[k] = q;
        z[k] = s;
      }
      z[k + 1] = inf;
    }
    if (k < 0) return;  // empty line
    std::vector<double> out(m);
    int j = 0;
    for (int q = 0; q < m; ++q) {
      while (z[j + 1] < q) ++j;
      const int p = v[j];
      out[q] = (q - p) * (q - p) + f[p];
    }
    f = out;
  };

  for (int axis = 0; axis < g.dimension; ++axis) {
    const int m = g.counts[axis];
    if (m == 1) continue;
    // stride of the axis and the number of independent lines
    std::size_t stride = 1;
    for (int a = axis + 1; a < kMaxDim; ++a) stride *= g.counts[a];
    const std::size_t lines = n / m;
    std::vector<double> line(m);
    for (std::size_t l = 0; l < lines; ++l) {
      // base index of line l: interleave the non-axis coordinates
      const std::size_t outer = l / stride;
      const std::size_t inner = l % stride;
      const std::size_t base = outer * stride * m + inner;
      for (int q = 0; q < m; ++q) line[q] = dist[base + q * stride];
      transform_line(line);
      for (int q = 0; q < m; ++q) dist[base + q * stride] = line[q];
    }
  }
  return dist;
}

DomainMask make_domain_mask(const CellSet& omega, double reach) {
  if (!(reach > 0)) throw InvalidArgument("collar reach must be positive");
  const GridSpec& g = omega.grid();
  DomainMask dom;
  dom.grid = g;
  dom.omega = omega;
  dom.collar_radius = reach;
  const auto dist2 = squared_cell_distances(omega);
  const double limit = (reach / g.cell_size) * (reach / g.cell_size) * (1.0 + 1e-12);
  std::vector<std::uint8_t> collar(g.cell_count(), 0);
  dom.region.assign(g.cell_count(), 0);
  for (std::size_t i = 0; i < collar.size(); ++i) {
    if (omega.contains(i)) {
      dom.region[i] = 1;
    } else if (dist2[i] <= limit) {
      collar[i] = 1;
      dom.region[i] = 2;
    }
  }
  dom.collar = CellSet(g, std::move(collar));
  return dom;
}

PhaseField::PhaseField(GridSpec grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != grid_.cell_count())
    throw InvalidArgument("phase field length does not match the grid");
  for (double v : values_)
    if (!(v >= 0.0 && v <= 1.0)) throw InvalidArgument("phase field values must lie in [0,1]");
}

PhaseField indicator_field(const CellSet& s) {
  std::vector<double> vals(s.indicator().size());
  for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = s.contains(i) ? 1.0 : 0.0;
  return PhaseField(s.grid(), std::move(vals));
}

CellSet superlevel_set(const PhaseField& u, double t) {
  std::vector<std::uint8_t> ind(u.values().size());
  for (std::size_t i = 0; i < ind.size(); ++i) ind[i] = u[i] > t ? 1 : 0;
  return CellSet(u.grid(), std::move(ind));
}

namespace {

void write_header(std::ostream& os, const GridSpec& g) {
  os << g.dimension << ' ';
  os.precision(17);
  os << g.cell_size;
  for (int a = 0; a < g.dimension; ++a) os << ' ' << g.counts[a];
  for (int a = 0; a < g.dimension; ++a) os << ' ' << g.origin[a];
  os << '\n';
}

GridSpec read_header(std::istream& is) {
  int d = 0;
  double h = 0;
  if (!(is >> d >> h)) throw IoError("cannot parse grid header");
  if (d < 1 || d > kMaxDim) throw IoError("unsupported dimension in grid header");
  std::array<int, kMaxDim> counts{1, 1, 1};
  std::array<double, kMaxDim> origin{};
  for (int a = 0; a < d; ++a)
    if (!(is >> counts[a])) throw IoError("cannot parse grid counts");
  for (int a = 0; a < d; ++a)
    if (!(is >> origin[a])) throw IoError("cannot parse grid origin");
  return make_grid(d, h, origin, counts);
}

std::size_t row_length(const GridSpec& g) {
  return static_cast<std::size_t>(g.counts[g.dimension - 1]);
}

}  // namespace

void write_cell_set(std::ostream& os, const CellSet& s) {
  write_header(os, s.grid());
  const std::size_t row = row_length(s.grid());
  const auto& ind = s.indicator();
  for (std::size_t i = 0; i < ind.size(); ++i) {
    os << (ind[i] ? '1' : '0');
    if ((i + 1) % row == 0) os << '\n';
  }
}

void write_cell_set(const std::string& path, const CellSet& s) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  write_cell_set(f, s);
}

CellSet read_cell_set(std::istream& is) {
  const GridSpec g = read_header(is);
  std::vector<std::uint8_t> ind;
  ind.reserve(g.cell_count());
  char c;
  while (ind.size() < g.cell_count() && is >> c) {
    if (c == '0')
      ind.push_back(0);
    else if (c == '1')
      ind.push_back(1);
    else
      throw IoError("unexpected character in cell bitmap");
  }
  if (ind.size() != g.cell_count()) throw IoError("truncated cell bitmap");
  return CellSet(g, std::move(ind));
}

CellSet read_cell_set(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open '" + path + "'");
  return read_cell_set(f);
}

void write_phase_field(std::ostream& os, const PhaseField& u) {
  write_header(os, u.grid());
  os.precision(17);
  const std::size_t row = row_length(u.grid());
  const auto& vals = u.values();
  for (std::size_t i = 0; i < vals.size(); ++i) {
    os << vals[i];
    os << (((i + 1) % row == 0) ? '\n' : ' ');
  }
}

void write_phase_field(const std::string& path, const PhaseField& u) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  write_phase_field(f, u);
}

PhaseField read_phase_field(std::istream& is) {
  const GridSpec g = read_header(is);
  std::vector<double> vals(g.cell_count());
  for (auto& v : vals)
    if (!(is >> v)) throw IoError("truncated phase field payload");
  return PhaseField(g, std::move(vals));
}

PhaseField read_phase_field(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open '" + path + "'");
  return read_phase_field(f);
}

}  // namespace nlperim
