#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

namespace nlperim {

inline constexpr int kMaxDim = 3;
inline constexpr std::size_t kDefaultCellBudget = std::size_t{1} << 23;

/// Uniform axis-aligned voxel grid. Unused axes carry count 1.
struct GridSpec {
  int dimension = 0;
  double cell_size = 0.0;
  std::array<double, kMaxDim> origin{};
  std::array<int, kMaxDim> counts{1, 1, 1};

  std::size_t cell_count() const;
  std::size_t index(const std::array<int, kMaxDim>& c) const;
  std::array<int, kMaxDim> coords(std::size_t index) const;
  std::array<double, kMaxDim> center(const std::array<int, kMaxDim>& c) const;
  std::array<double, kMaxDim> box_lo() const { return origin; }
  std::array<double, kMaxDim> box_hi() const;
  bool operator==(const GridSpec&) const = default;
};

GridSpec make_grid(int dimension, double cell_size, const std::array<double, kMaxDim>& origin,
                   const std::array<int, kMaxDim>& counts, std::size_t budget = kDefaultCellBudget);

/// Grid spanning [lo, hi] exactly; the extents must be integer multiples of h.
GridSpec grid_covering(int dimension, double cell_size, const std::array<double, kMaxDim>& lo,
                       const std::array<double, kMaxDim>& hi, std::size_t budget = kDefaultCellBudget);

/// Same box dilated by margin cells per axis (>= reach/h).
GridSpec grid_with_collar(int dimension, double cell_size, const std::array<double, kMaxDim>& lo,
                          const std::array<double, kMaxDim>& hi, double reach,
                          std::size_t budget = kDefaultCellBudget);

/// Immutable cell indicator on a grid.
class CellSet {
public:
  CellSet() = default;
  CellSet(GridSpec grid, std::vector<std::uint8_t> indicator);

  const GridSpec& grid() const { return grid_; }
  bool contains(std::size_t index) const { return indicator_[index] != 0; }
  const std::vector<std::uint8_t>& indicator() const { return indicator_; }
  std::size_t count() const;
  bool operator==(const CellSet&) const = default;

private:
  GridSpec grid_;
  std::vector<std::uint8_t> indicator_;
};

CellSet empty_set(const GridSpec& grid);
CellSet full_set(const GridSpec& grid);
CellSet set_union(const CellSet& a, const CellSet& b);
CellSet set_intersection(const CellSet& a, const CellSet& b);
CellSet set_difference(const CellSet& a, const CellSet& b);
CellSet set_complement(const CellSet& a);  // within the bounding box
CellSet translate(const CellSet& a, const std::array<int, kMaxDim>& shift);
std::size_t symmetric_difference_count(const CellSet& a, const CellSet& b);

/// (number of set cells) * h^d.
double lebesgue_measure(const CellSet& s);

/// Analytic reference shapes.
struct ShapeSpec {
  enum class Kind { Halfspace, Ball, Box, Annulus, Custom };
  Kind kind = Kind::Halfspace;
  int axis = 0;          // halfspace normal axis
  double offset = 0.0;   // halfspace: x_axis < offset
  std::array<double, kMaxDim> center{};
  double radius = 0.0;
  std::array<double, kMaxDim> lo{};
  std::array<double, kMaxDim> hi{};
  double r_in = 0.0, r_out = 0.0;
  std::shared_ptr<const CellSet> custom;

  static ShapeSpec halfspace(int axis, double offset);
  static ShapeSpec ball(const std::array<double, kMaxDim>& center, double radius);
  static ShapeSpec box(const std::array<double, kMaxDim>& lo, const std::array<double, kMaxDim>& hi);
  static ShapeSpec annulus(const std::array<double, kMaxDim>& center, double r_in, double r_out);
  static ShapeSpec custom_set(CellSet cells);
};

/// Rasterizes by the cell-center (midpoint) rule. Throws DegenerateShape.
CellSet make_shape(const ShapeSpec& shape, const GridSpec& grid);

/// Exact H^{d-1} measure of the reduced boundary of an analytic shape inside
/// the open box (window_lo, window_hi). Throws UnsupportedShape for Custom
/// shapes and for configurations without a closed form.
double classical_perimeter(const ShapeSpec& shape, const std::array<double, kMaxDim>& window_lo,
                           const std::array<double, kMaxDim>& window_hi, int dimension);

/// H^{d-1} measure of the part of the shape boundary lying on the window
/// boundary (0 for transversal configurations).
double shared_boundary_measure(const ShapeSpec& shape, const std::array<double, kMaxDim>& window_lo,
                               const std::array<double, kMaxDim>& window_hi, int dimension);

/// Omega cells plus the exterior collar reachable within `reach`.
struct DomainMask {
  GridSpec grid;
  CellSet omega;
  CellSet collar;
  double collar_radius = 0.0;
  std::vector<std::uint8_t> region;  // 0 outside, 1 omega, 2 collar
};
DomainMask make_domain_mask(const CellSet& omega, double reach);

/// Squared Euclidean distance (in cell units) to the nearest set cell.
std::vector<double> squared_cell_distances(const CellSet& sites);

/// Grid function with values in [0, 1].
class PhaseField {
public:
  PhaseField() = default;
  PhaseField(GridSpec grid, std::vector<double> values);

  const GridSpec& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }

private:
  GridSpec grid_;
  std::vector<double> values_;
};

PhaseField indicator_field(const CellSet& s);
CellSet superlevel_set(const PhaseField& u, double t);  // {u > t}

// Portable text formats: header "d h n1..nd o1..od", then row-major payload.
void write_cell_set(std::ostream& os, const CellSet& s);
void write_cell_set(const std::string& path, const CellSet& s);
CellSet read_cell_set(std::istream& is);
CellSet read_cell_set(const std::string& path);
void write_phase_field(std::ostream& os, const PhaseField& u);
void write_phase_field(const std::string& path, const PhaseField& u);
PhaseField read_phase_field(std::istream& is);
PhaseField read_phase_field(const std::string& path);

}  // namespace nlperim
