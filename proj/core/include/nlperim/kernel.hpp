#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nlperim/quadrature.hpp"

namespace nlperim {

enum class KernelFamily { Gaussian, Exponential, BallIndicator, TruncatedFractional, TabulatedRadial };

/// Radial interaction kernel with truncation metadata. Values are
/// amplitude * profile(r / length_scale) for r <= truncation_radius and 0
/// beyond; rescaling by eps multiplies length_scale and truncation_radius by
/// eps and amplitude by eps^-d, which preserves the total mass.
struct KernelSpec {
  KernelFamily family = KernelFamily::Gaussian;
  int dimension = 2;
  double truncation_radius = 0.0;
  bool strictly_decreasing = false;

  double sigma = 0.0;      // Gaussian: exp(-(r/sigma)^2)
  double lambda = 0.0;     // Exponential: exp(-lambda r)
  double ball_radius = 0.0;
  double frac_s = 0.0;     // TruncatedFractional: r^-(1+s)
  double frac_rmin = 0.0;  // profile capped at rmin^-(1+s) below rmin
  std::vector<std::pair<double, double>> samples;  // TabulatedRadial, sorted by r

  double length_scale = 1.0;
  double amplitude = 1.0;
  std::string id;

  /// Profile value at radius r >= 0 (0 beyond the truncation radius).
  double radial(double r) const;
  /// Underlying family profile without the truncation cut (tail estimates).
  double radial_untruncated(double r) const;
};

KernelSpec make_gaussian(double sigma, int dimension, double truncation_radius = -1.0);
KernelSpec make_exponential(double lambda, int dimension, double truncation_radius = -1.0);
KernelSpec make_ball_indicator(double radius, int dimension);
KernelSpec make_fractional(double s, double rmin, double truncation_radius, int dimension);
KernelSpec make_tabulated(std::vector<std::pair<double, double>> samples, int dimension);

/// Parses catalog ids such as "gauss:sigma=1", "exp:lambda=1,R=12",
/// "ball:R=1", "frac:s=0.5,R=4". Throws UnknownKernel.
KernelSpec parse_kernel(const std::string& id, int dimension);

/// The ids exercised by the property suites.
const std::vector<std::string>& builtin_catalog();

/// Mass preserving rescaling eps^-d K(. / eps). Throws NonPositiveEpsilon.
KernelSpec rescale(const KernelSpec& k, double eps);

struct QuadratureConfig {
  int radial_nodes = 48;          // >= 16
  double tail_tolerance = 1e-6;   // in (0, 1e-3]
  int subcell_refinement = 32;    // >= 1, per-axis subdivisions near the diagonal
};
void validate(const QuadratureConfig& q);

struct AdmissibilityReport {
  bool C2 = false;        // K(h) min(1,|h|) integrable
  bool C2_prime = false;  // profile(r) r^d integrable on (0, R]
  bool C3 = false;        // radial
  bool C4 = false;        // strictly decreasing profile (sampled)
  double tail_bound = 0.0;  // discarded family mass of (1+|h|) beyond R
  bool tail_ok = false;
};
AdmissibilityReport check_admissibility(const KernelSpec& k, const QuadratureConfig& q);

struct KernelConstants {
  double c_K = 0.0;        // 1/2 integral K(h)|h_d| dh
  double c_prime_K = 0.0;  // integral K(h)|h| dh
  double alpha_1d = 0.0;   // surface average of |e_d . z| over the unit sphere
};

/// Computes the three limit constants. c_prime_K uses the 1-D radial
/// reduction, c_K an independent nested 2-D quadrature, alpha_1d a sphere
/// quadrature; the identity c_K = alpha_1d/2 * c_prime_K is verified and
/// QuadratureInconsistency is thrown when it fails.
KernelConstants compute_constants(const KernelSpec& k, const QuadratureConfig& q,
                                  double identity_rel_tol = 1e-6);

/// integral of K over R^d.
double kernel_mass(const KernelSpec& k, const QuadratureConfig& q);
/// integral of K(h) min(1, |h|) over R^d.
double kernel_min1_moment(const KernelSpec& k, const QuadratureConfig& q);

}  // namespace nlperim
