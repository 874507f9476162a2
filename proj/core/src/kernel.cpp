#include "nlperim/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "nlperim/errors.hpp"
#include "nlperim/parallel.hpp"

namespace nlperim {

namespace {

std::string format_value(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

double profile_value(const KernelSpec& k, double rb) {
  switch (k.family) {
    case KernelFamily::Gaussian: {
      const double t = rb / k.sigma;
      return std::exp(-t * t);
    }
    case KernelFamily::Exponential:
      return std::exp(-k.lambda * rb);
    case KernelFamily::BallIndicator:
      return rb <= k.ball_radius ? 1.0 : 0.0;
    case KernelFamily::TruncatedFractional: {
      const double t = std::max(rb, k.frac_rmin);
      if (t == 0.0) return std::numeric_limits<double>::infinity();
      return std::pow(t, -(1.0 + k.frac_s));
    }
    case KernelFamily::TabulatedRadial: {
      const auto& s = k.samples;
      if (s.empty()) return 0.0;
      if (rb <= s.front().first) return s.front().second;
      if (rb >= s.back().first) return rb > s.back().first ? 0.0 : s.back().second;
      auto it = std::upper_bound(s.begin(), s.end(), rb,
                                 [](double r, const auto& p) { return r < p.first; });
      const auto& hi = *it;
      const auto& lo = *(it - 1);
      const double w = (rb - lo.first) / (hi.first - lo.first);
      return lo.second + w * (hi.second - lo.second);
    }
  }
  return 0.0;
}

void validate_common(const KernelSpec& k) {
  if (k.dimension < 1) throw UnsupportedDimension("kernel dimension must be >= 1");
  if (!(k.truncation_radius > 0)) throw InvalidArgument("truncation radius must be positive");
}

// Sample radii in (0, R]: uniform grid plus geometric refinement near 0.
std::vector<double> sample_radii(double R) {
  std::vector<double> rs;
  rs.reserve(512 + 44);
  for (int j = 44; j >= 1; --j) rs.push_back(R * std::ldexp(1.0, -j));
  for (int i = 1; i <= 512; ++i) rs.push_back(R * i / 512.0);
  std::sort(rs.begin(), rs.end());
  rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
  return rs;
}

double surface_sphere(int d) { return d * unit_ball_volume(d); }

// integral over S^{d-1} of |z_d| dH^{d-1}, by quadrature in the polar angle.
double sphere_abs_last_component(int d, int gl_order) {
  if (d == 1) return 2.0;
  const double sigma_sub = (d - 1) * unit_ball_volume(d - 1);
  const auto& rule = gauss_legendre(gl_order);
  const Fn1 f = [d](double phi) {
    return std::abs(std::cos(phi)) * std::pow(std::sin(phi), d - 2);
  };
  const double half = std::numbers::pi / 2.0;
  return sigma_sub * (gl_panel(f, 0.0, half, rule) + gl_panel(f, half, 2.0 * half, rule));
}

// Nested 2-D quadrature of the half-plane reduction of integral K(h) h_d dh
// over {rho, t >= 0, rho^2 + t^2 <= R^2}; independent of the radial route.
double nested_quarter_disc(const KernelSpec& k, int gl_order) {
  const double R = k.truncation_radius;
  const int d = k.dimension;
  const auto& rule = gauss_legendre(gl_order);
  const auto inner_panels_cache = geometric_panels(0.0, 1.0, 36, true, false);
  const Fn1 outer = [&](double rho) {
    const double T = std::sqrt(std::max(0.0, R * R - rho * rho));
    if (T <= 0.0) return 0.0;
    const Fn1 inner = [&](double u) {
      const double t = u * T;  // map [0,1] -> [0,T]
      return k.radial(std::hypot(rho, t)) * t;
    };
    const double it = T * integrate_panels(inner, inner_panels_cache, rule);
    return (d == 2 ? 1.0 : std::pow(rho, d - 2)) * it;
  };
  const auto outer_panels = geometric_panels(0.0, R, 40, true, true);
  return integrate_panels(outer, outer_panels, rule);
}

}  // namespace

double KernelSpec::radial(double r) const {
  if (r > truncation_radius * (1.0 + 1e-15)) return 0.0;
  return amplitude * profile_value(*this, r / length_scale);
}

double KernelSpec::radial_untruncated(double r) const {
  return amplitude * profile_value(*this, r / length_scale);
}

KernelSpec make_gaussian(double sigma, int dimension, double truncation_radius) {
  if (!(sigma > 0)) throw InvalidArgument("gaussian sigma must be positive");
  KernelSpec k;
  k.family = KernelFamily::Gaussian;
  k.dimension = dimension;
  k.sigma = sigma;
  k.truncation_radius = truncation_radius > 0 ? truncation_radius : 6.0 * sigma;
  k.strictly_decreasing = true;
  k.id = "gauss:sigma=" + format_value(sigma);
  validate_common(k);
  return k;
}

KernelSpec make_exponential(double lambda, int dimension, double truncation_radius) {
  if (!(lambda > 0)) throw InvalidArgument("exponential rate must be positive");
  KernelSpec k;
  k.family = KernelFamily::Exponential;
  k.dimension = dimension;
  k.lambda = lambda;
  k.truncation_radius = truncation_radius > 0 ? truncation_radius : 30.0 / lambda;
  k.strictly_decreasing = true;
  k.id = "exp:lambda=" + format_value(lambda);
  validate_common(k);
  return k;
}

KernelSpec make_ball_indicator(double radius, int dimension) {
  if (!(radius > 0)) throw InvalidArgument("ball kernel radius must be positive");
  KernelSpec k;
  k.family = KernelFamily::BallIndicator;
  k.dimension = dimension;
  k.ball_radius = radius;
  k.truncation_radius = radius;
  k.strictly_decreasing = false;
  k.id = "ball:R=" + format_value(radius);
  validate_common(k);
  return k;
}

KernelSpec make_fractional(double s, double rmin, double truncation_radius, int dimension) {
  if (!(s > 0 && s < 1)) throw InvalidArgument("fractional order must lie in (0,1)");
  if (rmin < 0) throw InvalidArgument("fractional rmin must be >= 0");
  KernelSpec k;
  k.family = KernelFamily::TruncatedFractional;
  k.dimension = dimension;
  k.frac_s = s;
  k.frac_rmin = rmin;
  k.truncation_radius = truncation_radius;
  k.strictly_decreasing = rmin == 0.0;
  k.id = "frac:s=" + format_value(s) + (rmin > 0 ? ",rmin=" + format_value(rmin) : "") +
         ",R=" + format_value(truncation_radius);
  validate_common(k);
  return k;
}

KernelSpec make_tabulated(std::vector<std::pair<double, double>> samples, int dimension) {
  if (samples.size() < 2) throw InvalidArgument("tabulated kernel needs >= 2 samples");
  std::sort(samples.begin(), samples.end());
  for (const auto& [r, v] : samples) {
    if (r < 0) throw InvalidArgument("tabulated radius must be >= 0");
    if (!std::isfinite(v) || v < 0) throw NonFiniteKernelValue("tabulated sample at r=" + format_value(r));
  }
  KernelSpec k;
  k.family = KernelFamily::TabulatedRadial;
  k.dimension = dimension;
  k.truncation_radius = samples.back().first;
  k.samples = std::move(samples);
  k.strictly_decreasing = true;
  for (std::size_t i = 1; i < k.samples.size(); ++i)
    if (!(k.samples[i - 1].second > k.samples[i].second)) k.strictly_decreasing = false;
  k.id = "tab:n=" + std::to_string(k.samples.size());
  validate_common(k);
  return k;
}

namespace {

std::vector<std::pair<std::string, double>> parse_params(const std::string& body) {
  std::vector<std::pair<std::string, double>> out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UnknownKernel("malformed kernel parameter '" + item + "'");
    const std::string key = item.substr(0, eq);
    try {
      out.emplace_back(key, std::stod(item.substr(eq + 1)));
    } catch (const std::exception&) {
      throw UnknownKernel("malformed kernel parameter '" + item + "'");
    }
  }
  return out;
}

double find_param(const std::vector<std::pair<std::string, double>>& params, const std::string& key,
                  double fallback) {
  for (const auto& [k, v] : params)
    if (k == key) return v;
  return fallback;
}

}  // namespace

KernelSpec parse_kernel(const std::string& id, int dimension) {
  const auto colon = id.find(':');
  if (colon == std::string::npos) throw UnknownKernel("missing parameter list in '" + id + "'");
  const std::string fam = id.substr(0, colon);
  const auto params = parse_params(id.substr(colon + 1));
  KernelSpec k;
  if (fam == "gauss") {
    k = make_gaussian(find_param(params, "sigma", -1.0), dimension, find_param(params, "R", -1.0));
  } else if (fam == "exp") {
    k = make_exponential(find_param(params, "lambda", -1.0), dimension, find_param(params, "R", -1.0));
  } else if (fam == "ball") {
    k = make_ball_indicator(find_param(params, "R", -1.0), dimension);
  } else if (fam == "frac") {
    k = make_fractional(find_param(params, "s", -1.0), find_param(params, "rmin", 0.0),
                        find_param(params, "R", -1.0), dimension);
  } else {
    throw UnknownKernel("unknown kernel family '" + fam + "'");
  }
  k.id = id;
  return k;
}

const std::vector<std::string>& builtin_catalog() {
  static const std::vector<std::string> ids = {
      "gauss:sigma=1", "exp:lambda=1", "ball:R=1", "frac:s=0.5,R=4"};
  return ids;
}

KernelSpec rescale(const KernelSpec& k, double eps) {
  if (!(eps > 0)) throw NonPositiveEpsilon("rescale requires eps > 0, got " + format_value(eps));
  KernelSpec out = k;
  out.length_scale = k.length_scale * eps;
  out.amplitude = k.amplitude * std::pow(eps, -k.dimension);
  out.truncation_radius = k.truncation_radius * eps;
  return out;
}

void validate(const QuadratureConfig& q) {
  if (q.radial_nodes < 16) throw InvalidArgument("radial_nodes must be >= 16");
  if (!(q.tail_tolerance > 0 && q.tail_tolerance <= 1e-3))
    throw InvalidArgument("tail_tolerance must lie in (0, 1e-3]");
  if (q.subcell_refinement < 1) throw InvalidArgument("subcell_refinement must be >= 1");
}

namespace {

double family_tail_bound(const KernelSpec& k, int gl_order) {
  const double R = k.truncation_radius;
  double far = R;
  switch (k.family) {
    case KernelFamily::Gaussian:
      far = R + 12.0 * k.sigma * k.length_scale;
      break;
    case KernelFamily::Exponential:
      far = R + 90.0 / k.lambda * k.length_scale;
      break;
    default:
      return 0.0;  // truncated by definition
  }
  const int d = k.dimension;
  const Fn1 f = [&](double r) {
    return k.radial_untruncated(r) * (1.0 + r) * std::pow(r, d - 1);
  };
  const auto panels = geometric_panels(R, far, 30, true, false);
  return surface_sphere(d) * integrate_panels(f, panels, gauss_legendre(gl_order));
}

}  // namespace

AdmissibilityReport check_admissibility(const KernelSpec& k, const QuadratureConfig& q) {
  validate(q);
  validate_common(k);
  AdmissibilityReport rep;
  rep.C3 = true;  // every supported family is radial

  const auto radii = sample_radii(k.truncation_radius);
  for (double r : radii)
    if (!std::isfinite(k.radial(r)))
      throw NonFiniteKernelValue("kernel value at r=" + format_value(r));

  // Strict decrease sampled on the uniform grid only; the geometric radii
  // near 0 are too close for the decrease to be representable in doubles.
  rep.C4 = true;
  double prev = k.radial(k.truncation_radius / 512.0);
  for (int i = 2; i <= 512; ++i) {
    const double v = k.radial(k.truncation_radius * i / 512.0);
    if (!(prev > v)) {
      rep.C4 = false;
      break;
    }
    prev = v;
  }

  const int d = k.dimension;
  const Fn1 f_c2 = [&](double r) {
    return k.radial(r) * std::min(1.0, r) * std::pow(r, d - 1);
  };
  rep.C2 = probe_radial_integral(f_c2, k.truncation_radius, q.radial_nodes).finite;
  const Fn1 f_c2p = [&](double r) { return k.radial(r) * std::pow(r, d); };
  rep.C2_prime = probe_radial_integral(f_c2p, k.truncation_radius, q.radial_nodes).finite;

  rep.tail_bound = family_tail_bound(k, q.radial_nodes);
  rep.tail_ok = rep.tail_bound < q.tail_tolerance;
  return rep;
}

KernelConstants compute_constants(const KernelSpec& k, const QuadratureConfig& q,
                                  double identity_rel_tol) {
  validate(q);
  validate_common(k);
  const int d = k.dimension;
  const double R = k.truncation_radius;

  const Fn1 f_moment = [&](double r) { return k.radial(r) * std::pow(r, d); };
  const double radial_moment = integrate_radial(f_moment, R, q.radial_nodes);

  KernelConstants c;
  c.c_prime_K = surface_sphere(d) * radial_moment;
  c.alpha_1d = sphere_abs_last_component(d, std::min(q.radial_nodes, 64)) / surface_sphere(d);
  if (d == 1) {
    const Fn1 f = [&](double r) { return k.radial(r) * r; };
    c.c_K = integrate_radial(f, R, q.radial_nodes);
  } else {
    const int order = std::clamp(q.radial_nodes, 16, 32);
    c.c_K = (d - 1) * unit_ball_volume(d - 1) * nested_quarter_disc(k, order);
  }

  if (!(std::isfinite(c.c_K) && std::isfinite(c.c_prime_K)))
    throw QuadratureInconsistency("non-finite limit constants (check C2')");
  const double identity = 0.5 * c.alpha_1d * c.c_prime_K;
  const double scale = std::max({std::abs(c.c_K), std::abs(identity), 1e-300});
  if (std::abs(c.c_K - identity) > identity_rel_tol * scale)
    throw QuadratureInconsistency("c_K=" + format_value(c.c_K) + " vs alpha/2*c'_K=" +
                                  format_value(identity));
  return c;
}

double kernel_mass(const KernelSpec& k, const QuadratureConfig& q) {
  const int d = k.dimension;
  const Fn1 f = [&](double r) { return k.radial(r) * std::pow(r, d - 1); };
  return surface_sphere(d) * integrate_radial(f, k.truncation_radius, q.radial_nodes);
}

double kernel_min1_moment(const KernelSpec& k, const QuadratureConfig& q) {
  const int d = k.dimension;
  const Fn1 f = [&](double r) {
    return k.radial(r) * std::min(1.0, r) * std::pow(r, d - 1);
  };
  return surface_sphere(d) * integrate_radial(f, k.truncation_radius, q.radial_nodes);
}

}  // namespace nlperim
