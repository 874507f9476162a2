#include "nlperim/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "nlperim/errors.hpp"
#include "nlperim/parallel.hpp"

namespace nlperim {

namespace {

GaussLegendre compute_rule(int n) {
  GaussLegendre rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Chebyshev initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.weights[n - 1 - i] = rule.weights[i];
  }
  return rule;
}

}  // namespace

const GaussLegendre& gauss_legendre(int n) {
  if (n < 1) throw InvalidArgument("Gauss-Legendre order must be >= 1");
  static std::map<int, GaussLegendre> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_rule(n)).first;
  return it->second;
}

double gl_panel(const Fn1& f, double a, double b, const GaussLegendre& rule) {
  const double mid = 0.5 * (a + b);
  const double hal = 0.5 * (b - a);
  std::vector<double> terms(rule.nodes.size());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    terms[i] = rule.weights[i] * f(mid + hal * rule.nodes[i]);
  return hal * pairwise_sum(terms);
}

std::vector<std::pair<double, double>> geometric_panels(double a, double b, int levels,
                                                        bool refine_left, bool refine_right) {
  std::vector<std::pair<double, double>> panels;
  if (!(b > a)) return panels;
  const double len = b - a;
  if (refine_left && refine_right) {
    const double mid = a + 0.5 * len;
    auto left = geometric_panels(a, mid, levels, true, false);
    auto right = geometric_panels(mid, b, levels, false, true);
    panels = std::move(left);
    panels.insert(panels.end(), right.begin(), right.end());
    return panels;
  }
  if (refine_right) {
    auto mirrored = geometric_panels(a, b, levels, true, false);
    for (auto it = mirrored.rbegin(); it != mirrored.rend(); ++it)
      panels.emplace_back(a + b - it->second, a + b - it->first);
    return panels;
  }
  if (!refine_left) {
    panels.emplace_back(a, b);
    return panels;
  }
  // Geometric towards a: [a, a+len*2^-levels], then doubling panels.
  double lo = len * std::ldexp(1.0, -levels);
  panels.emplace_back(a, a + lo);
  while (lo < len * (1.0 - 1e-14)) {
    const double hi = std::min(len, 2.0 * lo);
    panels.emplace_back(a + lo, a + hi);
    lo = hi;
  }
  return panels;
}

double integrate_panels(const Fn1& f, const std::vector<std::pair<double, double>>& panels,
                        const GaussLegendre& rule) {
  std::vector<double> parts(panels.size());
  for (std::size_t i = 0; i < panels.size(); ++i)
    parts[i] = gl_panel(f, panels[i].first, panels[i].second, rule);
  return pairwise_sum(parts);
}

double integrate_radial(const Fn1& f, double R, int gl_order, int levels) {
  if (!(R > 0)) return 0.0;
  return integrate_panels(f, geometric_panels(0.0, R, levels, true, false), gauss_legendre(gl_order));
}

ConvergenceProbe probe_radial_integral(const Fn1& f, double R, int gl_order) {
  ConvergenceProbe probe;
  if (!(R > 0)) {
    probe.finite = true;
    return probe;
  }
  const double coarse = integrate_radial(f, R, gl_order, 40);
  const double fine = integrate_radial(f, R, gl_order, 60);
  probe.value = fine;
  // Divergent integrands keep accumulating mass as the partition refines
  // towards the origin; integrable singularities leave only the innermost
  // panel in doubt, whose mass is O(2^-40) of the total at worst.
  const double diff = std::abs(fine - coarse);
  probe.finite = std::isfinite(fine) && diff <= std::max(1e-12, 1e-5 * std::abs(fine));
  return probe;
}

double unit_ball_volume(int d) {
  if (d < 0) throw InvalidArgument("dimension must be >= 0");
  return std::pow(std::numbers::pi, 0.5 * d) / std::tgamma(0.5 * d + 1.0);
}

}  // namespace nlperim
