#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace nlperim {

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached rule of order n (computed once via Newton iteration on P_n).
const GaussLegendre& gauss_legendre(int n);

using Fn1 = std::function<double(double)>;

/// Single Gauss-Legendre panel over [a, b].
double gl_panel(const Fn1& f, double a, double b, const GaussLegendre& rule);

/// Partition of [a, b] with panels shrinking geometrically towards the
/// refined endpoint(s); resolves integrable endpoint singularities.
std::vector<std::pair<double, double>> geometric_panels(double a, double b, int levels,
                                                        bool refine_left, bool refine_right);

/// Composite rule over an explicit panel list; panel contributions are
/// combined with the fixed-tree pairwise sum.
double integrate_panels(const Fn1& f, const std::vector<std::pair<double, double>>& panels,
                        const GaussLegendre& rule);

/// integral_0^R f(r) dr with geometric refinement toward r = 0. f may have an
/// integrable singularity at the origin; nodes never touch r = 0.
double integrate_radial(const Fn1& f, double R, int gl_order, int levels = 48);

/// Convergence probe for integral_0^R f dr: integrates on two nested geometric
/// partitions and reports whether the refinement has stabilised.
struct ConvergenceProbe {
  double value = 0.0;
  bool finite = false;
};
ConvergenceProbe probe_radial_integral(const Fn1& f, double R, int gl_order);

/// Volume of the unit ball in R^d.
double unit_ball_volume(int d);

}  // namespace nlperim
