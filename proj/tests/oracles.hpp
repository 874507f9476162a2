// Test-side reference computations, kept independent of the library's
// quadrature and summation paths.
#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace oracles {

using Fn1 = std::function<double(double)>;
using Fn2 = std::function<double(double, double)>;

// Adaptive Simpson with absolute tolerance.
inline double simpson_step(const Fn1& f, double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adaptive_simpson_rec(const Fn1& f, double a, double b, double fa, double fm,
                                   double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson_step(f, a, m, fa, flm, fm);
  const double right = simpson_step(f, m, b, fm, frm, fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

inline double adaptive_simpson(const Fn1& f, double a, double b, double tol = 1e-11,
                               int depth = 40) {
  if (!(b > a)) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  return adaptive_simpson_rec(f, a, b, fa, fm, fb, simpson_step(f, a, b, fa, fm, fb), tol, depth);
}

// Integral over [a,b] split geometrically toward a (for integrable endpoint
// singularities where f(a) is not evaluable).
inline double adaptive_simpson_singular_left(const Fn1& f, double a, double b, double tol = 1e-11) {
  double total = 0.0;
  double hi = b;
  for (int k = 0; k < 60 && hi - a > 0; ++k) {
    const double lo = a + (hi - a) * 0.5;
    total += adaptive_simpson(f, lo, hi, tol * 0.1);
    hi = lo;
  }
  return total;
}

// Iterated 2-D adaptive Simpson on [ax,bx] x [ay,by].
inline double adaptive_2d(const Fn2& f, double ax, double bx, double ay, double by,
                          double tol = 1e-9) {
  const Fn1 outer = [&](double x) {
    const Fn1 inner = [&](double y) { return f(x, y); };
    return adaptive_simpson(inner, ay, by, tol * 1e-2);
  };
  return adaptive_simpson(outer, ax, bx, tol);
}

inline double unit_ball_volume(int d) {
  return std::pow(std::numbers::pi, 0.5 * d) / std::tgamma(0.5 * d + 1.0);
}

// Closed-form surface-average factor 2 w_{d-1} / (d w_d).
inline double alpha_closed_form(int d) {
  return 2.0 * unit_ball_volume(d - 1) / (d * unit_ball_volume(d));
}

}  // namespace oracles
