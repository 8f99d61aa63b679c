#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <functional>

namespace kneexo {

// Adaptive Gauss-Kronrod quadrature. `tol` is a relative error target with an
// absolute floor, which is what the arc-length integrals here need.
template <typename F>
double integrate(F&& f, double a, double b, double tol = 1e-12) {
  if (a == b) return 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      std::forward<F>(f), a, b, /*max_depth=*/15, tol);
}

// Golden-section minimization of a unimodal function on [lo, hi]; stops when
// the bracket is narrower than `tol`. Returns the bracket midpoint.
template <typename F>
double golden_section_min(F&& f, double lo, double hi, double tol) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace kneexo
