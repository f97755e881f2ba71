#pragma once

#include <cmath>
#include <functional>

#include "ecs/rational.hpp"

namespace ecs {

namespace detail {
inline double adaptive_simpson_step(const std::function<double(double)>& f, double a, double b,
                                    double fa, double fm, double fb, double whole, double eps,
                                    int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0) throw ConvergenceError("quadrature recursion limit reached");
  if (std::abs(delta) <= 15.0 * eps) return left + right + delta / 15.0;
  return adaptive_simpson_step(f, a, m, fa, flm, fm, left, 0.5 * eps, depth - 1) +
         adaptive_simpson_step(f, m, b, fm, frm, fb, right, 0.5 * eps, depth - 1);
}
}  // namespace detail

/// Adaptive Simpson quadrature with absolute tolerance eps. The interval is
/// pre-split into panels so that globally symmetric integrands cannot alias
/// the first refinement estimate.
inline double integrate(const std::function<double(double)>& f, double a, double b, double eps,
                        int max_depth = 40) {
  constexpr int panels = 8;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double pa = a + (b - a) * p / panels;
    const double pb = a + (b - a) * (p + 1) / panels;
    const double m = 0.5 * (pa + pb);
    const double fa = f(pa), fm = f(m), fb = f(pb);
    const double whole = (pb - pa) / 6.0 * (fa + 4.0 * fm + fb);
    total += detail::adaptive_simpson_step(f, pa, pb, fa, fm, fb, whole, eps / panels, max_depth);
  }
  return total;
}

}  // namespace ecs
