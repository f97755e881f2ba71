#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "ecs/rational.hpp"

// Weierstrass P on the real axis for semiperiods (pi/2, i|omega2|), as the
// nome expansion sin^-2 z - 1/3 + sum_p g^p V_p(z), plus an independent
// lattice-sum oracle used only for verification.

namespace ecs {

inline std::vector<long> divisors(long p) {
  if (p < 1) throw std::invalid_argument("divisors() requires p >= 1");
  std::vector<long> low, high;
  for (long h = 1; h * h <= p; ++h) {
    if (p % h) continue;
    low.push_back(h);
    if (h != p / h) high.push_back(p / h);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

/// V_p(z) = 8 sum_{h | p} h (1 - cos 2hz).
inline double v_p(long p, double z) {
  double s = 0.0;
  for (long h : divisors(p)) s += static_cast<double>(h) * (1.0 - std::cos(2.0 * h * z));
  return 8.0 * s;
}

struct SeriesValue {
  double value = 0.0;
  double tail_bound = 0.0;  // rigorous bound on the dropped terms
};

/// 16 sum_{p > p_max} p^2 g^p in closed form (uses sum_{h|p} h <= p^2).
inline double weier_tail_bound(double g, int p_max) {
  if (g < 0.0 || g >= 1.0) throw std::invalid_argument("nome must satisfy 0 <= g < 1");
  if (g == 0.0) return 0.0;
  const double P = p_max;
  const double one_m_g = 1.0 - g;
  double tail = std::pow(g, P + 1.0) *
                ((P + 1.0) * (P + 1.0) - (2.0 * P * P + 2.0 * P - 1.0) * g + P * P * g * g) /
                (one_m_g * one_m_g * one_m_g);
  double bound = 16.0 * tail;
  if (!std::isfinite(bound))
    throw ConvergenceError("tail bound not representable at g = " + std::to_string(g) +
                           ", p_max = " + std::to_string(p_max));
  return bound;
}

inline SeriesValue weier_p_series(double z, double g, int p_max) {
  if (g < 0.0 || g >= 1.0) throw std::invalid_argument("nome must satisfy 0 <= g < 1");
  if (p_max < 0) throw std::invalid_argument("p_max must be >= 0");
  const double s = std::sin(z);
  if (std::abs(s) < 1e-14)
    throw std::invalid_argument("z = " + std::to_string(z) + " is at a pole of P");
  double value = 1.0 / (s * s) - 1.0 / 3.0;
  double gp = 1.0;
  for (int p = 1; p <= p_max; ++p) {
    gp *= g;
    value += gp * v_p(p, z);
  }
  return SeriesValue{value, weier_tail_bound(g, p_max)};
}

/// Defining lattice sum 1/z^2 + sum_{w != 0} [1/(z-w)^2 - 1/w^2] over the
/// lattice spanned by 2*omega1 and 2i*omega2_abs, summed in square shells
/// max(|m|, |n|) = s so every shell is symmetric under w -> -w.
inline double weier_p_lattice(double z, double omega1, double omega2_abs, int cutoff) {
  if (cutoff < 1) throw std::invalid_argument("lattice cutoff must be >= 1");
  const double a = 2.0 * omega1;      // real period
  const double b = 2.0 * omega2_abs;  // imaginary period length
  if (std::abs(std::remainder(z, a)) < 1e-13)
    throw std::invalid_argument("z is a lattice point");
  double sum = 1.0 / (z * z);
  for (int s = 1; s <= cutoff; ++s) {
    double shell = 0.0;
    for (int m = -s; m <= s; ++m) {
      for (int n = -s; n <= s; ++n) {
        if (std::max(std::abs(m), std::abs(n)) != s) continue;
        const std::complex<double> w(m * a, n * b);
        const std::complex<double> zw(z - m * a, -n * b);
        shell += std::real(1.0 / (zw * zw) - 1.0 / (w * w));
      }
    }
    sum += shell;
  }
  return sum;
}

struct LatticeValue {
  double value = 0.0;
  double error_estimate = 0.0;
  int cutoff = 0;
};

/// Convergence-monitored lattice evaluation: the cutoff is doubled until two
/// Richardson-extrapolated values agree within tol.
inline LatticeValue weier_p_lattice_auto(double z, double omega2_abs, double tol,
                                         int max_cutoff = 4096) {
  const double omega1 = std::atan(1.0) * 2.0;  // pi/2
  int c = 64;
  double prev = weier_p_lattice(z, omega1, omega2_abs, c / 2);
  double cur = weier_p_lattice(z, omega1, omega2_abs, c);
  // leading tail behaves like 1/c^2 for square shells
  double extrap_prev = cur + (cur - prev) / 3.0;
  while (true) {
    c *= 2;
    if (c > max_cutoff)
      throw ConvergenceError("lattice cutoff " + std::to_string(max_cutoff) +
                             " too small for tolerance " + std::to_string(tol));
    prev = cur;
    cur = weier_p_lattice(z, omega1, omega2_abs, c);
    double extrap = cur + (cur - prev) / 3.0;
    double delta = std::abs(extrap - extrap_prev);
    if (delta < tol) return LatticeValue{extrap, delta, c};
    extrap_prev = extrap;
  }
}

}  // namespace ecs
