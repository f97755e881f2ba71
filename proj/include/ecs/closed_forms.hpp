#pragma once

#include <string>

#include "ecs/rational.hpp"

// Closed-form recurrence coefficients and energy corrections for ranks 1-3,
// evaluated exactly. Every vanishing denominator factor raises PoleError with
// the factor spelled out; expressions whose global kappa(kappa-1) prefactor
// vanishes are identically zero and return 0 without touching denominators.

namespace ecs {

namespace detail {
inline void require_nonzero(const Rational& v, const std::string& factor) {
  if (v == 0) throw PoleError("denominator factor " + factor + " vanishes");
}
}  // namespace detail

/// c_m(kappa) = m(m-1+2k) / ((m+k)(m-1+k)); 0 for m <= 0 (invalid label).
inline Rational pieri_c(long m, const Rational& k) {
  if (m <= 0) return 0;
  Rational d1 = m + k, d2 = m - 1 + k;
  detail::require_nonzero(d1, "(m+kappa), m=" + std::to_string(m));
  detail::require_nonzero(d2, "(m-1+kappa), m=" + std::to_string(m));
  return Rational(m) * (m - 1 + 2 * k) / (d1 * d2);
}

/// a_{m,n}(kappa); 0 for n <= 0.
inline Rational pieri_a(long m, long n, const Rational& k) {
  if (n <= 0 || m < 0) return 0;
  Rational d1 = n + k, d2 = n - 1 + k, d3 = m + n + 2 * k, d4 = m + n - 1 + 2 * k;
  detail::require_nonzero(d1, "(n+kappa)");
  detail::require_nonzero(d2, "(n-1+kappa)");
  detail::require_nonzero(d3, "(m+n+2kappa)");
  detail::require_nonzero(d4, "(m+n-1+2kappa)");
  return Rational(n) * (m + n + k) * (n - 1 + 2 * k) * (m + n - 1 + 3 * k) / (d1 * d2 * d3 * d4);
}

/// d_{m,l,n}(kappa); 0 for n <= 0.
inline Rational pieri_d(long m, long l, long n, const Rational& k) {
  if (n <= 0 || m < 0 || l < 0) return 0;
  Rational d1 = n + k, d2 = n - 1 + k, d3 = l + n + 2 * k, d4 = l + n - 1 + 2 * k,
           d5 = m + l + n + 3 * k, d6 = m + l + n - 1 + 3 * k;
  detail::require_nonzero(d1, "(n+kappa)");
  detail::require_nonzero(d2, "(n-1+kappa)");
  detail::require_nonzero(d3, "(l+n+2kappa)");
  detail::require_nonzero(d4, "(l+n-1+2kappa)");
  detail::require_nonzero(d5, "(m+l+n+3kappa)");
  detail::require_nonzero(d6, "(m+l+n-1+3kappa)");
  return Rational(n) * (l + n + k) * (n - 1 + 2 * k) * (m + l + n + 2 * k) *
         (l + n - 1 + 3 * k) * (m + l + n - 1 + 4 * k) / (d1 * d2 * d3 * d4 * d5 * d6);
}

/// First-order coefficient of g, rank 1 closed form.
inline Rational delta1_a1_closed(long m, const Rational& k) {
  Rational pref = k * (k - 1);
  if (pref == 0) return 0;
  Rational d1 = m + 1 + k, d2 = m - 1 + k;
  detail::require_nonzero(d1, "(m+1+kappa)");
  detail::require_nonzero(d2, "(m-1+kappa)");
  return 8 * pref * (1 + pref / (d1 * d2));
}

/// First-order coefficient of g, rank 2 closed form.
inline Rational delta1_a2_closed(long m, long n, const Rational& k) {
  Rational pref = k * (k - 1);
  if (pref == 0) return 0;
  Rational d1 = m + 1 + k, d2 = m - 1 + k, d3 = n + 1 + k, d4 = n - 1 + k,
           d5 = m + n + 1 + 2 * k, d6 = m + n - 1 + 2 * k;
  detail::require_nonzero(d1, "(m+1+kappa)");
  detail::require_nonzero(d2, "(m-1+kappa)");
  detail::require_nonzero(d3, "(n+1+kappa)");
  detail::require_nonzero(d4, "(n-1+kappa)");
  detail::require_nonzero(d5, "(m+n+1+2kappa)");
  Rational num1 = 3 * k * k + 3 * (m + n) * k + Rational(m) * m + Rational(n) * n +
                  Rational(m) * n - 3;
  // num2 = 2k^2 + (3m+3n+1)k + m^2+n^2+mn-1 factors as d6*(k+m+n+1) - mn, so
  // the d6 pole is removable whenever mn = 0.
  Rational ratio;  // num2 / d6
  if (m == 0 || n == 0) {
    ratio = k + m + n + 1;
  } else {
    detail::require_nonzero(d6, "(m+n-1+2kappa)");
    ratio = k + m + n + 1 - Rational(m) * n / d6;
  }
  return 24 * pref + 8 * pref * pref * num1 * ratio / (d1 * d2 * d3 * d4 * d5);
}

/// First-order coefficient of g, rank 3 closed form (four-term bracket).
inline Rational delta1_a3_closed(long m, long l, long n, const Rational& k) {
  Rational pref = k * (k - 1);
  if (pref == 0) return 0;
  auto frac = [](long lead, std::initializer_list<Rational> nums,
                 std::initializer_list<std::pair<Rational, const char*>> dens) -> Rational {
    if (lead == 0) return 0;
    Rational num = lead;
    for (const Rational& f : nums) num *= f;
    Rational den = 1;
    for (const auto& [f, name] : dens) {
      detail::require_nonzero(f, name);
      den *= f;
    }
    return num / den;
  };
  Rational t1 = frac(n * (l + 1),
                     {l + m + 1 + k, l + 2 * k, n - 1 + 2 * k, l + m + 3 * k},
                     {{l + k, "(l+kappa)"},
                      {l + 1 + k, "(l+1+kappa)"},
                      {n + k, "(n+kappa)"},
                      {n - 1 + k, "(n-1+kappa)"},
                      {l + m + 2 * k, "(l+m+2kappa)"},
                      {l + m + 1 + 2 * k, "(l+m+1+2kappa)"}});
  Rational t2 = frac(n + 1,
                     {l + n + 1 + k, n + 2 * k, l + m + n + 1 + 2 * k, l + n + 3 * k,
                      l + m + n + 4 * k},
                     {{n + k, "(n+kappa)"},
                      {n + 1 + k, "(n+1+kappa)"},
                      {l + n + 2 * k, "(l+n+2kappa)"},
                      {l + n + 1 + 2 * k, "(l+n+1+2kappa)"},
                      {l + m + n + 3 * k, "(l+m+n+3kappa)"},
                      {l + m + n + 1 + 3 * k, "(l+m+n+1+3kappa)"}});
  Rational t3 = frac(m,
                     {l + m + k, m - 1 + 2 * k, l + m + n + 2 * k, l + m - 1 + 3 * k,
                      l + m + n - 1 + 4 * k},
                     {{m + k, "(m+kappa)"},
                      {m - 1 + k, "(m-1+kappa)"},
                      {l + m + 2 * k, "(l+m+2kappa)"},
                      {l + m - 1 + 2 * k, "(l+m-1+2kappa)"},
                      {l + m + n + 3 * k, "(l+m+n+3kappa)"},
                      {l + m + n - 1 + 3 * k, "(l+m+n-1+3kappa)"}});
  Rational t4 = frac(l * (m + 1),
                     {l + n + k, m + 2 * k, l - 1 + 2 * k, l + n - 1 + 3 * k},
                     {{l + k, "(l+kappa)"},
                      {l - 1 + k, "(l-1+kappa)"},
                      {m + k, "(m+kappa)"},
                      {m + 1 + k, "(m+1+kappa)"},
                      {l + n + 2 * k, "(l+n+2kappa)"},
                      {l + n - 1 + 2 * k, "(l+n-1+2kappa)"}});
  return 4 * pref * (16 - t1 - t2 - t3 - t4);
}

enum class Axis3 { first, middle, last };

/// Single-axis rank 3 forms; the first- and last-axis expressions coincide.
inline Rational delta1_a3_special(Axis3 axis, long v, const Rational& k) {
  Rational pref = k * (k - 1);
  if (pref == 0) return 0;
  if (axis == Axis3::middle) {
    Rational d1 = 1 + k, d2 = v - 1 + k, d3 = v + 1 + 3 * k;
    detail::require_nonzero(d1, "(1+kappa)");
    detail::require_nonzero(d2, "(l-1+kappa)");
    detail::require_nonzero(d3, "(l+1+3kappa)");
    Rational num = 3 * k * k * k + 4 * v * k * k + (Rational(v) * v - 3) * k;
    return 16 * pref * (3 + num / (d1 * d2 * d3));
  }
  Rational d1 = v - 1 + k, d2 = 1 + 2 * k, d3 = v + 1 + 3 * k;
  detail::require_nonzero(d1, "(m-1+kappa)");
  detail::require_nonzero(d2, "(1+2kappa)");
  detail::require_nonzero(d3, "(m+1+3kappa)");
  Rational num = 4 * k * k * k + (4 * v - 2) * k * k + (Rational(v) * v - 2) * k;
  return 24 * pref * (2 + num / (d1 * d2 * d3));
}

/// Second-order coefficient of g^2, rank 1, from the recurrence coefficients
/// and energy gaps. Finite for all m >= 0, kappa > 0. Canonical form.
inline Rational delta2_a1_recurrence(long m, const Rational& k) {
  Rational pref = k * (k - 1);
  if (pref == 0) return 0;
  Rational cm = pieri_c(m, k), cm1 = pieri_c(m + 1, k), cm2 = pieri_c(m + 2, k),
           cmm = pieri_c(m - 1, k);
  Rational s = cm + cm1;
  Rational bracket = 4 + 7 * s - 2 * s * s - 2 * cm2 * cm1 - 2 * cm * cmm;
  // gaps: E_m - E_{m+2} = -4(m+1+kappa); E_m - E_{m-2} = 4(m-1+kappa)
  Rational eterm = -cm2 * cm1 / (4 * (m + 1 + k));
  if (m >= 2) eterm += cm * cmm / (4 * (m - 1 + k));
  return 4 * pref * bracket + 16 * pref * pref * eterm;
}

/// Second-order coefficient of g^2, rank 1, closed form evaluated exactly as
/// printed in the source tables. Known to disagree with the recurrence form;
/// retained for the adjudication study, never used in energy expansions.
inline Rational delta2_a1_closed_printed(long m, const Rational& k) {
  Rational pref = k * k * (k - 1) * (k - 1);
  if (pref == 0) return 0;
  Rational mk = m + k;
  Rational f1 = mk * mk - 4, f2 = mk * mk - 1;
  detail::require_nonzero(f1, "((m+kappa)^2-4)");
  detail::require_nonzero(f2, "((m+kappa)^2-1)");
  Rational num = k * k - (10 * m + 6) * k - 5 * Rational(m) * m + 8;
  Rational first = 8 * pref * (3 - num / (f1 * f2));

  detail::require_nonzero(mk, "(m+kappa)");
  Rational second = 0;
  if (m >= 2) {
    Rational d1 = m - 1 + k, d2 = m - 2 + k;
    detail::require_nonzero(d1, "(m-1+kappa)");
    detail::require_nonzero(d2, "(m-2+kappa)");
    second += Rational(m) * (m - 1) * (m - 1 + 2 * k) * (m - 2 + 2 * k) / (d1 * d1 * d1 * d2);
  }
  {
    Rational d1 = m + 1 + k, d2 = m + 2 + k;
    detail::require_nonzero(d1, "(m+1+kappa)");
    detail::require_nonzero(d2, "(m+2+kappa)");
    second -= Rational(m + 1) * (m + 2) * (m + 2 * k) * (m + 1 + 2 * k) / (d1 * d1 * d1 * d2);
  }
  return first + 4 * pref * second / mk;
}

}  // namespace ecs
