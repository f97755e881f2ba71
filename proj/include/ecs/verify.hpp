#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ecs/closed_forms.hpp"
#include "ecs/elliptic.hpp"
#include "ecs/jack.hpp"
#include "ecs/oracle_a1.hpp"
#include "ecs/perturbation.hpp"
#include "ecs/serialization.hpp"

// Cross-check suites. Each suite re-derives one family of results along two
// independent routes and reports exact or toleranced agreement. `verify` in
// the CLI and the acceptance test binary both run these, so CI and users
// execute identical checks.

namespace ecs {

struct CheckLine {
  std::string name;
  bool passed = false;
  std::string detail;  // filled on failure or when a number is worth keeping
};

struct SuiteReport {
  std::string suite;
  bool passed = true;
  std::vector<CheckLine> checks;
  Json data = Json::object();  // machine-readable extras (adjudication etc.)

  void add(const std::string& name, bool ok, const std::string& detail = "") {
    checks.push_back({name, ok, detail});
    if (!ok) passed = false;
  }
};

namespace detail {

inline std::vector<Rational> kappa_grid() {
  return {Rational(1, 2), Rational(3, 2), Rational(2), Rational(5, 2), Rational(7)};
}

template <typename F>
void for_rank2_labels(int total, F&& f) {
  for (int m = 0; m <= total; ++m)
    for (int n = 0; m + n <= total; ++n) f(m, n);
}

template <typename F>
void for_rank3_labels(int total, F&& f) {
  for (int m = 0; m <= total; ++m)
    for (int l = 0; m + l <= total; ++l)
      for (int n = 0; m + l + n <= total; ++n) f(m, l, n);
}

}  // namespace detail

/// Recurrence tables from the exact Jack-basis linear solve vs the closed
/// coefficient formulas, rational equality on the full grids.
inline SuiteReport verify_coefficients() {
  SuiteReport rep;
  rep.suite = "coefficients";
  for (const Rational& k : detail::kappa_grid()) {
    const std::string ks = " kappa=" + to_string(k);
    bool ok1 = true;
    for (int m = 0; m <= 12; ++m) {
      RecurrenceTable t = recurrence_table({m}, k, 1);
      ok1 = ok1 && t.up[0] == 1 && t.up[1] == pieri_c(m, k) && t.down[0] == pieri_c(m, k) &&
            t.down[1] == 1;
    }
    rep.add("rank1 tables m<=12" + ks, ok1);
    bool ok2 = true;
    detail::for_rank2_labels(6, [&](int m, int n) {
      RecurrenceTable t = recurrence_table({m, n}, k, 2);
      ok2 = ok2 && t.up[0] == 1 && t.up[1] == pieri_c(m, k) && t.up[2] == pieri_a(m, n, k) &&
            t.down[0] == pieri_a(n, m, k) && t.down[1] == pieri_c(n, k) && t.down[2] == 1;
    });
    rep.add("rank2 tables m+n<=6" + ks, ok2);
    bool ok3 = true;
    detail::for_rank3_labels(4, [&](int m, int l, int n) {
      RecurrenceTable t = recurrence_table({m, l, n}, k, 3);
      ok3 = ok3 && t.up[0] == 1 && t.up[1] == pieri_c(m, k) && t.up[2] == pieri_a(m, l, k) &&
            t.up[3] == pieri_d(m, l, n, k) && t.down[0] == pieri_d(n, l, m, k) &&
            t.down[1] == pieri_a(n, l, k) && t.down[2] == pieri_c(n, k) && t.down[3] == 1;
    });
    rep.add("rank3 tables m+l+n<=4" + ks, ok3);
  }
  return rep;
}

/// First-order corrections: generic a_m route vs closed forms, and the
/// single-axis rank 3 forms vs the full closed form with zeroed axes.
inline SuiteReport verify_delta1() {
  SuiteReport rep;
  rep.suite = "delta1";
  for (const Rational& k : detail::kappa_grid()) {
    const std::string ks = " kappa=" + to_string(k);
    bool ok1 = true;
    for (int m = 0; m <= 12; ++m) ok1 = ok1 && delta1_generic({m}, k, 1) == delta1_a1_closed(m, k);
    rep.add("rank1 generic = closed, m<=12" + ks, ok1);
    bool ok2 = true;
    detail::for_rank2_labels(6, [&](int m, int n) {
      ok2 = ok2 && delta1_generic({m, n}, k, 2) == delta1_a2_closed(m, n, k);
    });
    rep.add("rank2 generic = closed, m+n<=6" + ks, ok2);
    bool ok3 = true;
    detail::for_rank3_labels(4, [&](int m, int l, int n) {
      ok3 = ok3 && delta1_generic({m, l, n}, k, 3) == delta1_a3_closed(m, l, n, k);
    });
    rep.add("rank3 generic = closed, m+l+n<=4" + ks, ok3);
    bool oks = true;
    for (int v = 0; v <= 10; ++v) {
      oks = oks && delta1_a3_special(Axis3::first, v, k) == delta1_a3_closed(v, 0, 0, k) &&
            delta1_a3_special(Axis3::middle, v, k) == delta1_a3_closed(0, v, 0, k) &&
            delta1_a3_special(Axis3::last, v, k) == delta1_a3_closed(0, 0, v, k);
    }
    rep.add("rank3 single-axis forms, index<=10" + ks, oks);
  }
  return rep;
}

/// Free cases: both corrections vanish identically at kappa = 0 and 1.
inline SuiteReport verify_nullity() {
  SuiteReport rep;
  rep.suite = "nullity";
  for (Rational k : {Rational(0), Rational(1)}) {
    const std::string ks = " kappa=" + to_string(k);
    bool ok = true;
    for (int m = 0; m <= 12; ++m)
      ok = ok && delta1_generic({m}, k, 1) == 0 && delta1_a1_closed(m, k) == 0 &&
           delta2_a1_recurrence(m, k) == 0 && delta2_a1_closed_printed(m, k) == 0;
    detail::for_rank2_labels(6, [&](int m, int n) {
      ok = ok && delta1_generic({m, n}, k, 2) == 0 && delta1_a2_closed(m, n, k) == 0;
    });
    detail::for_rank3_labels(4, [&](int m, int l, int n) {
      ok = ok && delta1_generic({m, l, n}, k, 3) == 0 && delta1_a3_closed(m, l, n, k) == 0;
    });
    rep.add("all corrections vanish" + ks, ok);
  }
  return rep;
}

/// Trigonometric rewrites of the pair potential through elementary symmetric
/// functions, checked at random coordinate sets.
inline SuiteReport verify_identities() {
  SuiteReport rep;
  rep.suite = "identities";
  std::mt19937 rng(20240915);
  std::uniform_real_distribution<double> u(-1.6, 1.6);
  for (int N : {2, 3, 4}) {
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
      std::vector<double> q(static_cast<std::size_t>(N));
      for (auto& v : q) v = u(rng);
      double lhs = 0.0;
      for (int a = 0; a < N; ++a)
        for (int b = a + 1; b < N; ++b)
          lhs += 8.0 * (1.0 - std::cos(2.0 * (q[static_cast<std::size_t>(a)] -
                                              q[static_cast<std::size_t>(b)])));
      auto z = elementary_from_coordinates(q);
      std::complex<double> zn_bar =
          z[static_cast<std::size_t>(N - 2)] / z[static_cast<std::size_t>(N - 1)];
      std::complex<double> rhs = 4.0 * (static_cast<double>(N) * N - z[0] * zn_bar);
      worst = std::max(worst, std::abs(lhs - rhs.real()));
      worst = std::max(worst, std::abs(rhs.imag()));
    }
    std::ostringstream os;
    os << "max deviation " << worst;
    rep.add("first-harmonic rewrite, N=" + std::to_string(N), worst <= 1e-10, os.str());
  }
  {
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
      std::vector<double> q = {u(rng), u(rng)};
      double dq = q[0] - q[1];
      double lhs = 8.0 * (3.0 - std::cos(2.0 * dq) - 2.0 * std::cos(4.0 * dq));
      auto z = elementary_from_coordinates(q);
      std::complex<double> z1 = z[0], z2 = z[1];
      std::complex<double> rhs =
          4.0 * (12.0 - z1 * z1 / z2 - 2.0 * (z1 * z1 - 2.0 * z2) *
                                           ((z1 * z1 / (z2 * z2) - 2.0 / z2)));
      worst = std::max(worst, std::abs(lhs - rhs.real()));
      worst = std::max(worst, std::abs(rhs.imag()));
    }
    std::ostringstream os;
    os << "max deviation " << worst;
    rep.add("second-harmonic rewrite, N=2", worst <= 1e-10, os.str());
  }
  return rep;
}

/// Norm recursion of the one-dimensional polynomial family against direct
/// quadrature of the sin^{2 kappa} weighted integrals.
inline SuiteReport verify_norms() {
  SuiteReport rep;
  rep.suite = "norms";
  for (Rational k : {Rational(2), Rational(3)}) {
    double worst = 0.0;
    for (int m = 1; m <= 6; ++m) worst = std::max(worst, norm_quadrature_check(m, k));
    std::ostringstream os;
    os << "max relative error " << worst;
    rep.add("norm ratio = c_m, m<=6, kappa=" + to_string(k), worst <= 1e-8, os.str());
  }
  return rep;
}

/// Nome series for the doubled-period Weierstrass potential vs the direct
/// lattice sum, plus soundness of the reported truncation tail bound.
inline SuiteReport verify_weierstrass() {
  SuiteReport rep;
  rep.suite = "weierstrass";
  for (double g : {0.01, 0.05, 0.1}) {
    double w2 = -std::log(g) / 4.0;
    double worst = 0.0;
    bool sound = true;
    for (double z : {0.3, 0.7, 1.2}) {
      SeriesValue s = weier_p_series(z, g, 60);
      LatticeValue l = weier_p_lattice_auto(z, w2, 1e-9);
      worst = std::max(worst, std::abs(s.value - l.value));
      SeriesValue lo = weier_p_series(z, g, 30);
      sound = sound && std::abs(s.value - lo.value) <= lo.tail_bound;
    }
    std::ostringstream os;
    os << "max |series - lattice| " << worst;
    rep.add("series vs lattice, g=" + std::to_string(g), worst <= 1e-8, os.str());
    rep.add("tail bound sound, g=" + std::to_string(g), sound);
  }
  return rep;
}

/// Residual of the second-order expansion against the numerical spectrum
/// scales cubically in the nome.
inline SuiteReport verify_oracle() {
  SuiteReport rep;
  rep.suite = "oracle";
  for (Rational k : {Rational(5, 2), Rational(3)}) {
    for (int m = 0; m <= 2; ++m) {
      OracleReport r = g3_scaling_study(k, m, {1e-3, 2e-3}, 80, 10);
      std::ostringstream os;
      os << "ratio " << (r.ratios.empty() ? 0.0 : r.ratios[0]) << ", monitors "
         << r.basis_monitor << " / " << r.potential_monitor;
      bool ok = r.monitors_passed && r.ratios.size() == 1 && r.ratios[0] >= 6.0 &&
                r.ratios[0] <= 10.0;
      rep.add("cubic scaling kappa=" + to_string(k) + " m=" + std::to_string(m), ok, os.str());
    }
  }
  return rep;
}

/// Head-to-head study of the two second-order forms. The recurrence form
/// leaves a cubic residual; substituting the as-printed closed form degrades
/// the residual to quadratic, demonstrating the inconsistency between them.
/// Pass/fail gates on the recurrence branch only; the closed branch is
/// reported as evidence.
inline SuiteReport verify_delta2_adjudication() {
  SuiteReport rep;
  rep.suite = "delta2-adjudication";
  Json table = Json::array();
  for (Rational k : {Rational(5, 2), Rational(3)}) {
    for (int m : {0, 1}) {
      OracleReport rec = g3_scaling_study(k, m, {1e-3, 2e-3}, 80, 10);
      OracleReport printed =
          g3_scaling_study(k, m, {1e-3, 2e-3}, 80, 10, delta2_a1_closed_printed(m, k));
      double r_rec = rec.ratios.empty() ? 0.0 : rec.ratios[0];
      double r_pr = printed.ratios.empty() ? 0.0 : printed.ratios[0];
      Json row;
      row["kappa"] = to_string(k);
      row["m"] = m;
      row["ratio_recurrence"] = r_rec;
      row["ratio_closed_as_printed"] = r_pr;
      row["delta2_recurrence"] = rational_record(delta2_a1_recurrence(m, k));
      row["delta2_closed_as_printed"] = rational_record(delta2_a1_closed_printed(m, k));
      table.push_back(row);
      std::ostringstream os;
      os << "recurrence ratio " << r_rec << " (cubic), as-printed ratio " << r_pr
         << " (quadratic expected)";
      bool gate = rec.monitors_passed && r_rec >= 6.0 && r_rec <= 10.0;
      rep.add("adjudication kappa=" + to_string(k) + " m=" + std::to_string(m), gate, os.str());
      // evidence line, informational but still checked so regressions surface
      rep.add("as-printed form is only quadratic, kappa=" + to_string(k) +
                  " m=" + std::to_string(m),
              r_pr >= 3.5 && r_pr <= 4.5, os.str());
    }
  }
  rep.data["comparison"] = table;
  rep.data["verdict"] =
      "the recurrence-based second-order coefficient is canonical; the printed closed form "
      "disagrees with it and with the numerical spectrum";
  return rep;
}

/// Hand-derivable spot values.
inline SuiteReport verify_spot() {
  SuiteReport rep;
  rep.suite = "spot";
  rep.add("a coefficient, rank1 m=1 kappa=2", a_coefficient({1}, 2, 1) == Rational(3, 2));
  rep.add("delta1 rank1 m=1 kappa=2", delta1_generic({1}, 2, 1) == 20 &&
                                          delta1_a1_closed(1, 2) == 20);
  rep.add("delta1 rank2 (0,0) kappa=2", delta1_generic({0, 0}, 2, 2) == Rational(336, 5) &&
                                            delta1_a2_closed(0, 0, 2) == Rational(336, 5));
  rep.add("delta2 rank1 m=0 kappa=3", delta2_a1_recurrence(0, 3) == Rational(693, 5));
  return rep;
}

inline std::vector<std::string> suite_names() {
  return {"coefficients",  "delta1", "nullity", "identities",          "norms",
          "weierstrass",   "oracle", "spot",    "delta2-adjudication", "all"};
}

inline std::vector<SuiteReport> run_suites(const std::string& selector) {
  std::vector<SuiteReport> out;
  auto want = [&](const char* n) { return selector == "all" || selector == n; };
  if (want("coefficients")) out.push_back(verify_coefficients());
  if (want("delta1")) out.push_back(verify_delta1());
  if (want("nullity")) out.push_back(verify_nullity());
  if (want("identities")) out.push_back(verify_identities());
  if (want("norms")) out.push_back(verify_norms());
  if (want("weierstrass")) out.push_back(verify_weierstrass());
  if (want("oracle")) out.push_back(verify_oracle());
  if (want("spot")) out.push_back(verify_spot());
  if (want("delta2-adjudication")) out.push_back(verify_delta2_adjudication());
  if (out.empty()) throw std::invalid_argument("unknown verify suite: " + selector);
  return out;
}

inline Json suites_to_json(const std::vector<SuiteReport>& reports) {
  Json out;
  bool all = true;
  Json arr = Json::array();
  for (const auto& r : reports) {
    Json s;
    s["suite"] = r.suite;
    s["passed"] = r.passed;
    Json checks = Json::array();
    for (const auto& c : r.checks) {
      Json line;
      line["name"] = c.name;
      line["passed"] = c.passed;
      if (!c.detail.empty()) line["detail"] = c.detail;
      checks.push_back(line);
    }
    s["checks"] = checks;
    if (!r.data.empty()) s["data"] = r.data;
    arr.push_back(s);
    all = all && r.passed;
  }
  out["suites"] = arr;
  out["passed"] = all;
  return out;
}

}  // namespace ecs
