#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <iostream>

#include "ecs/verify.hpp"

// One line per acceptance criterion; the cross-check suites do the work.

namespace {

bool report(int criterion, const char* title, const ecs::SuiteReport& rep, bool extra_ok = true) {
  const bool ok = rep.passed && extra_ok;
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << title << "\n";
  if (!ok)
    for (const auto& c : rep.checks)
      if (!c.passed)
        std::cout << "       " << c.name << (c.detail.empty() ? "" : " -- " + c.detail) << "\n";
  return ok;
}

}  // namespace

TEST_CASE("criterion 1: recurrence tables equal the closed coefficient forms") {
  CHECK(report(1, "exact coefficient agreement on the full grids", ecs::verify_coefficients()));
}

TEST_CASE("criterion 2: first-order corrections agree along both routes") {
  CHECK(report(2, "generic route equals the closed forms and axis specials", ecs::verify_delta1()));
}

TEST_CASE("criterion 3: free cases vanish identically") {
  CHECK(report(3, "delta1 and delta2 are exactly 0 at kappa in {0,1}", ecs::verify_nullity()));
}

TEST_CASE("criterion 4: trigonometric operator identities") {
  CHECK(report(4, "pair-potential rewrites hold to 1e-10 at random points",
               ecs::verify_identities()));
}

TEST_CASE("criterion 5: norm recursion against quadrature") {
  CHECK(report(5, "norm ratios match c_m to 1e-8 for m<=6, kappa in {2,3}", ecs::verify_norms()));
}

TEST_CASE("criterion 6: Weierstrass series against the lattice oracle") {
  CHECK(report(6, "series vs lattice to 1e-8 with sound tail bounds", ecs::verify_weierstrass()));
}

TEST_CASE("criterion 7: cubic residual scaling of the oracle") {
  CHECK(report(7, "residual ratio in [6,10] with truncation monitors passing",
               ecs::verify_oracle()));
}

TEST_CASE("criterion 8: adjudication between the two second-order forms") {
  ecs::SuiteReport rep = ecs::verify_delta2_adjudication();
  // every informational as-printed check must show quadratic scaling too
  bool printed_quadratic = true;
  for (const auto& row : rep.data["comparison"]) {
    double r = row["ratio_closed_as_printed"].get<double>();
    printed_quadratic = printed_quadratic && r >= 3.5 && r <= 4.5;
  }
  CHECK(report(8, "recurrence form cubic, as-printed form only quadratic", rep,
               printed_quadratic));
}

TEST_CASE("criterion 9: derived spot values") {
  CHECK(report(9, "hand-derived exact values reproduced", ecs::verify_spot()));
}
