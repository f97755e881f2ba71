#pragma once

#include <optional>
#include <stdexcept>

#include "ecs/algebra_an.hpp"
#include "ecs/closed_forms.hpp"
#include "ecs/jack.hpp"
#include "ecs/rational.hpp"

// Perturbative energy corrections in the nome g. All coefficients are exact
// rationals; substituting a nome value is the only floating-point step.

namespace ecs {

/// Constant shift -kappa(kappa-1) N(N-1)/6.
inline Rational const_shift(int N, const Rational& kappa) {
  if (N < 2) throw std::invalid_argument("particle count must be >= 2");
  return -kappa * (kappa - 1) * N * (N - 1) / 6;
}

/// Coefficient of g from the generic route 4 kappa(kappa-1)(N^2 - a_m).
/// Identically zero at the free couplings kappa in {0, 1}.
inline Rational delta1_generic(const QuantumNumbers& m, const Rational& kappa, int rank) {
  check_quantum_numbers(m, rank);
  Rational pref = kappa * (kappa - 1);
  if (pref == 0) return 0;
  const int N = rank + 1;
  return 4 * pref * (N * N - a_coefficient(m, kappa, rank));
}

/// Energy expansion through first or second order in the nome.
struct EnergyExpansion {
  int rank = 0;
  int order = 1;
  Rational e_trig;               // weyl convention
  Rational shift;                // constant in g
  Rational d1;                   // coefficient of g
  std::optional<Rational> d2;    // coefficient of g^2, rank 1 only

  double evaluate(double g) const {
    double v = to_double(e_trig + shift) + to_double(d1) * g;
    if (d2) v += to_double(*d2) * g * g;
    return v;
  }
};

inline EnergyExpansion energy_expansion(const QuantumNumbers& m, const Rational& kappa,
                                        int rank, int order) {
  check_quantum_numbers(m, rank);
  if (order != 1 && order != 2)
    throw std::invalid_argument("expansion order must be 1 or 2");
  if (order == 2 && rank != 1)
    throw std::invalid_argument("second-order corrections are available for rank 1 only");
  EnergyExpansion e;
  e.rank = rank;
  e.order = order;
  e.e_trig = trig_energy(m, kappa, rank);
  e.shift = const_shift(rank + 1, kappa);
  e.d1 = delta1_generic(m, kappa, rank);
  if (order == 2) e.d2 = delta2_a1_recurrence(m[0], kappa);
  return e;
}

}  // namespace ecs
