#pragma once

#include <stdexcept>
#include <vector>

#include "ecs/partition.hpp"
#include "ecs/rational.hpp"

// Root-system data of A_n and the trigonometric spectrum, normalized so that
// (alpha, alpha) = 2 for all roots. With that choice the Gram matrix of the
// fundamental weights is the inverse Cartan matrix.

namespace ecs {

enum class EnergyConvention {
  weyl,      // 2 (lambda + kappa rho, lambda + kappa rho)
  a1_shifted,  // rank 1 only: m^2 + 2 kappa m - kappa^2
};

struct RankData {
  int n = 0;                                 // rank
  int N = 0;                                 // particle count, n + 1
  std::vector<std::vector<Rational>> gram;   // (lambda_i, lambda_j)
};

/// Cartan matrix of A_n.
inline std::vector<std::vector<int>> cartan_matrix(int n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    c[i][i] = 2;
    if (i + 1 < n) c[i][i + 1] = c[i + 1][i] = -1;
  }
  return c;
}

/// Gram matrix of the fundamental weights: entry (i,j) = min(i,j)(N - max(i,j))/N.
inline std::vector<std::vector<Rational>> gram_fundamental(int n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  const int N = n + 1;
  std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      g[i - 1][j - 1] = Rational(std::min(i, j) * (N - std::max(i, j)), N);
  return g;
}

inline RankData rank_data(int n) { return RankData{n, n + 1, gram_fundamental(n)}; }

/// Trigonometric energy of the state labelled by m.
inline Rational trig_energy(const QuantumNumbers& m, const Rational& kappa, int n,
                            EnergyConvention conv = EnergyConvention::weyl) {
  check_quantum_numbers(m, n);
  if (conv == EnergyConvention::a1_shifted) {
    if (n != 1)
      throw std::invalid_argument("a1_shifted energy convention is defined for rank 1 only");
    Rational mm(m[0]);
    return mm * mm + 2 * kappa * mm - kappa * kappa;
  }
  auto g = gram_fundamental(n);
  // weight vector lambda + kappa rho has coordinates m_i + kappa.
  Rational e = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      e += (m[static_cast<std::size_t>(i)] + kappa) * (m[static_cast<std::size_t>(j)] + kappa) *
           g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return 2 * e;
}

/// E(m) - E(m'); independent of the energy convention.
inline Rational trig_energy_gap(const QuantumNumbers& m, const QuantumNumbers& m2,
                                const Rational& kappa, int n) {
  if (m.size() != m2.size())
    throw std::invalid_argument("quantum-number rank mismatch in energy gap");
  return trig_energy(m, kappa, n) - trig_energy(m2, kappa, n);
}

}  // namespace ecs
