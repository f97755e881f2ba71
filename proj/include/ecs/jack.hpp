#pragma once

#include <complex>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "ecs/algebra_an.hpp"
#include "ecs/partition.hpp"
#include "ecs/rational.hpp"
#include "ecs/sympoly.hpp"

// Generalized Gegenbauer (Jack) polynomials for A_n, built as the monic
// dominance-triangular eigenfunctions of the Laplace-Beltrami operator
//
//   D = sum_i x_i^2 d_i^2 + 2 kappa sum_{i<j} (x_i^2 d_i - x_j^2 d_j)/(x_i - x_j),
//
// solved exactly in the monomial-symmetric basis. The Pieri-type recurrence
// coefficients are then read off by expanding e_1 * P and e_{N-1} * P back in
// the Jack basis.

namespace ecs {

namespace detail {

/// Exact division of g by (x_i - x_j). g must be divisible (it is whenever it
/// came from the antisymmetrized pair operator applied to a symmetric
/// polynomial); a nonzero remainder is a logic error.
inline MonomialPoly divide_by_difference(MonomialPoly g, int i, int j) {
  MonomialPoly q;
  q.nvars = g.nvars;
  while (!g.empty()) {
    // leading term in x_i
    auto lead = g.terms.begin();
    for (auto it = g.terms.begin(); it != g.terms.end(); ++it)
      if (it->first[static_cast<std::size_t>(i)] > lead->first[static_cast<std::size_t>(i)])
        lead = it;
    Exponents e = lead->first;
    Rational c = lead->second;
    if (e[static_cast<std::size_t>(i)] == 0)
      throw std::logic_error("polynomial not divisible by variable difference");
    e[static_cast<std::size_t>(i)] -= 1;
    q.add(e, c);
    // g -= c x^e (x_i - x_j)
    Exponents t1 = e, t2 = e;
    t1[static_cast<std::size_t>(i)] += 1;
    t2[static_cast<std::size_t>(j)] += 1;
    g.add(t1, -c);
    g.add(t2, c);
  }
  return q;
}

/// D applied to a symmetric polynomial given as a raw monomial polynomial.
inline MonomialPoly laplace_beltrami_raw(const MonomialPoly& f, const Rational& kappa) {
  const int n = f.nvars;
  MonomialPoly out;
  out.nvars = n;
  for (const auto& [e, c] : f.terms) {
    Rational diag = 0;
    for (int a : e) diag += Rational(a) * (a - 1);
    out.add(e, c * diag);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      MonomialPoly g;
      g.nvars = n;
      for (const auto& [e, c] : f.terms) {
        if (e[static_cast<std::size_t>(i)] > 0) {
          Exponents t = e;
          t[static_cast<std::size_t>(i)] += 1;
          g.add(t, c * e[static_cast<std::size_t>(i)]);
        }
        if (e[static_cast<std::size_t>(j)] > 0) {
          Exponents t = e;
          t[static_cast<std::size_t>(j)] += 1;
          g.add(t, -c * e[static_cast<std::size_t>(j)]);
        }
      }
      MonomialPoly q = divide_by_difference(std::move(g), i, j);
      for (const auto& [e, c] : q.terms) out.add(e, 2 * kappa * c);
    }
  }
  return out;
}

using JackKey = std::tuple<int, Rational, std::vector<int>>;

}  // namespace detail

/// Eigenvalue of D on P_lambda: sum_i lambda_i(lambda_i - 1) + 2 kappa (N - i) lambda_i.
inline Rational lb_eigenvalue(const Partition& lambda, const Rational& kappa, int num_vars) {
  Rational d = 0;
  for (int i = 1; i <= lambda.rows(); ++i) {
    Rational li(lambda.part(i));
    d += li * (li - 1) + 2 * kappa * (num_vars - i) * li;
  }
  return d;
}

/// Column-invariant spectral function whose differences reproduce the
/// trigonometric energy gaps of the corresponding quantum numbers.
inline Rational spectral_eigenvalue(const Partition& lambda, const Rational& kappa,
                                    int num_vars) {
  Rational w(lambda.weight());
  return 2 * lb_eigenvalue(lambda, kappa, num_vars) + 2 * w - 2 * w * w / num_vars -
         2 * kappa * (num_vars - 1) * w;
}

/// D action on m_lambda, expressed in the monomial-symmetric basis. Memoized.
inline const std::map<Partition, Rational>& lb_on_monomial(const Partition& lambda,
                                                           const Rational& kappa,
                                                           int num_vars) {
  static std::map<detail::JackKey, std::map<Partition, Rational>> cache;
  static std::mutex mtx;
  detail::JackKey key{num_vars, kappa, lambda.parts()};
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  MonomialPoly raw = detail::laplace_beltrami_raw(monomial_symmetric(lambda, num_vars), kappa);
  return cache.emplace(key, collect(raw).terms).first->second;
}

/// Monic Jack polynomial P_lambda in the monomial-symmetric basis. Memoized.
inline const SymmetricPolynomial& jack_polynomial(const Partition& lambda,
                                                  const Rational& kappa, int num_vars) {
  static std::map<detail::JackKey, SymmetricPolynomial> cache;
  static std::mutex mtx;
  if (lambda.rows() > num_vars)
    throw std::invalid_argument("partition " + lambda.str() + " too long for " +
                                std::to_string(num_vars) + " variables");
  detail::JackKey key{num_vars, kappa, lambda.parts()};
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  // basis: the dominance ideal below lambda, in a dominance-compatible
  // descending order (lambda first).
  std::vector<Partition> basis;
  for (const Partition& mu : partitions_of(lambda.weight(), num_vars))
    if (dominated_by(mu, lambda)) basis.push_back(mu);
  std::sort(basis.begin(), basis.end(), [](const Partition& a, const Partition& b) {
    return lex_less(b, a);
  });

  const Rational d_top = lb_eigenvalue(lambda, kappa, num_vars);
  std::map<Partition, Rational> u;
  u[lambda] = 1;
  for (std::size_t k = 1; k < basis.size(); ++k) {
    const Partition& mu = basis[k];
    Rational rhs = 0;
    for (std::size_t l = 0; l < k; ++l) {
      const Partition& nu = basis[l];
      auto uit = u.find(nu);
      if (uit == u.end() || uit->second == 0) continue;
      const auto& row = lb_on_monomial(nu, kappa, num_vars);
      auto ait = row.find(mu);
      if (ait != row.end()) rhs += ait->second * uit->second;
    }
    Rational denom = d_top - lb_eigenvalue(mu, kappa, num_vars);
    if (denom == 0) {
      if (rhs != 0)
        throw PoleError("eigenvalue denominator d(" + lambda.str() + ") - d(" + mu.str() +
                        ") vanishes at kappa = " + to_string(kappa));
      continue;  // decoupled degenerate label
    }
    if (rhs != 0) u[mu] = rhs / denom;
  }

  SymmetricPolynomial P;
  P.nvars = num_vars;
  for (const auto& [p, c] : u) P.add(p, c);
  std::lock_guard<std::mutex> lock(mtx);
  return cache.emplace(key, std::move(P)).first->second;
}

/// Expands a homogeneous symmetric polynomial in the Jack basis by peeling the
/// dominance-maximal label. Throws if a nonzero residual survives.
inline std::map<Partition, Rational> expand_in_jack_basis(SymmetricPolynomial q,
                                                          const Rational& kappa) {
  std::map<Partition, Rational> out;
  const int num_vars = q.nvars;
  std::size_t guard = 0, limit = 4096;
  while (!q.empty()) {
    if (++guard > limit) throw std::logic_error("Jack-basis expansion did not terminate");
    auto lead = std::prev(q.terms.end());  // map order ends at the lex/dominance maximum
    Partition label = lead->first;
    Rational c = lead->second;
    const SymmetricPolynomial& P = jack_polynomial(label, kappa, num_vars);
    for (const auto& [p, pc] : P.terms) q.add(p, -c * pc);
    if (q.terms.count(label))
      throw std::logic_error("Jack-basis expansion residual at " + label.str());
    out[label] = c;
  }
  return out;
}

/// e_1 * P_lambda in the Jack basis.
inline std::map<Partition, Rational> multiply_e1(const Partition& lambda, const Rational& kappa,
                                                 int num_vars) {
  const SymmetricPolynomial& P = jack_polynomial(lambda, kappa, num_vars);
  MonomialPoly raw = multiply(expand(P), elementary_poly(1, num_vars));
  return expand_in_jack_basis(collect(raw), kappa);
}

/// e_{N-1} * P_lambda in the Jack basis (labels carry the full extra column;
/// quantum numbers are unaffected by it).
inline std::map<Partition, Rational> multiply_e_top(const Partition& lambda,
                                                    const Rational& kappa, int num_vars) {
  const SymmetricPolynomial& P = jack_polynomial(lambda, kappa, num_vars);
  MonomialPoly raw = multiply(expand(P), elementary_poly(num_vars - 1, num_vars));
  return expand_in_jack_basis(collect(raw), kappa);
}

/// Step vector mu_j: i-th element delta_{i,j} - delta_{i,j-1}, for j = 1..N.
inline std::vector<int> mu_step(int j, int rank) {
  std::vector<int> v(static_cast<std::size_t>(rank), 0);
  if (j >= 1 && j <= rank) v[static_cast<std::size_t>(j - 1)] += 1;
  if (j - 1 >= 1 && j - 1 <= rank) v[static_cast<std::size_t>(j - 2)] -= 1;
  return v;
}

/// Both Pieri-type coefficient lists for the state m. Index j runs 1..N;
/// coefficients whose target label leaves the dominant cone are 0.
struct RecurrenceTable {
  int N = 0;
  std::vector<Rational> up;    // z_1 P_m   = sum_j up[j-1]   P_{m + mu_j}
  std::vector<Rational> down;  // z_n P_m   = sum_j down[j-1] P_{m - mu_j}
};

inline RecurrenceTable recurrence_table(const QuantumNumbers& m, const Rational& kappa,
                                        int rank) {
  check_quantum_numbers(m, rank);
  const int N = rank + 1;
  const Partition lambda = partition_from_quantum(m, N);

  RecurrenceTable table;
  table.N = N;
  table.up.assign(static_cast<std::size_t>(N), 0);
  table.down.assign(static_cast<std::size_t>(N), 0);

  auto up_exp = multiply_e1(lambda, kappa, N);
  std::set<Partition> claimed;
  for (int j = 1; j <= N; ++j) {
    std::vector<int> parts(static_cast<std::size_t>(N), 0);
    for (int i = 1; i <= N; ++i) parts[static_cast<std::size_t>(i - 1)] = lambda.part(i);
    parts[static_cast<std::size_t>(j - 1)] += 1;
    if (j > 1 && parts[static_cast<std::size_t>(j - 2)] < parts[static_cast<std::size_t>(j - 1)])
      continue;  // target outside the dominant cone
    Partition target(parts);
    claimed.insert(target);
    auto it = up_exp.find(target);
    if (it != up_exp.end()) table.up[static_cast<std::size_t>(j - 1)] = it->second;
  }
  for (const auto& [p, c] : up_exp)
    if (!claimed.count(p))
      throw std::logic_error("unexpected label " + p.str() + " in e_1 expansion");

  auto down_exp = multiply_e_top(lambda, kappa, N);
  claimed.clear();
  for (int j = 1; j <= N; ++j) {
    std::vector<int> parts(static_cast<std::size_t>(N), 0);
    bool valid = true;
    for (int i = 1; i <= N; ++i)
      parts[static_cast<std::size_t>(i - 1)] = lambda.part(i) + (i == j ? 0 : 1);
    for (int i = 1; i < N; ++i)
      if (parts[static_cast<std::size_t>(i - 1)] < parts[static_cast<std::size_t>(i)]) valid = false;
    if (!valid) continue;
    Partition target(parts);
    claimed.insert(target);
    auto it = down_exp.find(target);
    if (it != down_exp.end()) table.down[static_cast<std::size_t>(j - 1)] = it->second;
  }
  for (const auto& [p, c] : down_exp)
    if (!claimed.count(p))
      throw std::logic_error("unexpected label " + p.str() + " in e_{N-1} expansion");

  if (table.up.front() != 1 || table.down.back() != 1)
    throw std::logic_error("Pieri normalization check failed for m-label of " + lambda.str());
  return table;
}

/// a_m = sum_j down[j] * up[j at m - mu_j]; terms with invalid m - mu_j are 0.
inline Rational a_coefficient(const QuantumNumbers& m, const Rational& kappa, int rank) {
  RecurrenceTable t = recurrence_table(m, kappa, rank);
  const int N = rank + 1;
  Rational a = 0;
  for (int j = 1; j <= N; ++j) {
    if (t.down[static_cast<std::size_t>(j - 1)] == 0) continue;
    std::vector<int> mu = mu_step(j, rank);
    QuantumNumbers shifted = m;
    bool valid = true;
    for (int i = 0; i < rank; ++i) {
      shifted[static_cast<std::size_t>(i)] -= mu[static_cast<std::size_t>(i)];
      if (shifted[static_cast<std::size_t>(i)] < 0) valid = false;
    }
    if (!valid) continue;
    RecurrenceTable ts = recurrence_table(shifted, kappa, rank);
    a += t.down[static_cast<std::size_t>(j - 1)] * ts.up[static_cast<std::size_t>(j - 1)];
  }
  return a;
}

/// Elementary symmetric functions z_1..z_N of x_j = exp(2 i q_j).
inline std::vector<std::complex<double>> elementary_from_coordinates(
    const std::vector<double>& q) {
  const std::size_t N = q.size();
  std::vector<std::complex<double>> e(N + 1, 0.0);
  e[0] = 1.0;
  for (std::size_t j = 0; j < N; ++j) {
    std::complex<double> x = std::exp(std::complex<double>(0.0, 2.0 * q[j]));
    for (std::size_t p = std::min(j + 1, N); p >= 1; --p) e[p] += x * e[p - 1];
  }
  return {e.begin() + 1, e.end()};
}

/// Numerical evaluation of a symmetric polynomial at x_j = exp(2 i q_j).
inline std::complex<double> evaluate_at_coordinates(const SymmetricPolynomial& P,
                                                    const std::vector<double>& q) {
  std::vector<std::complex<double>> x(q.size());
  for (std::size_t j = 0; j < q.size(); ++j)
    x[j] = std::exp(std::complex<double>(0.0, 2.0 * q[j]));
  std::complex<double> total = 0.0;
  MonomialPoly raw = expand(P);
  for (const auto& [e, c] : raw.terms) {
    std::complex<double> term = to_double(c);
    for (std::size_t j = 0; j < e.size(); ++j)
      for (int k = 0; k < e[j]; ++k) term *= x[j];
    total += term;
  }
  return total;
}

}  // namespace ecs
