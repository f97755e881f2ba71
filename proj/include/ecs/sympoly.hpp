#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "ecs/partition.hpp"
#include "ecs/rational.hpp"

// Exact polynomial carriers. MonomialPoly is a raw multivariate polynomial
// keyed by exponent vectors; SymmetricPolynomial stores a symmetric polynomial
// in the monomial-symmetric-function basis, keyed by partitions.

namespace ecs {

using Exponents = std::vector<int>;

struct MonomialPoly {
  int nvars = 0;
  std::map<Exponents, Rational> terms;

  void add(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
      terms.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  bool empty() const { return terms.empty(); }
};

struct SymmetricPolynomial {
  int nvars = 0;
  std::map<Partition, Rational> terms;

  void add(const Partition& p, const Rational& c) {
    if (c == 0) return;
    if (p.rows() > nvars)
      throw std::invalid_argument("partition " + p.str() + " too long for " +
                                  std::to_string(nvars) + " variables");
    auto it = terms.find(p);
    if (it == terms.end()) {
      terms.emplace(p, c);
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  Rational coeff(const Partition& p) const {
    auto it = terms.find(p);
    return it == terms.end() ? Rational(0) : it->second;
  }

  bool empty() const { return terms.empty(); }
};

/// Monomial symmetric function m_lambda as a raw polynomial: the sum over
/// distinct permutations of the padded exponent vector.
inline MonomialPoly monomial_symmetric(const Partition& lambda, int nvars) {
  if (lambda.rows() > nvars)
    throw std::invalid_argument("partition " + lambda.str() + " too long for " +
                                std::to_string(nvars) + " variables");
  Exponents e(static_cast<std::size_t>(nvars), 0);
  for (int i = 1; i <= lambda.rows(); ++i) e[static_cast<std::size_t>(i - 1)] = lambda.part(i);
  std::sort(e.begin(), e.end());
  MonomialPoly out;
  out.nvars = nvars;
  do {
    out.add(e, 1);
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

inline MonomialPoly expand(const SymmetricPolynomial& s) {
  MonomialPoly out;
  out.nvars = s.nvars;
  for (const auto& [p, c] : s.terms) {
    MonomialPoly m = monomial_symmetric(p, s.nvars);
    for (const auto& [e, unit] : m.terms) out.add(e, c * unit);
  }
  return out;
}

/// Groups a raw polynomial by sorted exponent vector. The input must actually
/// be symmetric; each orbit is checked against its representative coefficient.
inline SymmetricPolynomial collect(const MonomialPoly& f) {
  SymmetricPolynomial out;
  out.nvars = f.nvars;
  std::map<Partition, Rational> seen;
  for (const auto& [e, c] : f.terms) {
    Exponents sorted = e;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    Partition p(sorted);
    auto it = seen.find(p);
    if (it == seen.end())
      seen.emplace(p, c);
    else if (it->second != c)
      throw std::logic_error("collect() called on a non-symmetric polynomial");
  }
  for (const auto& [p, c] : seen) out.add(p, c);
  return out;
}

inline MonomialPoly multiply(const MonomialPoly& a, const MonomialPoly& b) {
  if (a.nvars != b.nvars) throw std::invalid_argument("variable-count mismatch in multiply");
  MonomialPoly out;
  out.nvars = a.nvars;
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add(e, ca * cb);
    }
  return out;
}

/// Elementary symmetric polynomial e_r in nvars variables.
inline MonomialPoly elementary_poly(int r, int nvars) {
  if (r < 0 || r > nvars) throw std::invalid_argument("elementary index out of range");
  std::vector<int> parts(static_cast<std::size_t>(r), 1);
  if (r == 0) {
    MonomialPoly one;
    one.nvars = nvars;
    one.add(Exponents(static_cast<std::size_t>(nvars), 0), 1);
    return one;
  }
  return monomial_symmetric(Partition(parts), nvars);
}

}  // namespace ecs
