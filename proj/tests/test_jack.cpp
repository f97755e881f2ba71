#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>
#include <vector>

#include "ecs/closed_forms.hpp"
#include "ecs/jack.hpp"

using namespace ecs;

namespace {

Rational eval_exact(const SymmetricPolynomial& P, const std::vector<Rational>& x) {
  MonomialPoly raw = expand(P);
  Rational total = 0;
  for (const auto& [e, c] : raw.terms) {
    Rational term = c;
    for (std::size_t j = 0; j < e.size(); ++j)
      for (int k = 0; k < e[j]; ++k) term *= x[j];
    total += term;
  }
  return total;
}

Rational det_permutation(const std::vector<std::vector<Rational>>& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Rational det = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational term = (inversions % 2) ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= a[i][perm[i]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

/// Schur polynomial via the bialternant ratio at an exact point.
Rational schur_at(const Partition& lambda, const std::vector<Rational>& x) {
  const std::size_t n = x.size();
  std::vector<std::vector<Rational>> num(n, std::vector<Rational>(n));
  std::vector<std::vector<Rational>> den(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      int enum_ = lambda.part(static_cast<int>(j) + 1) + static_cast<int>(n - 1 - j);
      Rational p = 1;
      for (int k = 0; k < enum_; ++k) p *= x[i];
      num[i][j] = p;
      Rational q = 1;
      for (std::size_t k = 0; k + 1 + j < n; ++k) q *= x[i];
      den[i][j] = q;
    }
  return det_permutation(num) / det_permutation(den);
}

}  // namespace

TEST_CASE("quantum numbers <-> partitions") {
  CHECK(partition_from_quantum({1, 1}, 3) == Partition({2, 1, 0}));
  CHECK(partition_from_quantum({5}, 2) == Partition({5, 0}));
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> d(0, 12), nd(1, 5);
  for (int t = 0; t < 100; ++t) {
    int n = nd(rng);
    QuantumNumbers m(static_cast<std::size_t>(n));
    for (auto& v : m) v = d(rng);
    CHECK(quantum_from_partition(partition_from_quantum(m, n + 1), n + 1) == m);
  }
  CHECK_THROWS_AS(quantum_from_partition(Partition({2, 1, 1}), 2), std::invalid_argument);
}

TEST_CASE("small Jack polynomials") {
  SUBCASE("single dominance class is a bare monomial function") {
    for (Rational kappa : {Rational(1), Rational(1, 2), Rational(7, 3)}) {
      const auto& P = jack_polynomial(Partition({1}), kappa, 2);
      CHECK(P.terms.size() == 1);
      CHECK(P.coeff(Partition({1})) == 1);
    }
  }
  SUBCASE("degree two, two variables") {
    for (Rational kappa : {Rational(2), Rational(1, 2), Rational(5, 3)}) {
      const auto& P = jack_polynomial(Partition({2}), kappa, 2);
      CHECK(P.coeff(Partition({2})) == 1);
      CHECK(P.coeff(Partition({1, 1})) == 2 * kappa / (kappa + 1));
    }
  }
}

TEST_CASE("kappa = 1 reduces to Schur polynomials") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> num(-4, 4), den(1, 4);
  for (int N : {2, 3}) {
    for (int w = 1; w <= 4; ++w) {
      for (const Partition& lambda : partitions_of(w, N)) {
        const auto& P = jack_polynomial(lambda, 1, N);
        for (int t = 0; t < 3; ++t) {
          std::vector<Rational> x;
          while (static_cast<int>(x.size()) < N) {
            Rational v(num(rng), den(rng));
            bool distinct = v != 0;
            for (const Rational& u : x)
              if (u == v) distinct = false;
            if (distinct) x.push_back(v);
          }
          CHECK(eval_exact(P, x) == schur_at(lambda, x));
        }
      }
    }
  }
}

TEST_CASE("recurrence tables") {
  SUBCASE("rank 1 examples") {
    RecurrenceTable t = recurrence_table({1}, 2, 1);
    CHECK(t.up == std::vector<Rational>{1, Rational(2, 3)});
    CHECK(t.down == std::vector<Rational>{Rational(2, 3), 1});
  }
  SUBCASE("e_1 on the constant") {
    RecurrenceTable t = recurrence_table({0, 0}, Rational(3, 2), 2);
    CHECK(t.up.front() == 1);
    CHECK(t.up[1] == 0);
    CHECK(t.up[2] == 0);
  }
  SUBCASE("invalid down-step target has zero coefficient") {
    RecurrenceTable t = recurrence_table({0, 1}, Rational(5, 2), 2);
    CHECK(t.down[0] == 0);  // target (-1, 1) is outside the cone
    CHECK(t.down.back() == 1);
  }
  SUBCASE("free-fermion point: every valid coefficient is 1") {
    for (int rank = 1; rank <= 3; ++rank) {
      QuantumNumbers m(static_cast<std::size_t>(rank), 0);
      std::vector<QuantumNumbers> labels;
      auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i == m.size()) {
          labels.push_back(m);
          return;
        }
        for (int v = 0; v <= left; ++v) {
          m[i] = v;
          self(self, i + 1, left - v);
        }
        m[i] = 0;
      };
      rec(rec, 0, 4);
      for (const auto& lab : labels) {
        RecurrenceTable t = recurrence_table(lab, 1, rank);
        for (const Rational& c : t.up) CHECK((c == 0 || c == 1));
        for (const Rational& c : t.down) CHECK((c == 0 || c == 1));
      }
    }
  }
}

TEST_CASE("tables match the closed forms on a reduced grid") {
  for (Rational kappa : {Rational(1, 2), Rational(2)}) {
    for (int m = 0; m <= 6; ++m) {
      RecurrenceTable t = recurrence_table({m}, kappa, 1);
      CHECK(t.up[0] == 1);
      CHECK(t.up[1] == pieri_c(m, kappa));
      CHECK(t.down[0] == pieri_c(m, kappa));
      CHECK(t.down[1] == 1);
    }
    for (int m = 0; m <= 4; ++m)
      for (int n = 0; m + n <= 4; ++n) {
        RecurrenceTable t = recurrence_table({m, n}, kappa, 2);
        CHECK(t.up[0] == 1);
        CHECK(t.up[1] == pieri_c(m, kappa));
        CHECK(t.up[2] == pieri_a(m, n, kappa));
        CHECK(t.down[0] == pieri_a(n, m, kappa));
        CHECK(t.down[1] == pieri_c(n, kappa));
        CHECK(t.down[2] == 1);
      }
    for (int m = 0; m <= 3; ++m)
      for (int l = 0; m + l <= 3; ++l)
        for (int n = 0; m + l + n <= 3; ++n) {
          RecurrenceTable t = recurrence_table({m, l, n}, kappa, 3);
          CHECK(t.up[0] == 1);
          CHECK(t.up[1] == pieri_c(m, kappa));
          CHECK(t.up[2] == pieri_a(m, l, kappa));
          CHECK(t.up[3] == pieri_d(m, l, n, kappa));
          CHECK(t.down[0] == pieri_d(n, l, m, kappa));
          CHECK(t.down[1] == pieri_a(n, l, kappa));
          CHECK(t.down[2] == pieri_c(n, kappa));
          CHECK(t.down[3] == 1);
        }
  }
}

TEST_CASE("duality between the two recurrences (ranks <= 3)") {
  for (Rational kappa : {Rational(3, 2), Rational(3)}) {
    for (int rank = 1; rank <= 3; ++rank) {
      std::mt19937 rng(rank);
      std::uniform_int_distribution<int> d(0, 2);
      for (int t = 0; t < 6; ++t) {
        QuantumNumbers m(static_cast<std::size_t>(rank));
        for (auto& v : m) v = d(rng);
        QuantumNumbers rev(m.rbegin(), m.rend());
        RecurrenceTable a = recurrence_table(m, kappa, rank);
        RecurrenceTable b = recurrence_table(rev, kappa, rank);
        const int N = rank + 1;
        for (int j = 1; j <= N; ++j)
          CHECK(a.down[static_cast<std::size_t>(j - 1)] ==
                b.up[static_cast<std::size_t>(N - j)]);
      }
    }
  }
}

TEST_CASE("a coefficient") {
  CHECK(a_coefficient({1}, 2, 1) == Rational(3, 2));
  CHECK(a_coefficient({0}, 2, 1) == Rational(2, 3));
  for (Rational kappa : {Rational(2), Rational(7, 2)})
    CHECK(a_coefficient({0, 0}, kappa, 2) == 3 / (1 + 2 * kappa));
}

TEST_CASE("spectral eigenvalue differences reproduce energy gaps") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(0, 3), kn(1, 7), kd(1, 4);
  for (int N = 2; N <= 4; ++N) {
    const int rank = N - 1;
    for (int t = 0; t < 25; ++t) {
      QuantumNumbers m1(static_cast<std::size_t>(rank)), m2(static_cast<std::size_t>(rank));
      for (auto& v : m1) v = d(rng);
      for (auto& v : m2) v = d(rng);
      Partition l1 = partition_from_quantum(m1, N), l2 = partition_from_quantum(m2, N);
      if (l1.weight() > 5 || l2.weight() > 5) continue;
      Rational kappa(kn(rng), kd(rng));
      CHECK(spectral_eigenvalue(l1, kappa, N) - spectral_eigenvalue(l2, kappa, N) ==
            trig_energy_gap(m1, m2, kappa, rank));
    }
  }
}

TEST_CASE("elementary symmetric functions of torus coordinates") {
  SUBCASE("all coordinates zero") {
    auto z = elementary_from_coordinates({0.0, 0.0, 0.0, 0.0});
    std::vector<double> binom = {4, 6, 4, 1};
    for (std::size_t p = 0; p < 4; ++p) {
      CHECK(std::abs(z[p].real() - binom[p]) < 1e-12);
      CHECK(std::abs(z[p].imag()) < 1e-12);
    }
  }
  SUBCASE("two particles in the center-of-mass frame") {
    double t = 0.37;
    auto z = elementary_from_coordinates({t, -t});
    CHECK(std::abs(z[0].real() - 2.0 * std::cos(2.0 * t)) < 1e-12);
    CHECK(std::abs(z[0].imag()) < 1e-12);
    CHECK(std::abs(z[1] - std::complex<double>(1.0, 0.0)) < 1e-12);
  }
  SUBCASE("defining identity via subset sums") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    std::vector<double> q = {u(rng), u(rng), u(rng), u(rng)};
    auto z = elementary_from_coordinates(q);
    std::vector<std::complex<double>> x;
    for (double v : q) x.push_back(std::exp(std::complex<double>(0.0, 2.0 * v)));
    for (std::size_t p = 1; p <= 4; ++p) {
      std::complex<double> direct = 0.0;
      for (unsigned mask = 0; mask < 16; ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != p) continue;
        std::complex<double> term = 1.0;
        for (std::size_t j = 0; j < 4; ++j)
          if (mask & (1u << j)) term *= x[j];
        direct += term;
      }
      CHECK(std::abs(z[p - 1] - direct) < 1e-12);
    }
  }
}

TEST_CASE("torus orthogonality of the polynomial family") {
  const double pi = std::acos(-1.0);
  for (int N : {2, 3}) {
    const int grid = N == 2 ? 48 : 40;
    for (int kappa : {1, 2, 3}) {
      // gather all polynomials with weight <= 4
      std::vector<Partition> labels;
      for (int w = 0; w <= 4; ++w)
        for (const Partition& p : partitions_of(w, N)) labels.push_back(p);

      // tabulate values over the grid
      std::vector<std::vector<std::complex<double>>> values(labels.size());
      std::vector<double> weight;
      std::vector<std::vector<double>> qs;
      std::vector<int> idx(static_cast<std::size_t>(N), 0);
      auto walk = [&](auto&& self, int depth, std::vector<double>& q) -> void {
        if (depth == N) {
          double w = 1.0;
          for (int a = 0; a < N; ++a)
            for (int b = a + 1; b < N; ++b)
              w *= std::pow(std::abs(std::sin(q[static_cast<std::size_t>(a)] -
                                              q[static_cast<std::size_t>(b)])),
                            2.0 * kappa);
          weight.push_back(w);
          qs.push_back(q);
          return;
        }
        for (int i = 0; i < grid; ++i) {
          q[static_cast<std::size_t>(depth)] = pi * i / grid;
          self(self, depth + 1, q);
        }
      };
      std::vector<double> q(static_cast<std::size_t>(N));
      walk(walk, 0, q);
      for (std::size_t li = 0; li < labels.size(); ++li) {
        const auto& P = jack_polynomial(labels[li], kappa, N);
        MonomialPoly raw = expand(P);
        values[li].reserve(qs.size());
        for (const auto& point : qs) {
          std::vector<std::complex<double>> x(point.size());
          for (std::size_t j = 0; j < point.size(); ++j)
            x[j] = std::exp(std::complex<double>(0.0, 2.0 * point[j]));
          std::complex<double> v = 0.0;
          for (const auto& [e, c] : raw.terms) {
            std::complex<double> term = to_double(c);
            for (std::size_t j = 0; j < e.size(); ++j)
              for (int k = 0; k < e[j]; ++k) term *= x[j];
            v += term;
          }
          values[li].push_back(v);
        }
      }

      std::vector<double> norms(labels.size());
      for (std::size_t li = 0; li < labels.size(); ++li) {
        double s = 0.0;
        for (std::size_t p = 0; p < qs.size(); ++p)
          s += weight[p] * std::norm(values[li][p]);
        norms[li] = s;
        CHECK(s > 0.0);
      }
      for (std::size_t a = 0; a < labels.size(); ++a)
        for (std::size_t b = a + 1; b < labels.size(); ++b) {
          std::complex<double> s = 0.0;
          for (std::size_t p = 0; p < qs.size(); ++p)
            s += weight[p] * values[a][p] * std::conj(values[b][p]);
          CHECK(std::abs(s) <= 1e-8 * std::sqrt(norms[a] * norms[b]));
        }
    }
  }
}
