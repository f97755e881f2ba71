#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ecs {

/// Quantum-number label: an n-tuple of non-negative integers.
using QuantumNumbers = std::vector<int>;

inline void check_quantum_numbers(const QuantumNumbers& m, int rank) {
  if (static_cast<int>(m.size()) != rank)
    throw std::invalid_argument("quantum-number arity " + std::to_string(m.size()) +
                                " does not match rank " + std::to_string(rank));
  for (int v : m)
    if (v < 0) throw std::invalid_argument("negative quantum number");
}

/// Weakly decreasing list of non-negative integers. Trailing zeros are not
/// stored, so equal partitions compare equal regardless of how they were
/// written.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw std::invalid_argument("negative partition part");
      if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
        throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  }

  /// Number of nonzero rows.
  int rows() const { return static_cast<int>(parts_.size()); }

  /// Row length, 0 beyond the stored rows (1-based row index).
  int part(int i) const {
    return (i >= 1 && i <= rows()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }

  int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  const std::vector<int>& parts() const { return parts_; }

  auto operator<=>(const Partition&) const = default;

  std::string str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(parts_[i]);
    }
    return out + "]";
  }

 private:
  std::vector<int> parts_;
};

/// Row-wise lexicographic comparison, padding with zeros. Descending lex is a
/// linear extension of dominance order.
inline bool lex_less(const Partition& a, const Partition& b) {
  int n = std::max(a.rows(), b.rows());
  for (int i = 1; i <= n; ++i) {
    if (a.part(i) != b.part(i)) return a.part(i) < b.part(i);
  }
  return false;
}

/// Dominance order on partitions of equal weight: a <= b iff every partial
/// sum of a is <= the corresponding partial sum of b.
inline bool dominated_by(const Partition& a, const Partition& b) {
  if (a.weight() != b.weight()) return false;
  int sa = 0, sb = 0;
  int n = std::max(a.rows(), b.rows());
  for (int i = 1; i <= n; ++i) {
    sa += a.part(i);
    sb += b.part(i);
    if (sa > sb) return false;
  }
  return true;
}

/// lambda_i = sum_{k >= i} m_k, lambda_N = 0.
inline Partition partition_from_quantum(const QuantumNumbers& m, int num_vars) {
  check_quantum_numbers(m, num_vars - 1);
  std::vector<int> parts(static_cast<std::size_t>(num_vars), 0);
  int acc = 0;
  for (int i = num_vars - 1; i >= 1; --i) {
    acc += m[static_cast<std::size_t>(i - 1)];
    parts[static_cast<std::size_t>(i - 1)] = acc;
  }
  return Partition(parts);
}

/// m_i = lambda_i - lambda_{i+1}. Full columns (a common offset across all N
/// rows) do not change the result.
inline QuantumNumbers quantum_from_partition(const Partition& p, int num_vars) {
  if (p.rows() > num_vars)
    throw std::invalid_argument("partition " + p.str() + " has more than " +
                                std::to_string(num_vars) + " parts");
  QuantumNumbers m(static_cast<std::size_t>(num_vars - 1));
  for (int i = 1; i < num_vars; ++i)
    m[static_cast<std::size_t>(i - 1)] = p.part(i) - p.part(i + 1);
  return m;
}

/// All partitions of `weight` with at most `max_rows` rows.
inline std::vector<Partition> partitions_of(int weight, int max_rows) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_rows) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, weight, weight);
  return out;
}

}  // namespace ecs
