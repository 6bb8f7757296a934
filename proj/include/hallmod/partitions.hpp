#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace hallmod {

/* Weakly decreasing sequence of positive integers. Trailing zeros are
   stripped on construction so that equality is structural. Ordering is
   plain lexicographic on the parts, which within a fixed weight refines
   dominance order. */
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// i-th part (0-based), zero past the end.
  int operator[](int i) const { return i < length() ? parts_[i] : 0; }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }

  int weight() const;
  /// n(λ) = Σ (i-1) λ_i
  int nlambda() const;
  /// m_k(λ) for k ≥ 1
  int multiplicity(int k) const;
  std::map<int, int> multiplicities() const;

  bool contains(const Partition& mu) const;  // μ ⊆ λ as diagrams

  std::string to_string() const;  // "(2,1)"

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

Partition conjugate(const Partition& lambda);

struct WeightNMult {
  int weight;
  int nlambda;
  std::map<int, int> multiplicities;
};
WeightNMult weight_n_mult(const Partition& lambda);

/// Σ_i λ'_i ν'_i, which equals Σ_{i,j} min(λ_i, ν_j).
int conj_dot(const Partition& lambda, const Partition& nu);

/// (λ1,λ1,λ2,λ2,...)
Partition double_interleave(const Partition& lambda);
/// Inverse of double_interleave; throws NotDoubled on an odd multiplicity.
Partition halve_doubled(const Partition& mu);

/// n(λ/μ) = Σ_i C(λ'_i - μ'_i, 2)
int nskew(const Partition& lambda, const Partition& mu);

/// Parses "2,1" (or "" for the empty partition). Throws ParseError.
Partition parse_partition(const std::string& text);

struct PartitionBounds {
  int max_weight = -1;  // -1 = unbounded (the others must then bound)
  int max_part = -1;
  int max_length = -1;
};

/* All partitions within the bounds: ordered by weight, then decreasing
   lexicographic within a weight, e.g. (), (1), (2), (1,1), (3), (2,1), ... */
std::vector<Partition> iterate(const PartitionBounds& bounds);

/// Partitions of exactly `weight` with at most `max_length` parts (-1 = any).
std::vector<Partition> partitions_of(int weight, int max_length = -1);

/// Horizontal strips: all μ ⊆ λ with λ/μ a horizontal strip of size r.
std::vector<Partition> remove_horizontal_strip(const Partition& lambda, int r);

}  // namespace hallmod
