#pragma once

// Integer partitions. Parts are read as column heights of a Young diagram
// and, elsewhere in the library, as exponents of cyclic p-power summands.

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace lrembed {

class Partition {
 public:
  Partition() = default;

  /// Throws Error(malformed_partition) unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Drops zeros and sorts; for callers that assemble parts in arbitrary order.
  static Partition from_parts(std::vector<int> parts);

  /// Part i, or 0 past the end.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int weight() const;
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  const std::vector<int>& parts() const { return parts_; }

  /// Text form "[3,1]"; the zero partition is "[]".
  std::string to_string() const;

  // Lexicographic on the parts list.
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

Partition conjugate(const Partition& lambda);

/// Multiset union of parts.
Partition union_of(const Partition& lambda, const Partition& mu);

/// True iff inner_i <= outer_i for every i.
bool contains(const Partition& outer, const Partition& inner);

/// True iff 0 <= outer_k - inner_k <= 1 for every k. With parts as columns
/// this is exactly the horizontal strip condition on outer / inner.
bool is_horizontal_strip(const Partition& inner, const Partition& outer);

/// All partitions of n with parts at most max_part, in lexicographic order.
std::vector<Partition> partitions_of(int n, int max_part = -1);

/// All partitions of weight <= max_weight with parts at most max_part, sorted by
/// weight and then lexicographically.
std::vector<Partition> partitions_up_to(int max_weight, int max_part = -1);

}  // namespace lrembed
