#pragma once

// Littlewood-Richardson sequences with parts read as columns.
//
// A sequence [g0, ..., gr] of partitions defines a tableau whose columns are
// the columns of gr; column i holds dots in rows 1..g0_i and the symbol h in
// rows g(h-1)_i+1 .. gh_i (rows counted from the top). Three independent
// validators are provided:
//
//   validate_inequalities  the strip condition plus the suffix-sum inequalities
//   validate_word          the strip condition plus the lattice-word test on the
//                          reading word (rows top to bottom, each row read from
//                          the shortest column to the tallest)
//   validate_windows       the inequality test on every padded window of length 2
//
// For sequences of length 2 the module also exposes the column-shape view:
// per-column signatures, the chain test in the column poset, and the
// injection pairing 2-only columns with strictly shorter 1-only columns.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lrembed/partition.hpp"

namespace lrembed {

class PartitionSequence {
 public:
  PartitionSequence() = default;
  explicit PartitionSequence(std::vector<Partition> gammas) : gammas_(std::move(gammas)) {}
  PartitionSequence(std::initializer_list<Partition> gammas) : gammas_(gammas) {}

  /// r: the number of steps, one less than the number of partitions.
  std::size_t steps() const { return gammas_.empty() ? 0 : gammas_.size() - 1; }
  std::size_t size() const { return gammas_.size(); }
  bool empty() const { return gammas_.empty(); }

  const Partition& operator[](std::size_t h) const { return gammas_[h]; }
  const Partition& front() const { return gammas_.front(); }
  const Partition& back() const { return gammas_.back(); }
  const std::vector<Partition>& gammas() const { return gammas_; }
  auto begin() const { return gammas_.begin(); }
  auto end() const { return gammas_.end(); }

  bool is_increasing() const;

  /// Padded window [g(h-2), g(h-1), gh] with gh read as gr beyond the end.
  PartitionSequence window(std::size_t h) const;

  /// "[[1],[2],[3]]"
  std::string to_string() const;

  auto operator<=>(const PartitionSequence&) const = default;

 private:
  std::vector<Partition> gammas_;
};

struct SequenceType {
  Partition alpha;
  Partition beta;
  Partition gamma;

  bool operator==(const SequenceType&) const = default;
  auto operator<=>(const SequenceType&) const = default;
};

/// Entries per column, top row first. 0 marks a dot (a box of g0).
struct Tableau {
  std::vector<std::vector<int>> columns;

  std::size_t rows() const { return columns.empty() ? 0 : columns.front().size(); }
};

Tableau make_tableau(const PartitionSequence& seq);

/// Fixed-width rendering: one line per row, digits for symbols, '.' for dots.
std::string render_tableau(const PartitionSequence& seq);

/// The reading word of the tableau; empty if the sequence violates the strip condition.
std::vector<int> reading_word(const PartitionSequence& seq);

bool is_lattice_word(std::span<const int> word);

/// Throws Error(not_increasing) for non-increasing input.
bool validate_inequalities(const PartitionSequence& seq);

/// False for non-increasing input or a strip violation.
bool validate_word(const PartitionSequence& seq);

/// Throws Error(not_increasing) for non-increasing input.
bool validate_windows(const PartitionSequence& seq);

/// (alpha, gr, g0) where alpha is the conjugate of the box counts per step.
/// Throws Error(not_lr_sequence) when the box counts are not weakly decreasing.
SequenceType sequence_type(const PartitionSequence& seq);

struct ColumnSignature {
  int length = 0;
  bool has_one = false;
  bool has_two = false;

  bool operator==(const ColumnSignature&) const = default;
};

/// One signature per column of g2. Requires exactly two steps and the strip
/// condition; otherwise throws (precondition_failed / not_horizontal_strip).
std::vector<ColumnSignature> column_signatures(const PartitionSequence& seq);

/// Position of a column shape in the column poset. Two shapes are comparable
/// iff they are equal or their ranks differ.
int column_rank(const ColumnSignature& sig);

/// True iff no two signatures form the incomparable pair
/// {plain column of length l, column of length l+1 holding both 1 and 2}.
bool is_column_chain(std::span<const ColumnSignature> sigs);

/// Pairs (index of 2-only column, index of 1-only column) such that every
/// 2-only column is matched to a distinct, strictly shorter 1-only column.
/// 2-only columns are handled in decreasing length; each takes the longest
/// unused admissible 1-only column (leftmost on ties). nullopt if no such
/// injection exists.
std::optional<std::vector<std::pair<std::size_t, std::size_t>>> two_to_one_matching(
    std::span<const ColumnSignature> sigs);

/// All LR sequences of the given type, ordered lexicographically by their
/// concatenated parts. Throws Error(weight_mismatch) unless |alpha|+|gamma| = |beta|.
std::vector<PartitionSequence> enumerate_lr(const SequenceType& type);

std::size_t lr_coefficient(const SequenceType& type);

/// Every increasing sequence with at most max_steps steps whose last partition
/// has weight <= max_weight and parts <= max_part.
std::vector<PartitionSequence> increasing_sequences(int max_weight, int max_part,
                                                    std::size_t max_steps);

}  // namespace lrembed
