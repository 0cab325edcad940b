#pragma once

// Subgroup embeddings (A in B): their partition sequences, the indecomposable
// p^2-bounded embeddings P(l,m) and Q(l,s), direct sums, and decomposition
// of p^2-bounded embeddings into indecomposables.

#include <map>
#include <string>
#include <vector>

#include "lrembed/lrseq.hpp"
#include "lrembed/pmod.hpp"

namespace lrembed {

struct Embedding {
  Submodule sub;

  Embedding() = default;
  explicit Embedding(Submodule s) : sub(std::move(s)) {}
  Embedding(PModule ambient, std::vector<Element> generators) : sub(std::move(ambient), std::move(generators)) {}

  const PModule& ambient() const { return sub.ambient(); }
};

enum class SummandKind { P, Q };

/// P(l,m):  (p^{l-m}) in Z/p^l,                    l >= 1, 0 <= m <= min(l,2)
/// Q(l,s):  ((p^{l-2}, p^{s-1})) in Z/p^l + Z/p^s,  1 <= s < l-1
struct Summand {
  SummandKind kind = SummandKind::P;
  int ell = 1;
  int index = 0;  // m for P, s for Q

  /// Throws Error(invalid_summand) outside the ranges above.
  static Summand P(int ell, int m);
  static Summand Q(int ell, int s);

  std::string to_string() const;

  bool operator==(const Summand&) const = default;
};

/// Printing order: larger l first; Q before P at equal l; then larger index.
struct SummandOrder {
  bool operator()(const Summand& a, const Summand& b) const;
};

class SummandMultiset {
 public:
  void add(const Summand& s, int count = 1);
  int count(const Summand& s) const;
  std::size_t size() const;
  const std::map<Summand, int, SummandOrder>& items() const { return counts_; }

  /// "Q(4,2) + P(3,1) + P(2,0)"; the empty multiset prints as "0".
  std::string to_string() const;

  bool operator==(const SummandMultiset& other) const { return counts_ == other.counts_; }

 private:
  std::map<Summand, int, SummandOrder> counts_;
};

Embedding model(const Summand& s, Int p);

/// [type(B / p^h A)] for h = 0..exponent(A).
PartitionSequence analyze(const Embedding& e);

/// Ambient summands are merged and re-sorted; generators are carried along.
Embedding direct_sum(const Embedding& a, const Embedding& b);

Embedding direct_sum_of_models(const SummandMultiset& summands, Int p);

struct Decomposition {
  SummandMultiset summands;
  /// Basis of B in which A is generated by the model generators below.
  Frame frame;
  std::vector<Element> generators;
};

/// Throws Error(not_p2_bounded) unless p^2 A = 0. The result is self-checked:
/// the model generators in the returned frame span A, and the union of the
/// models' sequences equals analyze(e).
Decomposition decompose_with_certificate(const Embedding& e);

SummandMultiset decompose(const Embedding& e);

/// Level-by-level union of sequences of equal length (shorter ones padded
/// with their last partition).
PartitionSequence union_of(const PartitionSequence& a, const PartitionSequence& b);

}  // namespace lrembed
