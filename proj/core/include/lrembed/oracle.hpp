#pragma once

// Brute-force ground truth at desk scale. Everything here works on explicit
// element sets of small modules and does not go through Smith normal forms,
// so it can be used to check the algebraic routes elsewhere in the library.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "lrembed/embed.hpp"
#include "lrembed/lrseq.hpp"
#include "lrembed/pmod.hpp"

namespace lrembed {

inline constexpr std::size_t kDefaultCensusBound = 1024;
inline constexpr std::size_t kDefaultIsomorphismBound = 64;

/// Bitset over the elements of a small module.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : words_((universe + 63) / 64, 0) {}

  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  std::size_t count() const;
  std::vector<std::size_t> members() const;

  ElementSet& operator|=(const ElementSet& o);
  ElementSet operator&(const ElementSet& o) const;
  bool operator==(const ElementSet&) const = default;

  std::size_t hash() const;

 private:
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

/// Mixed-radix indexing of all elements of a module with |B| <= bound.
class ElementSpace {
 public:
  /// Throws Error(bound_exceeded) when |B| > bound.
  ElementSpace(PModule b, std::size_t bound);

  const PModule& module() const { return module_; }
  std::size_t size() const { return size_; }

  std::size_t index(const Element& x) const;
  Element element(std::size_t i) const;

  std::size_t add(std::size_t a, std::size_t b) const;
  std::size_t times_p(std::size_t a) const { return times_p_[a]; }
  std::size_t multiple(std::size_t a, Int c) const;
  int order_exponent(std::size_t a) const { return order_[a]; }

  ElementSet empty_set() const { return ElementSet(size_); }
  /// Subgroup generated by the given elements.
  ElementSet closure(const std::vector<std::size_t>& gens) const;
  ElementSet closure(const Submodule& s) const;
  /// {p^k x : x in s}
  ElementSet p_power(const ElementSet& s, int k) const;
  /// {x : p^k x in s}
  ElementSet preimage_of_p_power(const ElementSet& s, int k) const;
  /// Isomorphism type of a subgroup given as a set, from the sizes of its p^j-torsion layers.
  Partition subgroup_type(const ElementSet& s) const;
  /// Type of B / s, from the sizes of {x : p^j x in s}.
  Partition quotient_type(const ElementSet& s) const;

 private:
  PModule module_;
  std::size_t size_ = 1;
  std::vector<std::size_t> radix_;
  std::vector<std::uint32_t> add_table_;
  std::vector<std::size_t> times_p_;
  std::vector<int> order_;
  std::vector<std::size_t> decode_cache_;
};

struct CensusEntry {
  ElementSet elements;
  Submodule sub;
  Partition type_a;
  Partition type_quotient;
  /// Types of B / p^h A from element counts.
  PartitionSequence sequence;
};

struct SubgroupCensus {
  PModule ambient;
  std::vector<CensusEntry> entries;
};

/// Every submodule of B exactly once, grown through index-p extensions and
/// deduplicated by element set. Throws Error(bound_exceeded) when |B| > bound.
SubgroupCensus enumerate_submodules(const PModule& b, std::size_t bound = kDefaultCensusBound);

/// (type A, type B/A, sequence) for every entry, as a sorted set.
std::set<std::tuple<Partition, Partition, PartitionSequence>> census_profile(const SubgroupCensus& census);

/// An automorphism given by the images of the standard generators.
struct Automorphism {
  PModule module;
  std::vector<Element> images;

  Element apply(const Element& x) const;
  Submodule apply(const Submodule& s) const;
};

/// Uniform over automorphisms, by rejection sampling images in B[p^{lambda_i}].
Automorphism random_automorphism(const PModule& b, std::mt19937_64& rng);

/// Elementary automorphisms (transvections, unit scalings, swaps of equal
/// summands); together they generate Aut(B).
std::vector<Automorphism> elementary_automorphisms(const PModule& b);

/// Orbit label per census entry under the group generated by elementary_automorphisms.
std::vector<std::size_t> automorphism_orbits(const SubgroupCensus& census);

/// Exhaustive decision whether some automorphism of B maps A1 onto A2.
/// Cheap isomorphism invariants are compared first; when they agree, a
/// backtracking search over images of the standard generators decides.
/// Throws Error(prime_mismatch) or Error(bound_exceeded).
bool embeddings_isomorphic(const Embedding& e1, const Embedding& e2,
                           std::size_t bound = kDefaultIsomorphismBound);

struct Report {
  Int p = 2;
  int max_weight = 0;
  std::size_t modules = 0;
  std::size_t submodules = 0;
  std::size_t lr_sequences = 0;
  std::size_t realizations = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  std::string to_text() const;
};

/// Green and Klein against the census for every B with |type(B)| <= max_weight.
Report cross_validate(Int p, int max_weight, std::size_t bound = kDefaultCensusBound);

/// Runs body(i) for i in [0, n) on a small thread pool.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace lrembed
