#pragma once

// Constructive direction: from an LR sequence to an explicit submodule A of
// B = M(gr) whose quotients B / p^h A have the prescribed types.

#include <string>
#include <utility>
#include <vector>

#include "lrembed/lrseq.hpp"
#include "lrembed/pmod.hpp"

namespace lrembed {

/// B = M(upper) and U = span{ p^{upper_i - 1} e_i : upper_i - lower_i = 1 }.
/// Throws Error(not_horizontal_strip) unless upper / lower is a horizontal strip.
std::pair<PModule, Submodule> initial_semisimple(const Partition& lower, const Partition& upper, Int p);

/// One lifting step for a window [g0, g1, g2]: given U semisimple in B with
/// type(B) = g2 and type(B/U) = g1, returns A containing U with pA = U,
/// type(A) = alpha of the window and type(B/A) = g0.
Submodule realize_step(const PartitionSequence& window, const Submodule& u);

struct Realization {
  PartitionSequence gammas;
  Submodule a;
  /// chain[h] = p^h A for h = 0..r.
  std::vector<Submodule> chain;

  const PModule& ambient() const { return a.ambient(); }
};

/// Throws Error(not_lr_sequence) when the input is not an LR sequence.
Realization realize_full(const PartitionSequence& gammas, Int p);

/// Independent re-check of a realization; returns a list of failures (empty when valid).
std::vector<std::string> verify_realization(const Realization& r);

}  // namespace lrembed
