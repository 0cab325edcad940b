#include "doctest.h"

#include "lrembed/embed.hpp"
#include "lrembed/error.hpp"
#include "lrembed/realize.hpp"

using namespace lrembed;

namespace {

Element el(std::initializer_list<Int> c) { return Element{std::vector<Int>(c)}; }

PartitionSequence seq(std::initializer_list<Partition> gs) { return PartitionSequence(gs); }

}  // namespace

TEST_CASE("initial semisimple") {
  auto [b, u] = initial_semisimple({2, 1}, {3, 1}, 2);
  CHECK(b.lambda() == Partition{3, 1});
  CHECK(same_submodule(u, Submodule(b, {el({4, 0})})));
  CHECK(quotient_type(u) == Partition{2, 1});

  auto [b2, u2] = initial_semisimple({2}, {3}, 2);
  CHECK(same_submodule(u2, Submodule(b2, {el({4})})));

  auto [b3, u3] = initial_semisimple({2, 2}, {2, 2}, 3);
  CHECK(log_order(u3) == 0);

  CHECK_THROWS_AS(initial_semisimple({1}, {3}, 2), Error);
}

TEST_CASE("single step") {
  const PModule b(2, {3, 1});
  const Submodule a = realize_step(seq({{2}, {2, 1}, {3, 1}}), Submodule(b, {el({4, 0})}));
  CHECK(same_submodule(a, Submodule(b, {el({2, 1})})));

  const PModule c(2, {3});
  CHECK(same_submodule(realize_step(seq({{1}, {2}, {3}}), Submodule(c, {el({4})})), Submodule(c, {el({2})})));

  const PModule d(2, {2, 1});
  CHECK(log_order(realize_step(seq({{2, 1}, {2, 1}, {2, 1}}), Submodule::zero(d))) == 0);

  CHECK_THROWS_AS(realize_step(seq({{2}, {2, 1}, {3, 1}}), Submodule(b, {el({2, 0})})), Error);
  CHECK_THROWS_AS(realize_step(seq({{2}, {2, 1}, {3, 1}}), Submodule::zero(b)), Error);
  CHECK_THROWS_AS(realize_step(seq({{}, {1}, {1, 1}}), Submodule::zero(PModule(2, {1, 1}))), Error);
}

TEST_CASE("full realizations") {
  const Realization zero = realize_full(seq({{2, 1}}), 2);
  CHECK(zero.ambient().lambda() == Partition{2, 1});
  CHECK(log_order(zero.a) == 0);

  const Realization r = realize_full(seq({{1}, {2}, {3}}), 2);
  CHECK(r.ambient().lambda() == Partition{3});
  CHECK(same_submodule(r.a, Submodule(r.ambient(), {el({2})})));
  CHECK(quotient_type(r.a) == Partition{1});
  CHECK(quotient_type(p_power(r.a, 1)) == Partition{2});

  const Realization all = realize_full(seq({{}, {1}, {2}, {3}}), 2);
  CHECK(same_submodule(all.a, Submodule::whole(all.ambient())));

  CHECK_THROWS_AS(realize_full(seq({{}, {1}, {1, 1}}), 2), Error);
  CHECK(verify_realization(r).empty());
}

TEST_CASE("round trip for small LR sequences over several primes") {
  for (Int p : {2, 3, 5}) {
    for (const auto& s : increasing_sequences(6, 4, 4)) {
      if (!validate_inequalities(s)) continue;
      const Realization r = realize_full(s, p);
      // analyze stops at the exponent of A, so trailing repeats are not reproduced.
      if (s.steps() == 0 || s[s.steps() - 1] != s.back()) CHECK(analyze(Embedding(r.a)) == s);
      CHECK(verify_realization(r).empty());
      for (std::size_t h = 0; h < r.chain.size(); ++h) {
        CHECK(same_submodule(p_power(r.a, static_cast<int>(h)), r.chain[h]));
      }
    }
  }
}
