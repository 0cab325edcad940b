#include "doctest.h"

#include <random>

#include "lrembed/error.hpp"
#include "lrembed/oracle.hpp"
#include "lrembed/pmod.hpp"

using namespace lrembed;

namespace {

Element el(std::initializer_list<Int> c) { return Element{std::vector<Int>(c)}; }

Submodule random_submodule(const PModule& b, std::mt19937_64& rng, std::size_t gens) {
  std::vector<Element> g;
  for (std::size_t k = 0; k < gens; ++k) {
    Element x = b.zero();
    for (std::size_t i = 0; i < b.rank(); ++i)
      x.coords[i] = static_cast<Int>(rng() % static_cast<std::uint64_t>(b.modulus(i)));
    g.push_back(x);
  }
  return Submodule(b, g);
}

}  // namespace

TEST_CASE("module construction") {
  CHECK_THROWS_AS(PModule(4, {2}), Error);
  CHECK_THROWS_AS(PModule(1, {2}), Error);
  const PModule b(2, {3, 1});
  CHECK(b.rank() == 2);
  CHECK(b.modulus(0) == 8);
  CHECK(b.reduce({9, 3}) == el({1, 1}));
  CHECK(b.order_exponent(el({2, 1})) == 2);
  CHECK(PModule(3, {}).rank() == 0);
  CHECK_THROWS_AS(Submodule(b, {el({8, 0})}), Error);
  CHECK_THROWS_AS(Submodule(b, {el({1})}), Error);
}

TEST_CASE("quotient types") {
  const PModule b(2, {3, 1});
  CHECK(quotient_type(Submodule::zero(b)) == Partition{3, 1});
  CHECK(quotient_type(Submodule(b, {el({2, 1})})) == Partition{2});
  CHECK(quotient_type(Submodule(b, {el({4, 0})})) == Partition{2, 1});
  CHECK(quotient_type(Submodule::whole(b)) == Partition{});
  CHECK(quotient_type(Submodule::zero(PModule(2, {}))) == Partition{});
}

TEST_CASE("p-powers and exponents") {
  const PModule b(2, {3, 1});
  const Submodule a(b, {el({2, 1})});
  CHECK(same_submodule(p_power(a, 0), a));
  CHECK(same_submodule(p_power(a, 1), Submodule(b, {el({4, 0})})));
  CHECK(same_submodule(p_power(a, 2), Submodule::zero(b)));
  CHECK(exponent(Submodule::zero(b)) == 0);
  CHECK(exponent(a) == 2);
  CHECK(exponent(Submodule::whole(PModule(2, {3}))) == 3);
  CHECK(module_type(a) == Partition{2});
  CHECK(log_order(a) == 2);
}

TEST_CASE("membership and sums") {
  const PModule b(3, {2, 1});
  const Submodule a(b, {el({3, 1})});
  CHECK(contains(a, el({6, 2})));
  CHECK_FALSE(contains(a, el({3, 0})));
  const Submodule s = sum(a, Submodule(b, {el({0, 1})}));
  CHECK(same_submodule(s, Submodule(b, {el({3, 0}), el({0, 1})})));
  CHECK(contains(s, a));
  CHECK(minimized(Submodule(b, {el({3, 1}), el({6, 2}), el({0, 0})})).generators().size() == 1);
}

TEST_CASE("quotient presentations") {
  const PModule b(2, {2});
  const auto qp = quotient_presentation(Submodule(b, {el({2})}));
  CHECK(qp.quotient.lambda() == Partition{1});
  CHECK(qp.project(el({1})) == el({1}));
  CHECK(qp.project(el({2})) == el({0}));

  const PModule b2(2, {3, 1});
  const auto q2 = quotient_presentation(Submodule(b2, {el({2, 1})}));
  CHECK(q2.quotient.lambda() == Partition{2});
  CHECK(q2.project(q2.lift_element(el({1}))) == el({1}));
  CHECK(b2.order_exponent(q2.lift_element(el({1}))) >= 2);
}

TEST_CASE("quotient presentations round trip on random submodules") {
  std::mt19937_64 rng(11);
  for (const Partition& lambda : partitions_up_to(6, 3)) {
    for (Int p : {2, 3}) {
      const PModule b(p, lambda);
      for (int trial = 0; trial < 6; ++trial) {
        const Submodule w = random_submodule(b, rng, 1 + trial % 3);
        const auto qp = quotient_presentation(w);
        CHECK(qp.quotient.lambda() == quotient_type(w));
        for (std::size_t k = 0; k < qp.quotient.rank(); ++k) {
          const Element e = qp.quotient.basis(k);
          CHECK(qp.project(qp.lift_element(e)) == e);
        }
        for (const auto& g : w.generators()) CHECK(qp.quotient.is_zero(qp.project(g)));
        CHECK(same_submodule(qp.preimage(Submodule::zero(qp.quotient)), w));
        CHECK(same_submodule(qp.preimage(qp.image(Submodule::whole(b))), Submodule::whole(b)));
      }
    }
  }
}

TEST_CASE("quotient weight matches element count") {
  std::mt19937_64 rng(5);
  for (const Partition& lambda : partitions_up_to(8)) {
    const PModule b(2, lambda);
    ElementSpace space(b, 256);
    for (int trial = 0; trial < 4; ++trial) {
      const Submodule w = random_submodule(b, rng, 1 + trial % 2);
      const std::size_t size = space.closure(w).count();
      int log = 0;
      for (std::size_t s = size; s > 1; s /= 2) ++log;
      CHECK(quotient_type(w).weight() == lambda.weight() - log);
      CHECK(log_order(w) == log);
      CHECK(module_type(w) == space.subgroup_type(space.closure(w)));
      Partition previous = quotient_type(w);
      for (int h = 1; h <= lambda.largest(); ++h) {
        const Partition next = quotient_type(p_power(w, h));
        CHECK(contains(next, previous));
        previous = next;
      }
    }
  }
}

TEST_CASE("frames track automorphisms") {
  const PModule b(2, {3, 1});
  Frame f(b);
  f.add_multiple(1, 0, 4);
  CHECK(f.basis_vector(1) == el({4, 1}));
  CHECK_THROWS_AS(f.add_multiple(1, 0, 2), Error);
  f.add_multiple(0, 1, 1);
  f.scale(0, 3);
  for (std::size_t i = 0; i < 2; ++i) CHECK(f.coordinates(f.basis_vector(i)) == b.basis(i));
  const Element x = el({5, 1});
  CHECK(f.element(f.coordinates(x)) == x);
}

TEST_CASE("semisimple normal form") {
  const PModule b(2, {2, 1});
  const auto z = normalize_semisimple(Submodule::zero(b));
  CHECK(z.kappa == std::vector<int>{0, 0});
  CHECK(z.basis() == std::vector<Element>{el({1, 0}), el({0, 1})});

  const auto s = normalize_semisimple(Submodule(b, {el({2, 1})}));
  CHECK(s.kappa == std::vector<int>{0, 1});
  CHECK(s.basis()[0] == el({1, 0}));
  CHECK(s.basis()[1] == el({2, 1}));

  const auto c = normalize_semisimple(Submodule(PModule(2, {2}), {el({2})}));
  CHECK(c.kappa == std::vector<int>{1});

  CHECK_THROWS_AS(normalize_semisimple(Submodule(b, {el({1, 0})})), Error);
}

TEST_CASE("semisimple normal form on every socle subspace") {
  for (const Partition& lambda : partitions_up_to(6)) {
    for (Int p : {2, 3}) {
      const PModule b(p, lambda);
      if (checked_pow(p, lambda.weight()) > 1024) continue;
      const auto census = enumerate_submodules(b);
      for (const auto& e : census.entries) {
        if (!same_submodule(p_power(e.sub, 1), Submodule::zero(b))) continue;
        const auto form = normalize_semisimple(e.sub);
        std::vector<Element> socle;
        std::vector<int> lowered;
        for (std::size_t i = 0; i < b.rank(); ++i) {
          lowered.push_back(b.exponent(i) - form.kappa[i]);
          if (form.kappa[i] == 1) socle.push_back(b.p_multiple(form.basis()[i], b.exponent(i) - 1));
        }
        CHECK(same_submodule(Submodule(b, socle), e.sub));
        CHECK(Partition::from_parts(lowered) == quotient_type(e.sub));
      }
    }
  }
}
