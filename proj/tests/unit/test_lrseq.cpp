#include "doctest.h"

#include <algorithm>
#include <map>
#include <tuple>

#include "lrembed/error.hpp"
#include "lrembed/lrseq.hpp"

using namespace lrembed;

namespace {

PartitionSequence seq(std::initializer_list<Partition> gs) { return PartitionSequence(gs); }

}  // namespace

TEST_CASE("inequality validator") {
  CHECK(validate_inequalities(seq({{1}, {2}, {3}})));
  CHECK(validate_inequalities(seq({{3, 1}, {3, 1}, {3, 1}})));
  CHECK_FALSE(validate_inequalities(seq({{}, {1}, {1, 1}})));
  CHECK(validate_inequalities(seq({{2}, {2, 1}, {3, 1}})));
  CHECK_THROWS_AS(validate_inequalities(seq({{2}, {1}})), Error);
}

TEST_CASE("word validator and reading order") {
  CHECK(reading_word(seq({{1}, {2}, {3}})) == std::vector<int>{1, 2});
  CHECK(reading_word(seq({{}, {1}, {1, 1}})) == std::vector<int>{2, 1});
  CHECK(validate_word(seq({{1}, {2}, {3}})));
  CHECK_FALSE(validate_word(seq({{}, {1}, {1, 1}})));
  CHECK(validate_word(seq({{2, 1}, {2, 1}})));
  CHECK_FALSE(validate_word(seq({{2}, {1}})));
  CHECK_FALSE(validate_word(seq({{1}, {3}})));
}

TEST_CASE("lattice words") {
  const std::vector<int> good{1, 1, 2, 1, 2, 3};
  const std::vector<int> bad{1, 2, 2};
  CHECK(is_lattice_word(good));
  CHECK_FALSE(is_lattice_word(bad));
  CHECK(is_lattice_word(std::vector<int>{}));
}

TEST_CASE("window validator") {
  CHECK(validate_windows(seq({{2}, {2, 1}, {3, 1}})));
  CHECK_FALSE(validate_windows(seq({{}, {1}, {1, 1}})));
  CHECK(validate_windows(seq({{1}, {2}})) == validate_inequalities(seq({{1}, {2}})));
  CHECK(seq({{1}, {2}, {3}}).window(4) == seq({{3}, {3}, {3}}));
}

TEST_CASE("three validators agree on small sequences") {
  for (const auto& s : increasing_sequences(5, 3, 3)) {
    const bool a = validate_inequalities(s);
    CHECK(a == validate_word(s));
    CHECK(a == validate_windows(s));
  }
}

TEST_CASE("sequence type") {
  CHECK(sequence_type(seq({{1}, {2}, {3}})) == SequenceType{{2}, {3}, {1}});
  CHECK(sequence_type(seq({{2, 1}, {2, 1}})) == SequenceType{{}, {2, 1}, {2, 1}});
  CHECK(sequence_type(seq({{2}, {2, 1}, {3, 1}})) == SequenceType{{2}, {3, 1}, {2}});
  CHECK_THROWS_AS(sequence_type(seq({{}, {1}, {2, 1}})), Error);
  for (const auto& s : increasing_sequences(5, 3, 3)) {
    if (!validate_inequalities(s)) continue;
    CHECK(sequence_type(s).alpha.weight() == s.back().weight() - s.front().weight());
  }
}

TEST_CASE("tableau rendering") {
  CHECK(render_tableau(seq({{1}, {2}, {3}})) == ".\n1\n2\n");
  CHECK(render_tableau(seq({{2}, {2, 1}, {3, 1}})) == ".1\n.\n2\n");
  CHECK(render_tableau(seq({{}, {2, 1}})) == "11\n1\n");
}

TEST_CASE("column signatures") {
  const auto sigs = column_signatures(seq({{2}, {2, 1}, {3, 1}}));
  REQUIRE(sigs.size() == 2);
  CHECK(sigs[0] == ColumnSignature{3, false, true});
  CHECK(sigs[1] == ColumnSignature{1, true, false});
  CHECK(column_signatures(seq({{1}, {2}, {3}}))[0] == ColumnSignature{3, true, true});
  for (const auto& s : column_signatures(seq({{2, 1}, {2, 1}, {2, 1}}))) {
    CHECK_FALSE(s.has_one);
    CHECK_FALSE(s.has_two);
  }
  CHECK_THROWS_AS(column_signatures(seq({{1}, {2}})), Error);
  CHECK_THROWS_AS(column_signatures(seq({{}, {}, {2}})), Error);
}

TEST_CASE("column poset") {
  CHECK(column_rank({3, false, true}) == 5);
  CHECK(column_rank({1, true, false}) == 0);
  const ColumnSignature plain{2, false, false}, both{3, true, true};
  CHECK(column_rank(plain) == column_rank(both));
  const std::vector<ColumnSignature> incomparable{both, plain};
  CHECK_FALSE(is_column_chain(incomparable));
  CHECK(is_column_chain(std::vector<ColumnSignature>{}));
  CHECK(is_column_chain(std::vector<ColumnSignature>{plain}));
  CHECK(is_column_chain(column_signatures(seq({{2}, {2, 1}, {3, 1}}))));
}

TEST_CASE("two-to-one matching") {
  using Sigs = std::vector<ColumnSignature>;
  auto m = two_to_one_matching(Sigs{{3, false, true}, {1, true, false}});
  REQUIRE(m);
  CHECK(*m == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}});

  m = two_to_one_matching(Sigs{{4, false, true}, {3, true, false}, {2, false, true}, {1, true, false}});
  REQUIRE(m);
  CHECK(*m == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {2, 3}});

  CHECK_FALSE(two_to_one_matching(Sigs{{2, false, true}, {2, true, false}}));
}

TEST_CASE("enumeration and coefficients") {
  CHECK(enumerate_lr({{1}, {2}, {1}}) == std::vector<PartitionSequence>{seq({{1}, {2}})});
  CHECK(lr_coefficient({{2, 1}, {3, 2, 1}, {2, 1}}) == 2);
  CHECK(enumerate_lr({{2}, {1, 1}, {}}).empty());
  CHECK_THROWS_AS(enumerate_lr({{2}, {3}, {2}}), Error);

  const auto all = enumerate_lr({{2, 1}, {3, 2, 1}, {2, 1}});
  CHECK(std::is_sorted(all.begin(), all.end(), [](const auto& a, const auto& b) {
    std::vector<int> x, y;
    for (const auto& g : a) x.insert(x.end(), g.parts().begin(), g.parts().end());
    for (const auto& g : b) y.insert(y.end(), g.parts().begin(), g.parts().end());
    return x < y;
  }));
  for (const auto& s : all) {
    CHECK(validate_inequalities(s));
    CHECK(sequence_type(s) == SequenceType{{2, 1}, {3, 2, 1}, {2, 1}});
  }
}

TEST_CASE("enumeration matches filtering all increasing sequences") {
  std::map<std::tuple<Partition, Partition, Partition>, std::size_t> counted;
  for (const auto& s : increasing_sequences(5, 3, 3)) {
    if (s.steps() == 0 || !validate_inequalities(s)) continue;
    const auto t = sequence_type(s);
    if (t.alpha.largest() != static_cast<int>(s.steps())) continue;
    ++counted[{t.alpha, t.beta, t.gamma}];
  }
  for (const auto& [key, n] : counted) {
    const auto& [a, b, g] = key;
    CHECK(lr_coefficient({a, b, g}) == n);
  }
}
