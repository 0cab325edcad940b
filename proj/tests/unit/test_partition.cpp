#include "doctest.h"

#include "lrembed/error.hpp"
#include "lrembed/partition.hpp"

using namespace lrembed;

TEST_CASE("partition construction rejects bad parts") {
  CHECK_NOTHROW(Partition{3, 1});
  CHECK_NOTHROW(Partition{});
  CHECK_THROWS_AS(Partition({1, 2}), Error);
  CHECK_THROWS_AS(Partition({2, 0}), Error);
  CHECK_THROWS_AS(Partition({-1}), Error);
  try {
    Partition({1, 3});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::malformed_partition);
  }
}

TEST_CASE("text form and basic queries") {
  Partition l{3, 1};
  CHECK(l.to_string() == "[3,1]");
  CHECK(Partition{}.to_string() == "[]");
  CHECK(l.weight() == 4);
  CHECK(l.length() == 2);
  CHECK(l.largest() == 3);
  CHECK(l[5] == 0);
  CHECK(Partition::from_parts({0, 1, 3, 0, 2}) == Partition{3, 2, 1});
}

TEST_CASE("conjugate") {
  CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
  CHECK(conjugate(Partition{}) == Partition{});
  CHECK(conjugate(Partition{2, 2}) == Partition{2, 2});
  for (const auto& l : partitions_up_to(8)) {
    CHECK(conjugate(conjugate(l)) == l);
    CHECK(conjugate(l).weight() == l.weight());
  }
}

TEST_CASE("union, containment and strips") {
  CHECK(union_of(Partition{3, 1}, Partition{2}) == Partition{3, 2, 1});
  CHECK(contains(Partition{3, 1}, Partition{2, 1}));
  CHECK_FALSE(contains(Partition{3}, Partition{2, 1}));
  CHECK(is_horizontal_strip(Partition{2}, Partition{3, 1}));
  CHECK_FALSE(is_horizontal_strip(Partition{1}, Partition{3}));
  CHECK_FALSE(is_horizontal_strip(Partition{2, 1}, Partition{2}));
}

TEST_CASE("partition counts") {
  const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 0; n <= 8; ++n) CHECK(partitions_of(n).size() == static_cast<std::size_t>(expected[n]));
  CHECK(partitions_of(4, 2).size() == 3);
  CHECK(partitions_up_to(3).size() == 7);
  CHECK(partitions_up_to(3).front() == Partition{});
}
