#include "doctest.h"

#include "lrembed/error.hpp"
#include "lrembed/io.hpp"

using namespace lrembed;

TEST_CASE("partitions and sequences") {
  CHECK(parse_partition("[3,1]") == Partition{3, 1});
  CHECK(parse_partition("[]") == Partition{});
  CHECK(to_json(Partition{3, 1}).dump() == "[3,1]");
  CHECK(parse_sequence("[[1],[2],[3]]") == PartitionSequence{{1}, {2}, {3}});
  CHECK(to_json(PartitionSequence{{}, {1}}).dump() == "[[],[1]]");

  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::internal;
  };
  CHECK(code_of([] { parse_partition("[1,2]"); }) == Errc::malformed_partition);
  CHECK(code_of([] { parse_partition("[1,"); }) == Errc::parse_error);
  CHECK(code_of([] { parse_partition("[0]"); }) == Errc::malformed_partition);
  CHECK(code_of([] { parse_partition("{\"a\":1}"); }) == Errc::malformed_partition);
  CHECK(code_of([] { parse_sequence("[]"); }) == Errc::parse_error);
}

TEST_CASE("embeddings") {
  const Embedding e = parse_embedding(R"({"module":{"p":2,"lambda":[3,1]},"generators":[[10,1]]})");
  CHECK(e.ambient().lambda() == Partition{3, 1});
  CHECK(e.sub.generators().front() == Element{{2, 1}});
  CHECK(to_json(e).dump() == R"({"generators":[[2,1]],"module":{"lambda":[3,1],"p":2}})");
  CHECK_THROWS_AS(parse_embedding(R"({"module":{"p":4,"lambda":[3,1]},"generators":[]})"), Error);
  CHECK_THROWS_AS(parse_embedding(R"({"module":{"p":2,"lambda":[3,1]},"generators":[[1]]})"), Error);
  CHECK_THROWS_AS(parse_embedding(R"({"module":{"p":2}})"), Error);
}

TEST_CASE("realization certificate") {
  const Realization r = realize_full(PartitionSequence{{2}, {2, 1}, {3, 1}}, 2);
  const Json j = to_json(r);
  CHECK(j.at("p") == 2);
  CHECK(j.at("B").dump() == "[3,1]");
  CHECK(j.at("A_generators").dump() == "[[2,1]]");
  REQUIRE(j.at("certificate").size() == 3);
  CHECK(j.at("certificate")[0].at("quotient_type").dump() == "[2]");
  CHECK(j.at("certificate")[2].at("quotient_type").dump() == "[3,1]");
}

TEST_CASE("report") {
  Report r;
  r.violations.push_back("x");
  const Json j = to_json(r);
  CHECK(j.at("ok") == false);
  CHECK(j.at("violations").size() == 1);
}
