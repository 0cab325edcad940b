#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "lrembed_cli/cli.hpp"

using lrembed::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("coeff") {
  auto r = call({"coeff", "[2,1]", "[3,2,1]", "[2,1]"});
  CHECK(r.code == 0);
  CHECK(r.out == "2\n");
  r = call({"coeff", "[2]", "[1,1]", "[]"});
  CHECK(r.code == 0);
  CHECK(r.out == "0\n");
  r = call({"coeff", "[2,1]", "[3,2,1]", "[2,1]", "--json"});
  CHECK(r.out.find("\"coefficient\":2") != std::string::npos);
}

TEST_CASE("check") {
  auto r = call({"check", "[[1],[2],[3]]"});
  CHECK(r.code == 0);
  CHECK(r.out.find("inequalities: true") != std::string::npos);
  CHECK(r.out.find("word:         true") != std::string::npos);
  CHECK(r.out.find("windows:      true") != std::string::npos);
  r = call({"check", "[[],[1],[1,1]]"});
  CHECK(r.code == 1);
  r = call({"check", "[[2],[1]]", "--json"});
  CHECK(r.code == 1);
  CHECK(r.out.find("\"increasing\":false") != std::string::npos);
}

TEST_CASE("enumerate and tableau") {
  auto r = call({"enumerate", "[2,1]", "[3,2,1]", "[2,1]"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 2);
  r = call({"tableau", "[[2],[2,1],[3,1]]"});
  CHECK(r.out == ".1\n.\n2\n");
}

TEST_CASE("realize") {
  auto r = call({"realize", "[[2],[2,1],[3,1]]", "--p", "2", "--json"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"A_generators\":[[2,1]]") != std::string::npos);
  CHECK(r.out.find("\"verified\":true") != std::string::npos);
  r = call({"realize", "[[],[1],[1,1]]"});
  CHECK(r.code == 2);
  CHECK(r.err.find("not an LR sequence") != std::string::npos);
}

TEST_CASE("analyze and decompose") {
  const std::string e = R"({"module":{"p":2,"lambda":[4,3,2]},"generators":[[4,0,2],[0,4,0]]})";
  auto r = call({"analyze", e});
  CHECK(r.code == 0);
  CHECK(r.out.find("[[3,2,1],[3,3,2],[4,3,2]]") != std::string::npos);
  CHECK(r.out.find("Q(4,2) + P(3,1)") != std::string::npos);
  r = call({"decompose", e});
  CHECK(r.out == "Q(4,2) + P(3,1)\n");
  r = call({"decompose", R"({"module":{"p":2,"lambda":[3]},"generators":[[1]]})"});
  CHECK(r.code == 2);
  CHECK(r.err.find("p^2-bounded") != std::string::npos);
  r = call({"analyze", R"({"module":{"p":2,"lambda":[3]},"generators":[[1]]})"});
  CHECK(r.code == 0);
  CHECK(r.out.find("exceeds 2") != std::string::npos);
}

TEST_CASE("oracle") {
  auto r = call({"oracle", "--p", "3", "--max-weight", "3", "--json"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"ok\":true") != std::string::npos);
}

TEST_CASE("usage errors have distinct messages") {
  auto bad_partition = call({"coeff", "[1,2]", "[3]", "[]"});
  auto bad_json = call({"coeff", "[1,", "[3]", "[]"});
  auto bad_prime = call({"realize", "[[1],[2],[3]]", "--p", "4"});
  auto bad_weight = call({"coeff", "[1]", "[3]", "[1]"});
  auto no_command = call({});
  for (const auto* r : {&bad_partition, &bad_json, &bad_prime, &bad_weight, &no_command}) CHECK(r->code == 2);
  CHECK(bad_partition.err.find("malformed partition") != std::string::npos);
  CHECK(bad_json.err.find("parse error") != std::string::npos);
  CHECK(bad_prime.err.find("not a prime") != std::string::npos);
  CHECK(bad_weight.err.find("weight mismatch") != std::string::npos);
}

TEST_CASE("file input and output") {
  const std::string in = "cli_test_sequence.json";
  const std::string out = "cli_test_output.txt";
  {
    std::ofstream f(in);
    f << "[[1],[2],[3]]";
  }
  auto r = call({"tableau", in, "--out", out});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(out);
  std::stringstream buf;
  buf << f.rdbuf();
  CHECK(buf.str() == ".\n1\n2\n");
  std::remove(in.c_str());
  std::remove(out.c_str());
  CHECK(call({"tableau", "no_such_file.json"}).code == 2);
}
