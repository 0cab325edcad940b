#include "lrembed/io.hpp"

#include "lrembed/error.hpp"

namespace lrembed {

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::parse_error, "invalid JSON: " + std::string(e.what()));
  }
}

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw Error(Errc::malformed_partition, "partition must be an array of integers, got " + j.dump());
  std::vector<int> parts;
  for (const auto& x : j) {
    if (!x.is_number_integer()) {
      throw Error(Errc::malformed_partition, "partition must be an array of integers, got " + j.dump());
    }
    auto v = x.get<long long>();
    if (v <= 0 || v > 1'000'000) throw Error(Errc::malformed_partition, "partition parts must be positive: " + j.dump());
    parts.push_back(static_cast<int>(v));
  }
  return Partition(std::move(parts));
}

PartitionSequence sequence_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) {
    throw Error(Errc::parse_error, "sequence must be a non-empty array of partitions, got " + j.dump());
  }
  std::vector<Partition> gammas;
  for (const auto& x : j) gammas.push_back(partition_from_json(x));
  return PartitionSequence(std::move(gammas));
}

PModule module_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("lambda") || !j.at("p").is_number_integer()) {
    throw Error(Errc::parse_error, "module must be {\"p\": prime, \"lambda\": partition}, got " + j.dump());
  }
  return PModule(j.at("p").get<Int>(), partition_from_json(j.at("lambda")));
}

Element element_from_json(const Json& j, const PModule& b) {
  if (!j.is_array() || j.size() != b.rank()) {
    throw Error(Errc::parse_error, "element must be an array of " + std::to_string(b.rank()) + " integers, got " +
                                       j.dump());
  }
  std::vector<Int> coords;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw Error(Errc::parse_error, "element coordinates must be integers: " + j.dump());
    coords.push_back(x.get<Int>());
  }
  return b.reduce(std::move(coords));
}

Embedding embedding_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("module") || !j.contains("generators") || !j.at("generators").is_array()) {
    throw Error(Errc::parse_error, "embedding must be {\"module\": ..., \"generators\": [...]}, got " + j.dump());
  }
  PModule b = module_from_json(j.at("module"));
  std::vector<Element> gens;
  for (const auto& g : j.at("generators")) gens.push_back(element_from_json(g, b));
  return Embedding(b, std::move(gens));
}

Partition parse_partition(std::string_view text) { return partition_from_json(parse_json(text)); }
PartitionSequence parse_sequence(std::string_view text) { return sequence_from_json(parse_json(text)); }
Embedding parse_embedding(std::string_view text) { return embedding_from_json(parse_json(text)); }

Json to_json(const Partition& lambda) { return Json(lambda.parts()); }

Json to_json(const PartitionSequence& seq) {
  Json j = Json::array();
  for (const auto& g : seq) j.push_back(to_json(g));
  return j;
}

Json to_json(const PModule& b) { return Json{{"p", b.p()}, {"lambda", to_json(b.lambda())}}; }

Json to_json(const Element& x) { return Json(x.coords); }

Json to_json(const Embedding& e) {
  Json gens = Json::array();
  for (const auto& g : e.sub.generators()) gens.push_back(to_json(g));
  return Json{{"module", to_json(e.ambient())}, {"generators", gens}};
}

Json to_json(const Realization& r) {
  Json gens = Json::array();
  const Submodule a = minimized(r.a);
  for (const auto& g : a.generators()) gens.push_back(to_json(g));
  Json cert = Json::array();
  for (std::size_t h = 0; h < r.chain.size(); ++h) {
    cert.push_back(Json{{"h", h}, {"quotient_type", to_json(quotient_type(r.chain[h]))}});
  }
  return Json{{"p", r.ambient().p()}, {"B", to_json(r.ambient().lambda())}, {"A_generators", gens}, {"certificate", cert}};
}

Json to_json(const Report& r) {
  return Json{{"p", r.p},
              {"max_weight", r.max_weight},
              {"modules", r.modules},
              {"submodules", r.submodules},
              {"lr_sequences", r.lr_sequences},
              {"realizations", r.realizations},
              {"violations", r.violations},
              {"ok", r.ok()}};
}

}  // namespace lrembed
