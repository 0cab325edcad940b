#pragma once

// JSON and text forms of the library's values.
//
//   partition     [3,1]
//   sequence      [[1],[2],[3]]
//   module        {"p": 2, "lambda": [3,1]}
//   element       [2,1]
//   embedding     {"module": {...}, "generators": [[2,1], ...]}
//   realization   {"p": 2, "B": [3,1], "A_generators": [[2,1]],
//                  "certificate": [{"h": 0, "quotient_type": [2]}, ...]}

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "lrembed/embed.hpp"
#include "lrembed/lrseq.hpp"
#include "lrembed/oracle.hpp"
#include "lrembed/pmod.hpp"
#include "lrembed/realize.hpp"

namespace lrembed {

using Json = nlohmann::json;

/// Throws Error(parse_error) on malformed JSON text.
Json parse_json(std::string_view text);

/// Content errors throw Error(malformed_partition) or Error(parse_error).
Partition partition_from_json(const Json& j);
PartitionSequence sequence_from_json(const Json& j);
PModule module_from_json(const Json& j);
Element element_from_json(const Json& j, const PModule& b);
Embedding embedding_from_json(const Json& j);

Partition parse_partition(std::string_view text);
PartitionSequence parse_sequence(std::string_view text);
Embedding parse_embedding(std::string_view text);

Json to_json(const Partition& lambda);
Json to_json(const PartitionSequence& seq);
Json to_json(const PModule& b);
Json to_json(const Element& x);
Json to_json(const Embedding& e);
Json to_json(const Realization& r);
Json to_json(const Report& r);

}  // namespace lrembed
