#pragma once

// JSON encodings shared by the command line and its tests: rationals are
// "p/q" strings, partitions are arrays of parts (or "(4,2,1)" as map keys).

#include "blockchar/combinatorics.hpp"
#include "blockchar/rational.hpp"

#include <json.hpp>

#include <span>
#include <vector>

namespace blockchar {

using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational& value);
/// Accepts "p", "p/q" or an integer. Throws std::invalid_argument otherwise.
Rational rational_from_json(const Json& value);
Json rationals_to_json(std::span<const Rational> values);
std::vector<Rational> rationals_from_json(const Json& values);

Json partition_to_json(const Partition& lambda);
Partition partition_from_json(const Json& parts);

}  // namespace blockchar
