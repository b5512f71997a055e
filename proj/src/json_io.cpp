#include "blockchar/json_io.hpp"

#include <stdexcept>

namespace blockchar {

Json rational_to_json(const Rational& value) { return to_string(value); }

Rational rational_from_json(const Json& value) {
    if (value.is_string()) return parse_rational(value.get<std::string>());
    if (value.is_number_integer()) return Rational(BigInt(std::to_string(value.get<long long>())));
    throw std::invalid_argument("expected a rational string, got " + value.dump());
}

Json rationals_to_json(std::span<const Rational> values) {
    Json out = Json::array();
    for (const auto& v : values) out.push_back(rational_to_json(v));
    return out;
}

std::vector<Rational> rationals_from_json(const Json& values) {
    if (!values.is_array()) throw std::invalid_argument("expected an array of rationals");
    std::vector<Rational> out;
    for (const auto& v : values) out.push_back(rational_from_json(v));
    return out;
}

Json partition_to_json(const Partition& lambda) {
    Json out = Json::array();
    for (int part : lambda.parts()) out.push_back(part);
    return out;
}

Partition partition_from_json(const Json& parts) {
    if (!parts.is_array()) throw std::invalid_argument("expected an array of parts");
    std::vector<int> out;
    for (const auto& p : parts) out.push_back(p.get<int>());
    return Partition(std::move(out));
}

}  // namespace blockchar
