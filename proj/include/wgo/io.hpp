#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "wgo/torsion.hpp"
#include "wgo/weighted.hpp"

namespace wgo {

using Json = nlohmann::ordered_json;

// Integers are emitted as JSON numbers when they fit in 64 bits, else as decimal strings.
Json integer_to_json(const Integer& x);
Integer integer_from_json(const Json& j);

Json weights_to_json(std::span<const Integer> b);
WeightVector weights_from_json(const Json& j);
// Parses "[5,1,4,3,6,2]"; throws ParameterError on malformed text.
WeightVector parse_weights(std::string_view text);

Json permutation_to_json(std::span<const std::size_t> sigma);

// {"i,j": {"l": "polynomial"}} with empty products omitted.
Json table_to_json(const StructureTable& table);
StructureTable structure_table_from_json(const Json& j, std::size_t size);
Json table_to_json(const OrdinaryTable& table);
OrdinaryTable ordinary_table_from_json(const Json& j, std::size_t size);

// Rows "i,j,l,value" under a header line.
std::string table_to_csv(const StructureTable& table);
std::string table_to_csv(const OrdinaryTable& table);

// {degree: {"rank": r, "torsion": [orders]}}
Json cohomology_to_json(const CohomologyGroups& groups);

}  // namespace wgo
