#pragma once

// JSON encoding for the CLI. Rationals are strings in canonical "p/q" form
// ("p" when the denominator is 1); integers are JSON numbers. See docs/schema.md.

#include "kuwalls/catalog.hpp"
#include "kuwalls/consistency.hpp"
#include "kuwalls/del_pezzo.hpp"
#include "kuwalls/walls.hpp"

#include "json.hpp"

namespace kuwalls {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

Json to_json(const Rational& q);
Json to_json(const ChernVector& x);
Json to_json(const KuClass& c);
Json to_json(const WallLocus& w);
Json to_json(const DestabilizerCandidate& c);
Json to_json(const SearchRules& r);
Json to_json(const ChamberReport& r);
Json to_json(const PicVector& v);
Json to_json(const ExtTable& t);
Json to_json(const CatalogEntry& e);
Json to_json(const CheckResult& r);
Json to_json(const CheckItem& i);

/// Inverse encoders; throw std::invalid_argument on malformed input.
Rational rational_from_json(const Json& j);
ChernVector chern_from_json(const Json& j);
KuClass ku_class_from_json(const Json& j);
WallLocus wall_from_json(const Json& j);
DestabilizerCandidate candidate_from_json(const Json& j);
PicVector pic_from_json(const Json& j);

/// {schema_version, command, degree, payload}; degree null when not applicable.
Json output_document(const std::string& command, std::optional<int> degree, Json payload);

}  // namespace kuwalls
