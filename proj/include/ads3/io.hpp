#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "ads3/group.hpp"
#include "ads3/series.hpp"

namespace ads3 {

using Json = nlohmann::ordered_json;

// [a, b, c, d] row-major. Throws ParseError naming `field`.
GroupElement element_from_json(const nlohmann::json& j, const std::string& field);
Json element_to_json(const GroupElement& g);

// {"label", "strategy": "free"|"hash", "generators": [{"first": [..], "second": [..]}]}
GroupPresentation group_from_json(const nlohmann::json& j);
GroupPresentation group_from_string(const std::string& text);
GroupPresentation group_from_file(const std::string& path);
Json group_to_json(const GroupPresentation& g);

// IEEE infinities become the string "inf" / "-inf".
Json number(double v);

Json growth_to_json(const GrowthConstants& g);
Json certificate_to_json(const IndependenceCertificate& cert, std::uint64_t seed);
Json nonvanishing_to_json(const NonvanishingResult& r);

// Compiler and library identification embedded in reports.
std::string toolchain();

// Writes through a sibling temporary file and renames it into place.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace ads3
