#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "veerkit/cfk.hpp"
#include "veerkit/classify.hpp"
#include "veerkit/floer_symp.hpp"
#include "veerkit/surface_map.hpp"
#include "veerkit/surgery.hpp"

namespace veerkit::io {

using Json = nlohmann::json;

// Parse errors become InputError carrying the byte position.
Json parse(const std::string& text, const std::string& source = "<input>");
Json load(const std::filesystem::path& path);
// Two-space indent, keys sorted, trailing newline.
std::string dump(const Json& j);

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

// Canonical form: arrays sorted by id, rationals in lowest terms, opaque values as "opaque".
Json to_json(const StandardFormMap& m);
StandardFormMap map_from_json(const Json& j);

Json to_json(const ReducedCFK& c);
ReducedCFK cfk_from_json(const Json& j);

Json to_json(const ValidationReport& r);
Json to_json(const DimBreakdown& d);
Json to_json(const BValue& b);
Json to_json(const Classification& c);
Json to_json(const CornerHomology& h);
Json to_json(const AuditReport& r);

}  // namespace veerkit::io
