#pragma once

// Serialization of classification results. The structured form is a single
// JSON document {schema_version, query_echo, results, warnings, provenance};
// keys are emitted in sorted order so identical content gives identical bytes.

#include <string>
#include <vector>

#include "json.hpp"

#include "scrolls/classifier.hpp"

namespace scrolls {

inline constexpr int kSchemaVersion = 1;

using nlohmann::json;

struct Report {
    json query_echo = json::object();
    std::vector<json> results;
    std::vector<std::string> warnings;
    std::vector<std::string> provenance;  // one per result

    bool operator==(const Report&) const = default;
};

json to_json(const DivisorClass& d);
json to_json(const GenericScrollModel& m);
json to_json(const TableRow& r);
json to_json(const ScrollModel& m);
json to_json(const MinCurveReport& r);
json to_json(const GrassCurveType& t);
json to_json(const Degenerate& d);
json to_json(const Rejected& r);
json to_json(const Report& r);

GenericScrollModel generic_model_from_json(const json& j);
TableRow table_row_from_json(const json& j);
Report report_from_json(const json& j);

/// Canonical structured text: sorted keys, two-space indent, trailing newline.
std::string serialize_structured(const Report& r);
Report parse_structured(const std::string& text);

std::string render_text(const Report& r);

}  // namespace scrolls
