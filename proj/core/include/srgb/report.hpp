#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "srgb/gauss_bonnet.hpp"
#include "srgb/printed_tables.hpp"
#include "srgb/surface_ops.hpp"

namespace srgb {

using json = nlohmann::ordered_json;

json to_json(const TableDiffReport& rep);
json to_json(const GBReport& rep);
json to_json(const AdaptedFrame& f);
json to_json(const Mat2& m);
json to_json(const ExpansionFit& fit);

std::string space_name(ModelSpaceId space);
std::string dist_name(DistributionKind dist);
std::string class_name(Horizontality h);

/// The full constructed-vs-printed discrepancy log over the standard grid
/// (brackets, connection tables, curvature tables). This is artifact output,
/// not a test failure: the constructed chain governs downstream computation.
json discrepancy_log();

/// Aligned text rendering of a connection table.
std::string format_table(const ConnectionTable& t);

/// RFC 4180 rows (CRLF line endings, quoted where needed).
std::string csv_join(const std::vector<std::string>& fields);

/// Serialize with a trailing newline; doubles go through nlohmann's
/// shortest-round-trip printer, which is deterministic per platform.
std::string dump_json(const json& j);

void write_file(const std::string& path, const std::string& content);

}  // namespace srgb
