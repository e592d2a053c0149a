#pragma once

#include <string>

#include <json.hpp>

#include "ribbon/curves.hpp"
#include "ribbon/intersect.hpp"
#include "ribbon/invariants.hpp"

namespace ribbon::io {

using Json = nlohmann::ordered_json;

Json curve_json(const ClosedCurve3& c);
ClosedCurve3 curve_from_json(const Json& j);

Json frame_json(const RibbonFrame& f);
/// Throws ParseError on a malformed document and propagates
/// VanishingGenerator / InvalidArgument from frame construction.
RibbonFrame frame_from_json(const Json& j);

Json tolerance_json(const ToleranceSet& tol);
Json report_json(const ValidationReport& r);
Json double_points_json(const std::vector<DoublePoint>& dps);
Json crossings_json(const std::vector<CrossingRecord>& recs);
Json goalposts_json(const std::vector<GoalPost>& gps);
Json laurent_json(const LaurentPoly& p);
Json profile_json(const InvariantProfile& p);

std::string read_text(const std::string& path);  // IoError when unreadable
void write_text(const std::string& path, const std::string& text);
Json parse_json(const std::string& text);  // ParseError
RibbonFrame load_frame(const std::string& path);

/// Two-space indented JSON with a trailing newline.
std::string dump(const Json& j);

}  // namespace ribbon::io
