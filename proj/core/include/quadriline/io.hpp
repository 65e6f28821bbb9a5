#pragma once

#include <cstddef>
#include <string>

#include <nlohmann/json.hpp>

#include "quadriline/configuration.hpp"
#include "quadriline/paths.hpp"
#include "quadriline/rectangle.hpp"

namespace quadriline {

using json = nlohmann::ordered_json;

/// Parses the configuration document
///   {"field": "rational" | {"prime": p},
///    "pairs": [[{a, b, c}, {a, b, c}], [{a, b, c}, {a, b, c}]]}
/// where numbers are strings in the scalar grammar or JSON integers.
/// Throws ParseError carrying a JSON-pointer location.
ConfigurationInput parse_config(const json& doc);
ConfigurationInput parse_config_text(const std::string& text);
ConfigurationInput load_config(const std::string& path);

json to_json(const Scalar& s);
json to_json(const Ratio& r);
json to_json(const Point& p);
json to_json(const Line& l);
json to_json(const ProjectiveRectangle& p);

/// Reads back the "projective" array written by to_json.
ProjectiveRectangle rectangle_from_json(const json& j, const Field& field);

/// A rectangle of the normalized configuration, carried back to the input
/// frame: vertices (or the at-infinity marker), slope, aspect and center.
json rectangle_report(const Normalization& n, const ConfigurationInput& input, const ProjectiveRectangle& p);

json classify_report(const ConfigurationInput& input);
json rect_report(const ConfigurationInput& input, PathKind kind, const Ratio& query);
json path_report(const ConfigurationInput& input, PathKind kind, std::size_t samples);
json locus_report(const ConfigurationInput& input);
json census_report(const ConfigurationInput& input);

}  // namespace quadriline
