#include "quadriline/io.hpp"

#include <fstream>
#include <sstream>

#include "quadriline/census.hpp"
#include "quadriline/error.hpp"
#include "quadriline/locus.hpp"

namespace quadriline {
namespace {

Scalar parse_number(const json& j, const Field& field, const std::string& where) {
  std::string text;
  if (j.is_string()) {
    text = j.get<std::string>();
  } else if (j.is_number_integer()) {
    text = j.is_number_unsigned() ? std::to_string(j.get<std::uint64_t>()) : std::to_string(j.get<std::int64_t>());
  } else {
    throw ParseError(where, "expected an integer or a \"p/q\" string");
  }
  try {
    return parse_scalar(text, field);
  } catch (const ParseError& e) {
    throw ParseError(where, e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(where, e.what());
  }
}

Line parse_line(const json& j, const Field& field, const std::string& where) {
  if (!j.is_object()) throw ParseError(where, "expected a line object {a, b, c}");
  std::array<Scalar, 3> abc;
  const char* keys[] = {"a", "b", "c"};
  for (std::size_t i = 0; i < 3; ++i) {
    if (!j.contains(keys[i])) throw ParseError(where, std::string("missing coefficient \"") + keys[i] + "\"");
    abc[i] = parse_number(j.at(keys[i]), field, where + "/" + keys[i]);
  }
  if (abc[0].is_zero() && abc[1].is_zero()) throw ParseError(where, "line has a = b = 0");
  return Line{abc[0], abc[1], abc[2]};
}

Field parse_field(const json& doc) {
  if (!doc.contains("field")) return Field::rational();
  const json& f = doc.at("field");
  if (f.is_string() && f.get<std::string>() == "rational") return Field::rational();
  if (f.is_object() && f.contains("prime") && f.at("prime").is_number_unsigned()) {
    try {
      return Field::prime(f.at("prime").get<std::uint64_t>());
    } catch (const PreconditionError& e) {
      throw ParseError("/field/prime", e.what());
    }
  }
  throw ParseError("/field", "expected \"rational\" or {\"prime\": p}");
}

std::string ratio_or_indeterminate(const std::optional<Ratio>& r) {
  return r ? r->to_string() : "indeterminate";
}

json roots_json(const ProjectiveRoots& roots) {
  if (roots.all) return "all";
  json arr = json::array();
  for (const auto& r : roots.roots) arr.push_back(to_json(r));
  return arr;
}

json conic_json(const TernaryQuadratic& q) {
  static const char* names[] = {"x^2", "y^2", "1", "x*y", "x", "y"};
  json j = json::object();
  for (std::size_t i = 0; i < 6; ++i) j[names[i]] = to_json(q.c[i]);
  return j;
}

json all_parallel_json(const ConfigurationInput& input) {
  const AllParallelReport r = all_parallel_analysis(input);
  json j;
  j["all_parallel"] = true;
  j["midline_shared"] = r.midline_shared;
  j["ac_midline"] = to_json(r.ac_midline);
  j["bd_midline"] = to_json(r.bd_midline);
  j["locus"] = r.midline_shared ? to_json(r.ac_midline) : json(nullptr);
  j["description"] = r.description;
  return j;
}

json center_image_json(const CenterImage& img, const PlaneMap& map) {
  json j;
  j["kind"] = to_string(img.kind);
  if (img.point) j["point"] = to_json(map.invert(*img.point));
  if (img.line) j["line"] = to_json(map.invert(*img.line));
  if (img.conic) j["conic"] = conic_json(map.invert(*img.conic));
  json forms = json::array();
  for (const auto& f : img.center_map) forms.push_back(f.to_string());
  j["normalized_center_map"] = forms;
  return j;
}

json line_description_json(const std::optional<AffineLineDescription>& d, const PlaneMap& map) {
  if (!d) return nullptr;
  json j = to_json(map.invert(d->line));
  j["tag"] = to_string(d->tag);
  return j;
}

}  // namespace

// ---------------------------------------------------------------- parsing

ConfigurationInput parse_config(const json& doc) {
  if (!doc.is_object()) throw ParseError("", "configuration must be a JSON object");
  ConfigurationInput input;
  input.field = parse_field(doc);
  if (!doc.contains("pairs")) throw ParseError("/pairs", "missing");
  const json& pairs = doc.at("pairs");
  if (!pairs.is_array() || pairs.size() != 2) throw ParseError("/pairs", "expected two pairs of lines");
  for (std::size_t i = 0; i < 2; ++i) {
    const json& pair = pairs.at(i);
    const std::string where = "/pairs/" + std::to_string(i);
    if (!pair.is_array() || pair.size() != 2) throw ParseError(where, "expected two lines");
    auto& target = i == 0 ? input.pair1 : input.pair2;
    for (std::size_t k = 0; k < 2; ++k) {
      target[k] = parse_line(pair.at(k), input.field, where + "/" + std::to_string(k));
    }
  }
  return input;
}

ConfigurationInput parse_config_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("", std::string("invalid JSON: ") + e.what());
  }
  return parse_config(doc);
}

ConfigurationInput load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open configuration file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_config_text(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + "#" + e.location(), e.what());
  }
}

// ---------------------------------------------------------------- serialization

json to_json(const Scalar& s) { return s.to_string(); }
json to_json(const Ratio& r) { return r.to_string(); }
json to_json(const Point& p) { return json::array({p.x.to_string(), p.y.to_string()}); }

json to_json(const Line& l) {
  return json{{"a", l.a.to_string()}, {"b", l.b.to_string()}, {"c", l.c.to_string()}};
}

json to_json(const ProjectiveRectangle& p) {
  json arr = json::array();
  for (const auto& c : p.coords()) arr.push_back(c.to_string());
  return arr;
}

ProjectiveRectangle rectangle_from_json(const json& j, const Field& field) {
  if (!j.is_array() || j.size() != 9) throw ParseError("", "expected nine projective coordinates");
  std::array<Scalar, 9> coords;
  for (std::size_t i = 0; i < 9; ++i) coords[i] = parse_number(j.at(i), field, "/" + std::to_string(i));
  return ProjectiveRectangle(coords);
}

json rectangle_report(const Normalization& n, const ConfigurationInput& input, const ProjectiveRectangle& p) {
  std::array<Scalar, 9> coords;
  for (Role normalized : kRoles) {
    const auto target = static_cast<std::size_t>(n.map.source[static_cast<std::size_t>(normalized)]);
    const auto xy = n.map.invert_homogeneous(p.x(normalized), p.y(normalized), p.w());
    coords[2 * target] = xy[0];
    coords[2 * target + 1] = xy[1];
  }
  coords[8] = p.w();
  const ProjectiveRectangle q(coords);

  json j;
  j["at_infinity"] = q.at_infinity();
  if (!q.at_infinity()) {
    const auto v = q.affine_vertices();
    json vertices = json::object();
    for (Role r : kRoles) {
      const Point& pt = v[static_cast<std::size_t>(r)];
      if (!input.line(r).contains(pt)) {
        throw InvariantViolation(std::string("vertex ") + role_name(r) + " is off its input line");
      }
      vertices[std::string(1, role_name(r))] = to_json(pt);
    }
    j["vertices"] = vertices;
  }
  j["slope"] = ratio_or_indeterminate(slope_of(q));
  j["aspect"] = ratio_or_indeterminate(aspect_of(q));
  if (!q.at_infinity()) j["center"] = to_json(center_of(q));
  j["projective"] = to_json(q);
  j["normalized_projective"] = to_json(p);
  return j;
}

// ---------------------------------------------------------------- commands

json classify_report(const ConfigurationInput& input) {
  if (all_parallel(input)) return all_parallel_json(input);
  const Normalization n = normalize(input);
  const NormalizedConfig& cfg = n.config;
  const ConfigClass cls = classify(cfg);
  const DiagonalSlopes diag = diagonal_slopes(cfg);

  json j;
  j["field"] = cfg.field().name();
  j["normalized"] = {{"m_A", to_json(cfg.mA())}, {"m_B", to_json(cfg.mB())}, {"m_C", to_json(cfg.mC())},
                     {"m_D", to_json(cfg.mD())}, {"b_A", to_json(cfg.bA())}};
  j["constants"] = {{"e1", to_json(cfg.e1())},
                    {"e2", to_json(cfg.e2())},
                    {"f1", to_json(cfg.f1())},
                    {"f2", to_json(cfg.f2())},
                    {"e1f1+e2f2", to_json(cfg.degeneracy())}};
  json source = json::array();
  for (Role r : n.map.source) source.push_back(std::string(1, role_name(r)));
  j["plane_map"] = {{"labeling", n.map.labeling},
                    {"roles_from_input", source},
                    {"reflection_t", n.map.reflection ? to_json(*n.map.reflection) : json(nullptr)},
                    {"translation", to_json(Point{-n.map.shift.x, -n.map.shift.y})},
                    {"scale", to_json(n.map.scale)}};
  j["E"] = to_string(diag.E);
  j["F"] = to_string(diag.F);
  j["degenerate"] = cls.degenerate;
  j["twin_pairs"] = cls.twin_pairs;
  j["dual_pairs"] = cls.dual_pairs;
  j["slope_path_at_infinity"] = cls.slope_path_at_infinity;
  j["aspect_path_at_infinity"] = cls.aspect_path_at_infinity;
  j["locus_shape"] = to_string(cls.locus_shape);
  j["sigma"] = sigma(cfg).to_string("S", "T");
  j["alpha"] = alpha(cfg).to_string("U", "V");
  j["slopes_at_infinity"] = roots_json(slopes_at_infinity(cfg));
  j["aspects_at_infinity"] = roots_json(aspects_at_infinity(cfg));
  return j;
}

json rect_report(const ConfigurationInput& input, PathKind kind, const Ratio& query) {
  const Normalization n = normalize(input);
  const bool by_slope = kind == PathKind::Slope;
  const Ratio local = by_slope ? n.map.slope_to_normalized(query) : n.map.aspect_to_normalized(query);
  const ProjectiveRectangle p = by_slope ? slope_path_eval(n.config, local) : aspect_path_eval(n.config, local);
  json j;
  j["kind"] = to_string(kind);
  j["query"] = to_json(query);
  json body = rectangle_report(n, input, p);
  const std::string measured = body[by_slope ? "slope" : "aspect"].get<std::string>();
  if (measured != "indeterminate" && measured != query.to_string()) {
    throw InvariantViolation("rectangle has " + to_string(kind) + " " + measured + ", expected " + query.to_string());
  }
  j.update(body);
  return j;
}

json path_report(const ConfigurationInput& input, PathKind kind, std::size_t samples) {
  json arr = json::array();
  for (const Ratio& r : sample_ratios(input.field, samples)) arr.push_back(rect_report(input, kind, r));
  return arr;
}

json locus_report(const ConfigurationInput& input) {
  if (all_parallel(input)) return all_parallel_json(input);
  const Normalization n = normalize(input);
  const LocusReport rep = centers_paths(n.config);
  json j;
  j["shape"] = to_string(rep.classification.locus_shape);
  j["degenerate"] = rep.classification.degenerate;
  j["slope_centers"] = center_image_json(rep.slope_centers, n.map);
  j["aspect_centers"] = center_image_json(rep.aspect_centers, n.map);
  j["gauss_newton"] = line_description_json(rep.gauss_newton, n.map);
  j["diagonal_g"] = line_description_json(rep.diagonal_g, n.map);
  j["verified_samples"] = rep.verified_samples;
  if (rep.classification.degenerate) {
    try {
      const SpecialRectangles sr = special_rectangles(n.config);
      json s;
      s["center"] = rectangle_report(n, input, sr.center);
      s["centroid"] = rectangle_report(n, input, sr.centroid);
      if (sr.slope_path_infinity) s["slope_path_at_infinity"] = rectangle_report(n, input, *sr.slope_path_infinity);
      if (sr.aspect_path_infinity) {
        s["aspect_path_at_infinity"] = rectangle_report(n, input, *sr.aspect_path_infinity);
      }
      j["special_rectangles"] = s;
    } catch (const PreconditionError& e) {
      j["special_rectangles"] = {{"unavailable", e.what()}};
    }
  }
  return j;
}

json census_report(const ConfigurationInput& input) {
  if (!input.field.is_prime()) throw PreconditionError("census needs a prime field configuration");
  const Normalization n = normalize(input);
  const CensusReport r = verify_against_paths(n.config);
  json j;
  j["modulus"] = r.modulus;
  j["degenerate"] = r.degenerate;
  j["twin_pairs"] = r.twin_pairs;
  j["dual_pairs"] = r.dual_pairs;
  j["total"] = r.total;
  j["at_infinity"] = r.at_infinity;
  j["quadric_points"] = r.quadric_points;
  j["slope_path_image"] = r.slope_path_image;
  j["aspect_path_image"] = r.aspect_path_image;
  j["path_intersection"] = r.path_intersection;
  j["by_slope"] = r.by_slope;
  j["by_aspect"] = r.by_aspect;
  j["union_covered"] = r.union_covered;
  j["at_infinity_bound_ok"] = r.at_infinity_bound_ok;
  j["degenerate_consistency_ok"] = r.degenerate_consistency_ok;
  j["quadric_count_ok"] = r.quadric_count_ok;
  j["failures"] = r.failures;
  return j;
}

}  // namespace quadriline
