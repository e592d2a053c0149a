#include "ribbon/io.hpp"

#include <fstream>
#include <sstream>

#include "ribbon/error.hpp"

namespace ribbon::io {

namespace {

Json vec_json(const Vec3& v) { return Json::array({v.x(), v.y(), v.z()}); }

Vec3 vec_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw Error(ErrorKind::ParseError, "expected a 3-vector, got " + j.dump());
  for (const auto& e : j)
    if (!e.is_number()) throw Error(ErrorKind::ParseError, "non-numeric vector entry " + e.dump());
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

std::vector<Vec3> vec_list(const Json& j, const char* key) {
  if (!j.contains(key)) return {};
  const auto& a = j.at(key);
  if (!a.is_array()) throw Error(ErrorKind::ParseError, std::string("\"") + key + "\" must be an array");
  std::vector<Vec3> out;
  for (const auto& e : a) out.push_back(vec_from_json(e));
  return out;
}

double number(const Json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number()) throw Error(ErrorKind::ParseError, std::string("\"") + key + "\" must be a number");
  return j.at(key).get<double>();
}

}  // namespace

Json curve_json(const ClosedCurve3& c) {
  Json j;
  j["constant"] = vec_json(c.constant());
  j["cos"] = Json::array();
  j["sin"] = Json::array();
  for (const auto& v : c.cos_coeffs()) j["cos"].push_back(vec_json(v));
  for (const auto& v : c.sin_coeffs()) j["sin"].push_back(vec_json(v));
  return j;
}

ClosedCurve3 curve_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("constant")) throw Error(ErrorKind::ParseError, "curve needs a \"constant\" entry");
  auto cos_c = vec_list(j, "cos");
  auto sin_c = vec_list(j, "sin");
  const std::size_t d = std::max(cos_c.size(), sin_c.size());
  cos_c.resize(d, Vec3::Zero());
  sin_c.resize(d, Vec3::Zero());
  return ClosedCurve3(vec_from_json(j.at("constant")), std::move(cos_c), std::move(sin_c));
}

Json tolerance_json(const ToleranceSet& tol) {
  return Json{{"eq", tol.eq_tol}, {"angle", tol.angle_tol}, {"lambda", tol.sep_lambda}, {"residual", tol.residual_tol}};
}

Json frame_json(const RibbonFrame& f) {
  Json j;
  j["x"] = curve_json(f.base);
  j["u_generator"] = curve_json(f.field.generator());
  j["grid_n"] = f.grid_n;
  j["tol"] = tolerance_json(f.tol);
  return j;
}

RibbonFrame frame_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("x") || !j.contains("u_generator"))
    throw Error(ErrorKind::ParseError, "frame needs \"x\" and \"u_generator\"");
  std::size_t grid_n = kDefaultGridN;
  if (j.contains("grid_n")) {
    if (!j.at("grid_n").is_number_unsigned()) throw Error(ErrorKind::ParseError, "\"grid_n\" must be a positive integer");
    grid_n = j.at("grid_n").get<std::size_t>();
  }
  ToleranceSet tol;
  if (j.contains("tol")) {
    const auto& t = j.at("tol");
    if (!t.is_object()) throw Error(ErrorKind::ParseError, "\"tol\" must be an object");
    tol.eq_tol = number(t, "eq", tol.eq_tol);
    tol.angle_tol = number(t, "angle", tol.angle_tol);
    tol.sep_lambda = number(t, "lambda", tol.sep_lambda);
    tol.residual_tol = number(t, "residual", tol.residual_tol);
  }
  tol.validate();
  SphericalCurve u(curve_from_json(j.at("u_generator")), grid_n, tol.eq_tol);
  return RibbonFrame(curve_from_json(j.at("x")), std::move(u), grid_n, tol);
}

Json report_json(const ValidationReport& r) {
  Json j;
  j["regular_x"] = r.regular_x;
  j["min_speed_x"] = r.min_speed_x;
  j["regular_u"] = r.regular_u;
  j["min_speed_u"] = r.min_speed_u;
  j["x_embedded"] = r.x_embedded;
  j["x_min_gap"] = r.x_min_gap;
  j["u_no_triples"] = r.u_no_triples;
  j["u_transversal"] = r.u_transversal;
  j["min_crossing_angle"] = r.min_crossing_angle;
  j["double_points"] = r.double_points;
  j["no_goalposts"] = r.no_goalposts;
  j["worst_orthogonality"] = r.worst_orthogonality;
  j["all_passed"] = r.all_passed();
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json double_points_json(const std::vector<DoublePoint>& dps) {
  Json a = Json::array();
  for (const auto& d : dps)
    a.push_back({{"s", d.s}, {"s_bar", d.s_bar}, {"point", vec_json(d.point)}, {"crossing_angle", d.crossing_angle}});
  return a;
}

Json crossings_json(const std::vector<CrossingRecord>& recs) {
  Json a = Json::array();
  for (const auto& c : recs) a.push_back({{"s", c.s}, {"s_bar", c.s_bar}, {"width", c.width}, {"residual", c.residual}});
  return a;
}

Json goalposts_json(const std::vector<GoalPost>& gps) {
  Json a = Json::array();
  for (const auto& g : gps)
    a.push_back({{"s", g.s}, {"s_bar", g.s_bar}, {"residual", g.orthogonality_residual}, {"separation", g.separation}});
  return a;
}

Json laurent_json(const LaurentPoly& p) {
  Json j = Json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c;
  return j;
}

Json profile_json(const InvariantProfile& p) {
  return Json{{"crossings", p.crossings}, {"determinant", p.determinant}, {"jones", laurent_json(p.jones)},
              {"writhe", p.writhe}};
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Error(ErrorKind::IoError, "cannot write " + path);
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

RibbonFrame load_frame(const std::string& path) { return frame_from_json(parse_json(read_text(path))); }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ribbon::io
