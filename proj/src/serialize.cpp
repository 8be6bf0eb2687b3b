#include "gridcover/serialize.hpp"

#include <json.hpp>

#include "gridcover/error.hpp"
#include "gridcover/format.hpp"

namespace gridcover {

using Json = nlohmann::ordered_json;

namespace {

Json point_json(const Point& p) { return Json::array({to_fraction_string(p.x), to_fraction_string(p.y)}); }

Json number_or_null(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

// Non-finite doubles have no JSON form; they are written as strings.
Json number(double v) { return std::isfinite(v) ? Json(v) : Json(format_number(v)); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.get<std::int64_t>()));
  if (j.is_number()) return rational_from_double(j.get<double>());
  fail(ErrorCode::parse, "expected a number or \"p/q\" string");
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::parse, std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

std::string grid_to_json(const Grid& g) {
  Json squares = Json::array();
  for (const auto& c : g.cells()) squares.push_back(Json::array({c.i, c.j}));
  Json j;
  j["squares"] = std::move(squares);
  j["area"] = g.area();
  j["perimeter"] = g.perimeter();
  j["convex"] = g.is_convex();
  return j.dump();
}

Grid read_grid(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    const Json j = parse_json(text);
    if (!j.contains("squares") || !j["squares"].is_array()) fail(ErrorCode::parse, "grid JSON needs a squares array");
    std::vector<Cell> cells;
    try {
      for (const auto& sq : j["squares"]) cells.push_back({sq.at(0).get<std::int64_t>(), sq.at(1).get<std::int64_t>()});
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorCode::parse, std::string("bad square entry: ") + e.what());
    }
    return Grid(std::move(cells));
  }
  return parse_grid(text);
}

std::string grid_to_mask(const Grid& g) {
  const Box& box = g.bounding_box();
  std::string out;
  for (std::int64_t j = box.max_j; j >= box.min_j; --j) {
    for (std::int64_t i = box.min_i; i <= box.max_i; ++i) out.push_back(g.has_cell(i, j) ? '#' : '.');
    out.push_back('\n');
  }
  return out;
}

std::string bounds_to_json(const BoundsProfile& b) {
  Json j;
  j["gamma"] = b.gamma;
  j["sigma"] = b.sigma;
  j["d_star"] = number_or_null(b.d_star);
  j["l_star"] = b.l_star;
  j["t0_star"] = number_or_null(b.t0_star);
  j["lower_bound"] = b.lower_bound;
  j["upper_general"] = b.upper_general;
  j["upper_convex"] = b.upper_convex;
  j["lower_bound_relaxed"] = b.lower_bound_relaxed;
  j["a0"] = b.a0;
  j["area"] = b.area;
  j["perimeter"] = b.perimeter;
  j["degenerate"] = b.degenerate;
  return j.dump();
}

std::string stop_set_to_json(const StopSet& ss) {
  Json j;
  j["d"] = to_fraction_string(ss.lattice.d);
  j["s"] = to_fraction_string(ss.lattice.s);
  j["anchor"] = point_json(ss.lattice.anchor);
  Json c_in = Json::array();
  for (const auto& c : ss.c_in) c_in.push_back(point_json(c.p));
  j["c_in"] = std::move(c_in);
  Json projected = Json::array();
  for (const auto& ps : ss.projected) {
    Json item;
    item["stop"] = point_json(ps.stop);
    item["source"] = point_json(ps.source);
    item["diamond_index"] = ps.diamond_index;
    projected.push_back(std::move(item));
  }
  j["projected"] = std::move(projected);
  j["c_out_count"] = ss.c_out.size();
  return j.dump();
}

std::string path_to_json(const CoveringPath& path, const CostParams& p) {
  Json j;
  j["method"] = to_string(path.method);
  j["d"] = path.d ? Json(to_fraction_string(*path.d)) : Json(nullptr);
  Json stops = Json::array();
  for (const auto& s : path.stops) stops.push_back(point_json(s));
  j["stops"] = std::move(stops);
  const Rational length = path.length();
  j["L"] = to_double(length);
  j["T"] = path.stop_count();
  j["cost"] = path_cost(path, p);
  j["L_exact"] = to_fraction_string(length);
  return j.dump();
}

CoveringPath path_from_json(std::string_view text) {
  const Json j = parse_json(text);
  CoveringPath path;
  if (!j.is_object() || !j.contains("stops") || !j["stops"].is_array()) {
    fail(ErrorCode::parse, "path JSON needs a stops array");
  }
  if (j.contains("method") && j["method"].is_string()) path.method = path_method_from_string(j["method"].get<std::string>());
  if (j.contains("d") && !j["d"].is_null()) path.d = rational_from_json(j["d"]);
  for (const auto& s : j["stops"]) {
    if (!s.is_array() || s.size() != 2) fail(ErrorCode::parse, "each stop must be an [x, y] pair");
    path.stops.push_back(Point{rational_from_json(s[0]), rational_from_json(s[1])});
  }
  return path;
}

std::string coverage_to_json(const CoverageReport& r) {
  Json j;
  j["status"] = to_string(r.status);
  j["certified"] = r.certified();
  j["max_observed_distance"] = number(r.max_observed_distance);
  j["sample_spacing"] = to_fraction_string(r.sample_spacing);
  j["counterexample"] = r.counterexample ? point_json(*r.counterexample) : Json(nullptr);
  j["margin"] = number(r.margin);
  j["exact"] = r.exact;
  return j.dump();
}

std::string audit_to_json(const AuditReport& r) {
  Json j;
  j["area"] = r.area;
  j["perimeter"] = r.perimeter;
  j["convex"] = r.convex;
  j["connected"] = r.connected;
  j["hole_free"] = r.hole_free;
  j["d"] = number_or_null(r.d);
  j["T"] = r.stop_count;
  j["L"] = r.length;
  j["realized_cost"] = r.realized_cost;
  j["lower_bound"] = r.lower_bound;
  j["lower_bound_relaxed"] = r.lower_bound_relaxed;
  j["upper_general"] = r.upper_general;
  j["upper_convex"] = r.upper_convex;
  j["ratio_to_lower"] = number(r.ratio_to_lower);
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json item;
    item["name"] = c.name;
    item["applicable"] = c.applicable;
    item["holds"] = c.holds;
    item["lhs"] = number(c.lhs);
    item["rhs"] = number(c.rhs);
    checks.push_back(std::move(item));
  }
  j["checks"] = std::move(checks);
  j["all_hold"] = r.all_hold();
  return j.dump();
}

}  // namespace gridcover
