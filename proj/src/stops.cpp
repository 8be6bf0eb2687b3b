#include "gridcover/stops.hpp"

#include <algorithm>
#include <set>

#include "gridcover/error.hpp"

namespace gridcover {

namespace {

std::int64_t parity(std::int64_t m) { return ((m % 2) + 2) % 2; }

// First point of segment [a -> b] that lies in the grid. b must be in the
// grid. The first contact of a segment with a union of closed unit squares
// has an integer coordinate, so only grid-line crossings are probed.
Point first_contact(const Grid& g, const Point& a, const Point& b) {
  std::vector<Rational> ts{Rational(0), Rational(1)};
  auto add_crossings = [&](const Rational& from, const Rational& to) {
    if (from == to) return;
    const Rational lo = std::min(from, to);
    const Rational hi = std::max(from, to);
    for (std::int64_t v = ceil_to_int(lo); v <= floor_to_int(hi); ++v) {
      ts.push_back((Rational(Integer(v)) - from) / (to - from));
    }
  };
  add_crossings(a.x, b.x);
  add_crossings(a.y, b.y);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  for (const auto& t : ts) {
    Point p{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
    if (g.contains(p)) return p;
  }
  fail(ErrorCode::internal, "segment end point is not in the grid");
}

}  // namespace

Rational StopLattice::traversal_x(std::int64_t m) const { return anchor.x + Rational(Integer(m)) * s; }

Point StopLattice::center(std::int64_t m, std::int64_t n) const {
  return Point{traversal_x(m), anchor.y + Rational(Integer(n)) * d + Rational(Integer(parity(m))) * d / 2};
}

std::vector<Point> StopSet::stops() const {
  std::vector<Point> out;
  out.reserve(stop_count());
  for (const auto& c : c_in) out.push_back(c.p);
  for (const auto& ps : projected) out.push_back(ps.stop);
  return out;
}

StopLattice build_lattice(const Rational& d, const CostParams& p, const Grid& g, const Point& anchor_shift) {
  p.validate();
  if (d <= 0 || d > 2 * p.k) fail(ErrorCode::domain, "stop spacing d must lie in (0, 2k]");
  StopLattice lat;
  lat.k = p.k;
  lat.d = d;
  lat.s = 2 * p.k - d / 2;
  const Box& box = g.bounding_box();
  lat.anchor = Point{Rational(Integer(box.min_i)) + anchor_shift.x, Rational(Integer(box.min_j)) + anchor_shift.y};

  const Rational pad = 2 * p.k;
  const Rational x_lo = Rational(Integer(box.min_i)) - pad;
  const Rational x_hi = Rational(Integer(box.max_i + 1)) + pad;
  const Rational y_lo = Rational(Integer(box.min_j)) - pad;
  const Rational y_hi = Rational(Integer(box.max_j + 1)) + pad;
  lat.m_min = floor_to_int((x_lo - lat.anchor.x) / lat.s);
  lat.m_max = ceil_to_int((x_hi - lat.anchor.x) / lat.s);
  lat.n_min = floor_to_int((y_lo - lat.anchor.y) / d) - 1;
  lat.n_max = ceil_to_int((y_hi - lat.anchor.y) / d);
  return lat;
}

CenterClassification classify_centers(const Grid& g, const StopLattice& lat) {
  CenterClassification out;
  const Box& box = g.bounding_box();
  const double k = to_double(lat.k);
  for (std::int64_t m = lat.m_min; m <= lat.m_max; ++m) {
    const Rational x = lat.traversal_x(m);
    const double xd = to_double(x);
    if (xd < static_cast<double>(box.min_i) - k - 1 || xd > static_cast<double>(box.max_i + 1) + k + 1) continue;
    for (std::int64_t n = lat.n_min; n <= lat.n_max; ++n) {
      Point c = lat.center(m, n);
      const double yd = to_double(c.y);
      if (yd < static_cast<double>(box.min_j) - k - 1 || yd > static_cast<double>(box.max_j + 1) + k + 1) continue;
      if (!g.distance_within(c, lat.k)) continue;
      if (g.contains(c)) out.inside.push_back({m, n, c});
      else out.outside.push_back({m, n, c});
    }
  }
  return out;
}

Point sub_diamond_center(const Point& x, const Rational& k, int index) {
  const Rational h = k / 2;
  switch (index) {
    case 1: return Point{x.x + h, x.y};
    case 2: return Point{x.x, x.y + h};
    case 3: return Point{x.x - h, x.y};
    case 4: return Point{x.x, x.y - h};
    default: fail(ErrorCode::domain, "sub-diamond index must be 1..4");
  }
}

std::vector<ProjectedStop> project_out_center(const Grid& g, const Point& x_out, const Rational& k) {
  if (g.contains(x_out) && !g.on_boundary(x_out)) {
    fail(ErrorCode::precondition, "projected center lies in the interior of the grid");
  }
  std::vector<ProjectedStop> out;
  for (int i = 1; i <= 4; ++i) {
    const Point c = sub_diamond_center(x_out, k, i);
    auto witness = g.nearest_point(c, k / 2);
    if (!witness) continue;
    out.push_back({first_contact(g, x_out, *witness), x_out, i});
  }
  if (out.empty()) fail(ErrorCode::precondition, "coverage diamond of the projected center misses the grid");
  return out;
}

StopSet build_stop_set(const Grid& g, const Rational& d, const CostParams& p, const Point& anchor_shift) {
  StopSet ss;
  ss.lattice = build_lattice(d, p, g, anchor_shift);
  auto classes = classify_centers(g, ss.lattice);
  ss.c_in = std::move(classes.inside);
  ss.c_out = std::move(classes.outside);

  std::set<Point> seen;
  for (const auto& c : ss.c_in) seen.insert(c.p);
  for (const auto& c : ss.c_out) {
    for (auto& ps : project_out_center(g, c.p, p.k)) {
      if (seen.insert(ps.stop).second) ss.projected.push_back(std::move(ps));
    }
  }
  return ss;
}

}  // namespace gridcover
