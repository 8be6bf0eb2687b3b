#include "gridcover/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "gridcover/error.hpp"

namespace gridcover {

namespace {

constexpr double kFilterSlack = 1e-9;

// Uniform bucket grid over the stops for neighbourhood queries. Candidate
// lists are supersets; callers always re-evaluate distances themselves.
class StopIndex {
 public:
  StopIndex(const std::vector<Point>& stops, double bucket) : stops_(stops), bucket_(bucket) {
    xs_.reserve(stops.size());
    ys_.reserve(stops.size());
    for (std::size_t s = 0; s < stops.size(); ++s) {
      xs_.push_back(to_double(stops[s].x));
      ys_.push_back(to_double(stops[s].y));
      buckets_[key(cell_of(xs_.back()), cell_of(ys_.back()))].push_back(s);
    }
  }

  // Stops whose l1 distance to (x, y) may be <= radius.
  std::vector<std::size_t> near(double x, double y, double radius) const {
    std::vector<std::size_t> out;
    const std::int64_t i0 = cell_of(x - radius - kFilterSlack);
    const std::int64_t i1 = cell_of(x + radius + kFilterSlack);
    const std::int64_t j0 = cell_of(y - radius - kFilterSlack);
    const std::int64_t j1 = cell_of(y + radius + kFilterSlack);
    for (std::int64_t i = i0; i <= i1; ++i) {
      for (std::int64_t j = j0; j <= j1; ++j) {
        auto it = buckets_.find(key(i, j));
        if (it == buckets_.end()) continue;
        for (std::size_t s : it->second) {
          if (l1_distance_approx(x, y, xs_[s], ys_[s]) <= radius + kFilterSlack) out.push_back(s);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  double x(std::size_t s) const { return xs_[s]; }
  double y(std::size_t s) const { return ys_[s]; }
  const Point& point(std::size_t s) const { return stops_[s]; }
  std::size_t size() const { return stops_.size(); }

 private:
  std::int64_t cell_of(double v) const { return static_cast<std::int64_t>(std::floor(v / bucket_)); }
  static std::uint64_t key(std::int64_t i, std::int64_t j) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(i)) << 32) |
           static_cast<std::uint64_t>(static_cast<std::uint32_t>(j));
  }

  const std::vector<Point>& stops_;
  double bucket_;
  std::vector<double> xs_;
  std::vector<double> ys_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets_;
};

Rational exact_min_distance(const Point& p, const std::vector<Point>& stops, const std::vector<std::size_t>& ids) {
  Rational best = -1;
  for (std::size_t s : ids) {
    Rational dist = l1_distance(p, stops[s]);
    if (best < 0 || dist < best) best = dist;
  }
  return best;
}

double global_min_distance(double x, double y, const StopIndex& index) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < index.size(); ++s) best = std::min(best, l1_distance_approx(x, y, index.x(s), index.y(s)));
  return best;
}

struct UvBox {
  Rational u_lo, u_hi, v_lo, v_hi;
};

// Point strictly inside the open rectangle and inside the closed diamond
// |u - cu| + |v - cv| <= 1, or nullopt when they do not meet.
std::optional<std::pair<Rational, Rational>> open_rect_meets_diamond(const Rational& ua, const Rational& ub,
                                                                     const Rational& va, const Rational& vb,
                                                                     const Rational& cu, const Rational& cv) {
  const Rational pu = std::clamp(cu, ua, ub);
  const Rational pv = std::clamp(cv, va, vb);
  const Rational dist = abs_value(pu - cu) + abs_value(pv - cv);
  if (dist >= 1) return std::nullopt;
  const Rational qu = (ua + ub) / 2;
  const Rational qv = (va + vb) / 2;
  const Rational span = abs_value(qu - pu) + abs_value(qv - pv);
  if (span == 0) return std::make_pair(pu, pv);
  Rational t = (1 - dist) / (2 * span);
  if (t > 1) t = 1;
  return std::make_pair(pu + t * (qu - pu), pv + t * (qv - pv));
}

std::optional<Point> uncovered_in_cell(const Cell& cell, const std::vector<UvBox>& boxes) {
  const Rational cu(Integer(cell.i + cell.j + 1));
  const Rational cv(Integer(cell.i - cell.j));
  const Rational u_min = cu - 1, u_max = cu + 1, v_min = cv - 1, v_max = cv + 1;

  std::vector<Rational> breaks{u_min, u_max};
  for (const auto& b : boxes) {
    if (b.u_lo > u_min && b.u_lo < u_max) breaks.push_back(b.u_lo);
    if (b.u_hi > u_min && b.u_hi < u_max) breaks.push_back(b.u_hi);
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  std::vector<std::pair<Rational, Rational>> intervals;
  for (std::size_t s = 0; s + 1 < breaks.size(); ++s) {
    const Rational& ua = breaks[s];
    const Rational& ub = breaks[s + 1];
    intervals.clear();
    for (const auto& b : boxes) {
      if (b.u_lo <= ua && b.u_hi >= ub) intervals.emplace_back(b.v_lo, b.v_hi);
    }
    std::sort(intervals.begin(), intervals.end());
    Rational cursor = v_min;
    auto check_gap = [&](const Rational& lo, const Rational& hi) -> std::optional<Point> {
      if (!(lo < hi)) return std::nullopt;
      auto hit = open_rect_meets_diamond(ua, ub, lo, hi, cu, cv);
      if (!hit) return std::nullopt;
      const auto& [u, v] = *hit;
      return Point{(u + v) / 2, (u - v) / 2};
    };
    for (const auto& [lo, hi] : intervals) {
      if (cursor >= v_max) break;
      if (lo > cursor) {
        if (auto p = check_gap(cursor, std::min(lo, v_max))) return p;
      }
      if (hi > cursor) cursor = hi;
    }
    if (cursor < v_max) {
      if (auto p = check_gap(cursor, v_max)) return p;
    }
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(CoverageStatus s) {
  switch (s) {
    case CoverageStatus::certified: return "certified";
    case CoverageStatus::counterexample: return "counterexample";
    case CoverageStatus::inconclusive: return "inconclusive";
  }
  return "unknown";
}

CoverageReport verify_coverage(const Grid& g, const std::vector<Point>& stops, const Rational& k, const Rational& h) {
  if (h <= 0) fail(ErrorCode::domain, "sample spacing h must be positive");
  if (k <= 0) fail(ErrorCode::domain, "coverage radius k must be positive");
  const std::int64_t n = std::max<std::int64_t>(1, ceil_to_int(1 / h));
  CoverageReport report;
  report.sample_spacing = Rational(Integer(1), Integer(n));
  const Rational threshold = k - report.sample_spacing;
  const double kd = to_double(k);
  const double threshold_d = to_double(threshold);

  if (stops.empty()) {
    report.status = CoverageStatus::counterexample;
    const auto& c = g.cells().front();
    report.counterexample = Point{Rational(Integer(c.i)), Rational(Integer(c.j))};
    report.max_observed_distance = std::numeric_limits<double>::infinity();
    report.margin = -report.max_observed_distance;
    return report;
  }

  StopIndex index(stops, std::max(kd, 0.25));
  const double step = 1.0 / static_cast<double>(n);
  bool ambiguous = false;
  double worst = 0;

  for (const auto& cell : g.cells()) {
    const double cx = static_cast<double>(cell.i) + 0.5;
    const double cy = static_cast<double>(cell.j) + 0.5;
    const auto candidates = index.near(cx, cy, kd + 1.0);
    for (std::int64_t a = 0; a <= n; ++a) {
      const double px = static_cast<double>(cell.i) + static_cast<double>(a) * step;
      for (std::int64_t b = 0; b <= n; ++b) {
        const double py = static_cast<double>(cell.j) + static_cast<double>(b) * step;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t s : candidates) best = std::min(best, l1_distance_approx(px, py, index.x(s), index.y(s)));
        if (best <= threshold_d - kFilterSlack) {
          worst = std::max(worst, best);
          continue;
        }
        const Point sample{Rational(Integer(cell.i)) + Rational(Integer(a), Integer(n)),
                           Rational(Integer(cell.j)) + Rational(Integer(b), Integer(n))};
        if (candidates.empty() || best > kd + 1.0) {
          // nothing within k + 1 of the cell: certainly uncovered
          report.status = CoverageStatus::counterexample;
          report.counterexample = sample;
          report.max_observed_distance = std::max(worst, global_min_distance(px, py, index));
          report.margin = kd - report.max_observed_distance;
          return report;
        }
        const Rational exact = exact_min_distance(sample, stops, candidates);
        worst = std::max(worst, to_double(exact));
        if (exact > k) {
          report.status = CoverageStatus::counterexample;
          report.counterexample = sample;
          report.max_observed_distance = worst;
          report.margin = kd - worst;
          return report;
        }
        if (exact > threshold) ambiguous = true;
      }
    }
  }
  report.status = ambiguous ? CoverageStatus::inconclusive : CoverageStatus::certified;
  report.max_observed_distance = worst;
  report.margin = kd - worst;
  return report;
}

std::optional<Point> find_uncovered_point(const Grid& g, const std::vector<Point>& stops, const Rational& k) {
  if (k <= 0) fail(ErrorCode::domain, "coverage radius k must be positive");
  if (stops.empty()) {
    const auto& c = g.cells().front();
    return Point{Rational(Integer(c.i)) + Rational(1, 2), Rational(Integer(c.j)) + Rational(1, 2)};
  }
  const double kd = to_double(k);
  StopIndex index(stops, std::max(kd, 0.25));
  std::vector<UvBox> boxes;
  for (const auto& cell : g.cells()) {
    const double cx = static_cast<double>(cell.i) + 0.5;
    const double cy = static_cast<double>(cell.j) + 0.5;
    boxes.clear();
    for (std::size_t s : index.near(cx, cy, kd + 1.0)) {
      const Point& p = index.point(s);
      const Rational u = p.x + p.y;
      const Rational v = p.x - p.y;
      boxes.push_back({u - k, u + k, v - k, v + k});
    }
    if (auto p = uncovered_in_cell(cell, boxes)) return p;
  }
  return std::nullopt;
}

CoverageReport certify_coverage(const Grid& g, const std::vector<Point>& stops, const Rational& k,
                                const CertifyOptions& options) {
  Rational h = options.h ? *options.h : k / 16;
  CoverageReport report;
  for (int attempt = 0; attempt <= std::max(0, options.halvings); ++attempt) {
    report = verify_coverage(g, stops, k, h);
    if (report.status != CoverageStatus::inconclusive) return report;
    h /= 2;
  }
  if (!options.exact_fallback) return report;

  report.exact = true;
  if (auto p = find_uncovered_point(g, stops, k)) {
    report.status = CoverageStatus::counterexample;
    report.counterexample = p;
    Rational nearest = -1;
    for (const auto& s : stops) {
      Rational dist = l1_distance(*p, s);
      if (nearest < 0 || dist < nearest) nearest = dist;
    }
    report.max_observed_distance = std::max(report.max_observed_distance, to_double(nearest));
  } else {
    report.status = CoverageStatus::certified;
  }
  report.margin = to_double(k) - report.max_observed_distance;
  return report;
}

bool verify_tradeoff(const CoveringPath& path, const Grid& g, const Rational& k) {
  const Rational rhs = Rational(Integer(g.area())) - 2 * k * k;
  const std::size_t t = path.stop_count();
  Rational lhs = 0;
  if (t > 1) {
    const Rational gaps(Integer(static_cast<std::int64_t>(t - 1)));
    const Rational length = path.length();
    if (length > 0) lhs = gaps * tradeoff_area(length / gaps, k);
  }
  return lhs >= rhs;
}

bool AuditReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const AuditCheck& c) { return !c.applicable || c.holds; });
}

const AuditCheck* AuditReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

AuditReport audit(const Grid& g, const CostParams& p, const CoveringPath& path, const StopSet* stop_set,
                  std::optional<Rational> tree_length) {
  constexpr double kRelative = 1e-12;
  const auto profile = optimal_profile(p, g.area(), g.perimeter());
  const Rational& k = p.k;
  const Rational area(Integer(g.area()));
  const Rational perim(Integer(g.perimeter()));
  const Rational length = path.length();
  const Rational stops(Integer(static_cast<std::int64_t>(path.stop_count())));

  AuditReport r;
  r.area = g.area();
  r.perimeter = g.perimeter();
  r.convex = g.is_convex();
  r.connected = g.is_connected();
  r.hole_free = g.hole_count() == 0;
  if (path.d) r.d = to_double(*path.d);
  r.stop_count = path.stop_count();
  r.length = to_double(length);
  r.realized_cost = path_cost(path, p);
  r.lower_bound = profile.lower_bound;
  r.lower_bound_relaxed = profile.lower_bound_relaxed;
  r.upper_general = profile.upper_general;
  r.upper_convex = profile.upper_convex;
  r.ratio_to_lower = r.lower_bound > 0 ? r.realized_cost / r.lower_bound : std::numeric_limits<double>::infinity();

  const bool nondegenerate = !profile.degenerate;
  auto approx_le = [&](double lhs, double rhs) { return lhs <= rhs + kRelative * std::max(1.0, std::fabs(rhs)); };

  {
    AuditCheck c{"tradeoff_inequality", nondegenerate};
    const std::size_t t = path.stop_count();
    c.rhs = to_double(area - 2 * k * k);
    c.lhs = (t > 1 && length > 0) ? to_double(Rational(Integer(static_cast<std::int64_t>(t - 1))) *
                                              tradeoff_area(length / Rational(Integer(static_cast<std::int64_t>(t - 1))), k))
                                  : 0.0;
    c.holds = verify_tradeoff(path, g, k);
    r.checks.push_back(c);
  }
  {
    AuditCheck c{"lower_bound", nondegenerate, true, profile.lower_bound_relaxed, r.realized_cost};
    c.holds = approx_le(c.lhs, c.rhs);
    r.checks.push_back(c);
  }

  const bool constructed = path.d.has_value() && path.method != PathMethod::oracle;
  if (constructed) {
    const Rational& d = *path.d;
    const Rational f = tradeoff_area(d, k);
    {
      AuditCheck c{"stop_count_cap"};
      const Rational cap = area + 16 * k * perim + 32 * k * k;
      c.lhs = to_double(stops);
      c.rhs = to_double(cap / f);
      c.holds = stops * f <= cap;
      r.checks.push_back(c);
    }
    {
      AuditCheck c{"length_cap"};
      const Rational cap = 2 * d * (area + 6 * k * perim + 8 * k * k);
      c.lhs = to_double(length);
      c.rhs = to_double(cap / f);
      c.holds = length * f <= cap;
      r.checks.push_back(c);
    }
    if (stop_set) {
      const Rational selected(Integer(static_cast<std::int64_t>(stop_set->c_in.size() + stop_set->c_out.size())));
      const Rational outside(Integer(static_cast<std::int64_t>(stop_set->c_out.size())));
      const Rational inside(Integer(static_cast<std::int64_t>(stop_set->c_in.size())));
      AuditCheck sel{"selected_centers_cap", r.connected};
      const Rational sel_cap = area + 4 * k * perim + 8 * k * k;
      sel.lhs = to_double(selected);
      sel.rhs = to_double(sel_cap / f);
      sel.holds = selected * f <= sel_cap;
      r.checks.push_back(sel);
      AuditCheck out{"outside_centers_cap", r.connected};
      const Rational out_cap = 4 * k * perim + 8 * k * k;
      out.lhs = to_double(outside);
      out.rhs = to_double(out_cap / f);
      out.holds = outside * f <= out_cap;
      r.checks.push_back(out);
      AuditCheck stop_cap{"stop_count_vs_centers"};
      stop_cap.lhs = to_double(stops);
      stop_cap.rhs = to_double(inside + 4 * outside);
      stop_cap.holds = path.method == PathMethod::single_stop || stops <= inside + 4 * outside;
      r.checks.push_back(stop_cap);
      if (tree_length) {
        AuditCheck tree{"tree_length_cap", r.connected && r.hole_free};
        const Rational cap = inside * d + perim;
        tree.lhs = to_double(*tree_length);
        tree.rhs = to_double(cap);
        tree.holds = *tree_length <= cap;
        r.checks.push_back(tree);
      }
      if (path.method == PathMethod::up_and_down) {
        AuditCheck conv{"convex_length"};
        const Rational cap = inside * d + 2 * perim;
        conv.lhs = to_double(length);
        conv.rhs = to_double(cap);
        conv.holds = length <= cap;
        r.checks.push_back(conv);
      }
    }
  }
  {
    AuditCheck c{"general_upper", r.connected, true, r.realized_cost, r.upper_general};
    c.holds = approx_le(c.lhs, c.rhs);
    r.checks.push_back(c);
  }
  {
    AuditCheck c{"convex_upper", r.convex, true, r.realized_cost, r.upper_convex};
    c.holds = approx_le(c.lhs, c.rhs);
    r.checks.push_back(c);
  }
  return r;
}

}  // namespace gridcover
