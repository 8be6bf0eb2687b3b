#include "gridcover/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <sstream>
#include <thread>

#include "gridcover/error.hpp"
#include "gridcover/format.hpp"
#include "gridcover/pathgen.hpp"
#include "gridcover/verify.hpp"

namespace gridcover {

namespace {

using IntPoint = std::pair<std::int64_t, std::int64_t>;

std::int64_t manhattan(const IntPoint& a, const IntPoint& b) {
  return std::abs(a.first - b.first) + std::abs(a.second - b.second);
}

// Every cell corner within k of some stop: necessary for coverage and much
// cheaper than the full exact sweep.
bool corners_covered(const Grid& g, const std::vector<Point>& stops, const Rational& k) {
  for (const auto& c : g.cells()) {
    for (std::int64_t di = 0; di <= 1; ++di) {
      for (std::int64_t dj = 0; dj <= 1; ++dj) {
        const Point corner{Rational(Integer(c.i + di)), Rational(Integer(c.j + dj))};
        bool hit = false;
        for (const auto& s : stops) {
          if (l1_distance(corner, s) <= k) {
            hit = true;
            break;
          }
        }
        if (!hit) return false;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<Point> oracle_candidates(const Grid& g, const Rational& spacing) {
  if (spacing <= 0) fail(ErrorCode::domain, "candidate spacing must be positive");
  const Box& box = g.bounding_box();
  const std::int64_t a0 = ceil_to_int(Rational(Integer(box.min_i)) / spacing);
  const std::int64_t a1 = floor_to_int(Rational(Integer(box.max_i + 1)) / spacing);
  const std::int64_t b0 = ceil_to_int(Rational(Integer(box.min_j)) / spacing);
  const std::int64_t b1 = floor_to_int(Rational(Integer(box.max_j + 1)) / spacing);
  std::vector<Point> out;
  for (std::int64_t a = a0; a <= a1; ++a) {
    for (std::int64_t b = b0; b <= b1; ++b) {
      Point p{Rational(Integer(a)) * spacing, Rational(Integer(b)) * spacing};
      if (g.contains(p)) out.push_back(p);
    }
  }
  return out;
}

std::vector<std::size_t> shortest_hamiltonian_path(const std::vector<IntPoint>& pts, std::int64_t* length) {
  const std::size_t n = pts.size();
  if (n == 0) {
    if (length) *length = 0;
    return {};
  }
  if (n > 20) fail(ErrorCode::too_large, "Hamiltonian path DP limited to 20 points");
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  const std::size_t full = (std::size_t{1} << n) - 1;
  std::vector<std::int64_t> dp((full + 1) * n, kInf);
  std::vector<std::int8_t> prev((full + 1) * n, -1);
  for (std::size_t i = 0; i < n; ++i) dp[(std::size_t{1} << i) * n + i] = 0;
  for (std::size_t mask = 1; mask <= full; ++mask) {
    for (std::size_t last = 0; last < n; ++last) {
      const std::int64_t here = dp[mask * n + last];
      if (here >= kInf || !(mask & (std::size_t{1} << last))) continue;
      for (std::size_t next = 0; next < n; ++next) {
        if (mask & (std::size_t{1} << next)) continue;
        const std::size_t grown = mask | (std::size_t{1} << next);
        const std::int64_t cand = here + manhattan(pts[last], pts[next]);
        if (cand < dp[grown * n + next]) {
          dp[grown * n + next] = cand;
          prev[grown * n + next] = static_cast<std::int8_t>(last);
        }
      }
    }
  }
  std::size_t end = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (dp[full * n + i] < dp[full * n + end]) end = i;
  if (length) *length = dp[full * n + end];

  std::vector<std::size_t> order;
  std::size_t mask = full;
  std::size_t cur = end;
  while (true) {
    order.push_back(cur);
    const auto p = prev[mask * n + cur];
    mask &= ~(std::size_t{1} << cur);
    if (p < 0) break;
    cur = static_cast<std::size_t>(p);
  }
  std::reverse(order.begin(), order.end());
  return order;
}

std::int64_t shortest_hamiltonian_length_bruteforce(const std::vector<IntPoint>& pts) {
  if (pts.size() > 9) fail(ErrorCode::too_large, "permutation brute force limited to 9 points");
  std::vector<std::size_t> perm(pts.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  do {
    std::int64_t total = 0;
    for (std::size_t i = 1; i < perm.size(); ++i) total += manhattan(pts[perm[i - 1]], pts[perm[i]]);
    best = std::min(best, total);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return pts.empty() ? 0 : best;
}

CoveringPath solve_exact(const Grid& g, const CostParams& p, const OracleConfig& cfg) {
  p.validate();
  const auto candidates = oracle_candidates(g, cfg.spacing);
  if (candidates.size() > cfg.max_candidates) {
    fail(ErrorCode::too_large, "instance too large: " + std::to_string(candidates.size()) +
                                   " candidate stops exceed the limit of " + std::to_string(cfg.max_candidates));
  }
  if (cfg.max_subset > 20) fail(ErrorCode::too_large, "subset size limit above 20 is not supported");

  std::vector<IntPoint> grid_units;
  for (const auto& c : candidates) {
    grid_units.emplace_back((c.x / cfg.spacing).numerator().convert_to<std::int64_t>(),
                            (c.y / cfg.spacing).numerator().convert_to<std::int64_t>());
  }
  const double unit = to_double(cfg.spacing);

  std::optional<CoveringPath> best;
  double best_cost = std::numeric_limits<double>::infinity();
  const std::size_t n = candidates.size();
  const std::size_t limit = std::min(cfg.max_subset, n);
  std::vector<Point> chosen;
  std::vector<IntPoint> chosen_units;
  for (std::size_t t = 1; t <= limit; ++t) {
    const double floor_cost = p.beta * static_cast<double>(t) + p.alpha * static_cast<double>(t - 1) * unit;
    if (best && floor_cost >= best_cost) break;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(t), true);
    do {
      chosen.clear();
      chosen_units.clear();
      for (std::size_t i = 0; i < n; ++i) {
        if (pick[i]) {
          chosen.push_back(candidates[i]);
          chosen_units.push_back(grid_units[i]);
        }
      }
      if (!corners_covered(g, chosen, p.k)) continue;
      if (find_uncovered_point(g, chosen, p.k)) continue;
      std::int64_t units = 0;
      const auto order = shortest_hamiltonian_path(chosen_units, &units);
      const double cost = p.alpha * static_cast<double>(units) * unit + p.beta * static_cast<double>(t);
      if (!best || cost < best_cost) {
        CoveringPath path;
        path.method = PathMethod::oracle;
        for (std::size_t idx : order) path.stops.push_back(chosen[idx]);
        best = std::move(path);
        best_cost = cost;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  if (!best) {
    fail(ErrorCode::infeasible, "no covering subset of at most " + std::to_string(limit) +
                                    " stops on this candidate lattice");
  }
  return *best;
}

std::vector<RatioRow> ratio_study(const std::vector<RatioInstance>& instances, const CostParams& p,
                                  const OracleConfig& cfg, int workers) {
  p.validate();
  std::vector<RatioRow> rows(instances.size());
  auto run_one = [&](std::size_t idx) {
    const auto& inst = instances[idx];
    RatioRow row;
    row.instance = inst.name;
    row.seed = inst.seed;
    row.area = inst.grid.area();
    row.perimeter = inst.grid.perimeter();
    row.convex = inst.grid.is_convex();
    row.k = to_fraction_string(p.k);
    row.alpha = p.alpha;
    row.beta = p.beta;
    row.d = "NA";
    row.lower = optimal_profile(p, row.area, row.perimeter).lower_bound;
    try {
      auto built = construct(inst.grid, p);
      row.constructed = built.cost;
      if (built.path.d) row.d = to_fraction_string(*built.path.d);
      if (row.lower > 0) row.ratio_lower = built.cost / row.lower;
    } catch (const std::exception& e) {
      row.construct_error = "error";
    }
    try {
      auto best = solve_exact(inst.grid, p, cfg);
      row.oracle = path_cost(best, p);
    } catch (const Error& e) {
      row.oracle_error = e.code() == ErrorCode::too_large    ? "too_large"
                         : e.code() == ErrorCode::infeasible ? "infeasible"
                                                             : "error";
    } catch (const std::exception&) {
      row.oracle_error = "error";
    }
    if (row.oracle && row.constructed && *row.oracle > 0) row.ratio_oracle = *row.constructed / *row.oracle;
    rows[idx] = std::move(row);
  };

  const std::size_t pool = static_cast<std::size_t>(std::max(1, workers));
  if (pool == 1 || instances.size() < 2) {
    for (std::size_t i = 0; i < instances.size(); ++i) run_one(i);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < std::min(pool, instances.size()); ++w) {
    threads.emplace_back([&] {
      for (std::size_t i = next++; i < instances.size(); i = next++) run_one(i);
    });
  }
  for (auto& t : threads) t.join();
  return rows;
}

std::string ratio_csv(const std::vector<RatioRow>& rows) {
  std::ostringstream out;
  out << "instance,seed,A,P,convex,k,alpha,beta,d,lower,oracle,constructed,ratio_lower,ratio_oracle\n";
  auto opt = [](const std::optional<double>& v, const std::string& marker) {
    return v ? format_number(*v) : (marker.empty() ? std::string("NA") : marker);
  };
  for (const auto& r : rows) {
    out << r.instance << ',' << r.seed << ',' << r.area << ',' << r.perimeter << ',' << (r.convex ? "true" : "false")
        << ',' << r.k << ',' << format_number(r.alpha) << ',' << format_number(r.beta) << ',' << r.d << ','
        << format_number(r.lower) << ',' << opt(r.oracle, r.oracle_error) << ','
        << opt(r.constructed, r.construct_error) << ',' << opt(r.ratio_lower, "") << ','
        << opt(r.ratio_oracle, "") << '\n';
  }
  return out.str();
}

}  // namespace gridcover
