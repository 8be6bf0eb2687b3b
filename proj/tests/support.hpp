#pragma once

// Reference computations for the tests. They deliberately share no code with
// the library beyond the value types: brute force over cells, plain doubles
// or long doubles, and direct transcriptions of the defining formulas.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "gridcover/grid.hpp"
#include "gridcover/rational.hpp"

namespace ref {

using CellSet = std::set<std::pair<std::int64_t, std::int64_t>>;

inline CellSet cell_set(const gridcover::Grid& g) {
  CellSet out;
  for (const auto& c : g.cells()) out.insert({c.i, c.j});
  return out;
}

// Unit edges with exactly one adjacent square.
inline std::int64_t perimeter(const CellSet& cells) {
  std::int64_t p = 0;
  for (const auto& [i, j] : cells) {
    p += !cells.count({i + 1, j});
    p += !cells.count({i - 1, j});
    p += !cells.count({i, j + 1});
    p += !cells.count({i, j - 1});
  }
  return p;
}

inline int components(const CellSet& cells) {
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  int count = 0;
  for (const auto& start : cells) {
    if (seen.count(start)) continue;
    ++count;
    std::queue<std::pair<std::int64_t, std::int64_t>> q;
    q.push(start);
    seen.insert(start);
    while (!q.empty()) {
      auto [i, j] = q.front();
      q.pop();
      const std::pair<std::int64_t, std::int64_t> nbrs[4] = {{i + 1, j}, {i - 1, j}, {i, j + 1}, {i, j - 1}};
      for (const auto& n : nbrs) {
        if (cells.count(n) && !seen.count(n)) {
          seen.insert(n);
          q.push(n);
        }
      }
    }
  }
  return count;
}

// Connected, and every row and column meets the grid in one run.
inline bool convex(const CellSet& cells) {
  if (components(cells) != 1) return false;
  std::int64_t lo_i = std::numeric_limits<std::int64_t>::max(), hi_i = std::numeric_limits<std::int64_t>::min();
  std::int64_t lo_j = lo_i, hi_j = hi_i;
  for (const auto& [i, j] : cells) {
    lo_i = std::min(lo_i, i);
    hi_i = std::max(hi_i, i);
    lo_j = std::min(lo_j, j);
    hi_j = std::max(hi_j, j);
  }
  for (std::int64_t j = lo_j; j <= hi_j; ++j) {
    int runs = 0;
    bool prev = false;
    for (std::int64_t i = lo_i; i <= hi_i; ++i) {
      const bool here = cells.count({i, j}) > 0;
      if (here && !prev) ++runs;
      prev = here;
    }
    if (runs > 1) return false;
  }
  for (std::int64_t i = lo_i; i <= hi_i; ++i) {
    int runs = 0;
    bool prev = false;
    for (std::int64_t j = lo_j; j <= hi_j; ++j) {
      const bool here = cells.count({i, j}) > 0;
      if (here && !prev) ++runs;
      prev = here;
    }
    if (runs > 1) return false;
  }
  return true;
}

// Distance from (x, y) to the closed square [i, i+1] x [j, j+1].
inline long double cell_distance(long double x, long double y, std::int64_t i, std::int64_t j) {
  const long double dx = std::max({0.0L, static_cast<long double>(i) - x, x - static_cast<long double>(i + 1)});
  const long double dy = std::max({0.0L, static_cast<long double>(j) - y, y - static_cast<long double>(j + 1)});
  return dx + dy;
}

inline gridcover::Rational cell_distance_exact(const gridcover::Point& p, std::int64_t i, std::int64_t j) {
  using gridcover::Rational;
  const Rational lo_x{gridcover::Integer(i)}, hi_x{gridcover::Integer(i + 1)};
  const Rational lo_y{gridcover::Integer(j)}, hi_y{gridcover::Integer(j + 1)};
  Rational dx(0), dy(0);
  if (p.x < lo_x) dx = lo_x - p.x;
  if (p.x > hi_x) dx = p.x - hi_x;
  if (p.y < lo_y) dy = lo_y - p.y;
  if (p.y > hi_y) dy = p.y - hi_y;
  return dx + dy;
}

inline gridcover::Rational grid_distance_exact(const gridcover::Point& p, const CellSet& cells) {
  gridcover::Rational best(-1);
  for (const auto& [i, j] : cells) {
    const auto d = cell_distance_exact(p, i, j);
    if (best < 0 || d < best) best = d;
  }
  return best;
}

inline gridcover::Rational stop_distance_exact(const gridcover::Point& p, const std::vector<gridcover::Point>& stops) {
  gridcover::Rational best(-1);
  for (const auto& s : stops) {
    const auto d = gridcover::abs_value(p.x - s.x) + gridcover::abs_value(p.y - s.y);
    if (best < 0 || d < best) best = d;
  }
  return best;
}

inline long double stop_distance(long double x, long double y, const std::vector<std::pair<long double, long double>>& stops) {
  long double best = std::numeric_limits<long double>::infinity();
  for (const auto& [sx, sy] : stops) best = std::min(best, std::fabs(x - sx) + std::fabs(y - sy));
  return best;
}

inline std::vector<std::pair<long double, long double>> as_long_double(const std::vector<gridcover::Point>& pts) {
  std::vector<std::pair<long double, long double>> out;
  for (const auto& p : pts) {
    out.emplace_back(static_cast<long double>(p.x.numerator().convert_to<double>()) /
                         static_cast<long double>(p.x.denominator().convert_to<double>()),
                     static_cast<long double>(p.y.numerator().convert_to<double>()) /
                         static_cast<long double>(p.y.denominator().convert_to<double>()));
  }
  return out;
}

// Largest sampled distance from the grid to the stops, sampling each cell on
// an n x n lattice including its edges.
inline long double max_sampled_gap(const CellSet& cells, const std::vector<gridcover::Point>& stops, int n) {
  const auto pts = as_long_double(stops);
  long double worst = 0;
  for (const auto& [i, j] : cells) {
    for (int a = 0; a <= n; ++a) {
      for (int b = 0; b <= n; ++b) {
        const long double x = static_cast<long double>(i) + static_cast<long double>(a) / n;
        const long double y = static_cast<long double>(j) + static_cast<long double>(b) / n;
        worst = std::max(worst, stop_distance(x, y, pts));
      }
    }
  }
  return worst;
}

// Direct transcription of the offset-column lattice: traversal m at
// x = ax + m s, stops at y = ay + n d + (m mod 2) d / 2. Brute force over a
// window of indices around the point.
inline long double lattice_distance(long double x, long double y, long double ax, long double ay, long double d,
                                    long double s) {
  long double best = std::numeric_limits<long double>::infinity();
  const auto m0 = static_cast<std::int64_t>(std::floor((x - ax) / s));
  for (std::int64_t m = m0 - 3; m <= m0 + 3; ++m) {
    const long double cx = ax + static_cast<long double>(m) * s;
    const long double off = (((m % 2) + 2) % 2 == 1) ? d / 2 : 0;
    const auto n0 = static_cast<std::int64_t>(std::floor((y - ay - off) / d));
    for (std::int64_t n = n0 - 3; n <= n0 + 3; ++n) {
      const long double cy = ay + off + static_cast<long double>(n) * d;
      best = std::min(best, std::fabs(x - cx) + std::fabs(y - cy));
    }
  }
  return best;
}

// Random 4-connected blob grown from the origin, with random single-cell
// holes punched where all eight neighbours are present.
inline gridcover::Grid random_blob(std::mt19937_64& rng, std::int64_t area, int holes) {
  CellSet cells{{0, 0}};
  std::vector<std::pair<std::int64_t, std::int64_t>> order{{0, 0}};
  std::uniform_int_distribution<int> dir(0, 3);
  while (static_cast<std::int64_t>(cells.size()) < area) {
    std::uniform_int_distribution<std::size_t> pick(0, order.size() - 1);
    auto [i, j] = order[pick(rng)];
    switch (dir(rng)) {
      case 0: ++i; break;
      case 1: --i; break;
      case 2: ++j; break;
      default: --j; break;
    }
    if (cells.insert({i, j}).second) order.emplace_back(i, j);
  }
  for (int h = 0; h < holes; ++h) {
    std::vector<std::pair<std::int64_t, std::int64_t>> candidates;
    for (const auto& [i, j] : cells) {
      bool inner = true;
      for (int di = -1; di <= 1; ++di)
        for (int dj = -1; dj <= 1; ++dj)
          if (!cells.count({i + di, j + dj})) inner = false;
      if (inner) candidates.emplace_back(i, j);
    }
    if (candidates.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    cells.erase(candidates[pick(rng)]);
  }
  std::vector<gridcover::Cell> out;
  for (const auto& [i, j] : cells) out.push_back({i, j});
  return gridcover::Grid(std::move(out));
}

inline double rel_diff(double a, double b) {
  const double scale = std::max({std::fabs(a), std::fabs(b), 1e-300});
  return std::fabs(a - b) / scale;
}

}  // namespace ref
