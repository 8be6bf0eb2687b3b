#include "gridcover/grid.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <string>

#include "gridcover/error.hpp"

namespace gridcover {

namespace {

constexpr std::int64_t kCoordinateLimit = std::int64_t{1} << 30;

struct DirectedEdge {
  LatticePoint from;
  LatticePoint to;
  bool used = false;
};

std::int64_t cross_z(std::int64_t ax, std::int64_t ay, std::int64_t bx, std::int64_t by) {
  return ax * by - ay * bx;
}

}  // namespace

std::vector<LatticePoint> BoundaryLoop::corners() const {
  std::vector<LatticePoint> out;
  const std::size_t n = vertices.size();
  for (std::size_t idx = 0; idx < n; ++idx) {
    const auto& prev = vertices[(idx + n - 1) % n];
    const auto& cur = vertices[idx];
    const auto& next = vertices[(idx + 1) % n];
    if (cross_z(cur.x - prev.x, cur.y - prev.y, next.x - cur.x, next.y - cur.y) != 0) out.push_back(cur);
  }
  return out;
}

std::uint64_t Grid::key(std::int64_t i, std::int64_t j) {
  auto ui = static_cast<std::uint64_t>(static_cast<std::uint32_t>(i + kCoordinateLimit));
  auto uj = static_cast<std::uint64_t>(static_cast<std::uint32_t>(j + kCoordinateLimit));
  return (ui << 32) | uj;
}

Grid::Grid(std::vector<Cell> cells) : cells_(std::move(cells)) {
  if (cells_.empty()) fail(ErrorCode::parse, "grid must contain at least one square");
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());

  box_ = Box{cells_.front().i, cells_.front().j, cells_.front().i, cells_.front().j};
  for (const auto& c : cells_) {
    if (c.i <= -kCoordinateLimit + 4 || c.i >= kCoordinateLimit - 4 || c.j <= -kCoordinateLimit + 4 ||
        c.j >= kCoordinateLimit - 4) {
      fail(ErrorCode::domain, "square coordinates out of supported range");
    }
    lookup_.insert(key(c.i, c.j));
    box_.min_i = std::min(box_.min_i, c.i);
    box_.max_i = std::max(box_.max_i, c.i);
    box_.min_j = std::min(box_.min_j, c.j);
    box_.max_j = std::max(box_.max_j, c.j);
  }

  trace_boundary();
  count_components();
  compute_convexity();
}

bool Grid::has_cell(std::int64_t i, std::int64_t j) const {
  if (i < box_.min_i || i > box_.max_i || j < box_.min_j || j > box_.max_j) return false;
  return lookup_.contains(key(i, j));
}

int Grid::hole_count() const {
  return static_cast<int>(std::count_if(loops_.begin(), loops_.end(), [](const BoundaryLoop& l) { return !l.outer; }));
}

void Grid::trace_boundary() {
  std::vector<DirectedEdge> edges;
  for (const auto& c : cells_) {
    const std::int64_t i = c.i;
    const std::int64_t j = c.j;
    if (!has_cell(i, j - 1)) edges.push_back({{i, j}, {i + 1, j}});
    if (!has_cell(i + 1, j)) edges.push_back({{i + 1, j}, {i + 1, j + 1}});
    if (!has_cell(i, j + 1)) edges.push_back({{i + 1, j + 1}, {i, j + 1}});
    if (!has_cell(i - 1, j)) edges.push_back({{i, j + 1}, {i, j}});
  }
  perimeter_ = static_cast<std::int64_t>(edges.size());

  std::unordered_map<std::uint64_t, std::vector<std::size_t>> outgoing;
  for (std::size_t e = 0; e < edges.size(); ++e) outgoing[key(edges[e].from.x, edges[e].from.y)].push_back(e);

  for (std::size_t start = 0; start < edges.size(); ++start) {
    if (edges[start].used) continue;
    BoundaryLoop loop;
    std::size_t current = start;
    std::int64_t twice_area = 0;
    while (!edges[current].used) {
      DirectedEdge& e = edges[current];
      e.used = true;
      loop.vertices.push_back(e.from);
      twice_area += cross_z(e.from.x, e.from.y, e.to.x, e.to.y);

      const std::int64_t dx = e.to.x - e.from.x;
      const std::int64_t dy = e.to.y - e.from.y;
      // At a pinch vertex prefer the left turn: squares meeting only at a
      // corner are not connected.
      const std::array<std::pair<std::int64_t, std::int64_t>, 3> preference{{{-dy, dx}, {dx, dy}, {dy, -dx}}};
      const auto& candidates = outgoing[key(e.to.x, e.to.y)];
      std::size_t next = current;
      for (const auto& [px, py] : preference) {
        for (std::size_t cand : candidates) {
          const auto& ce = edges[cand];
          if ((!ce.used || cand == start) && ce.to.x - ce.from.x == px && ce.to.y - ce.from.y == py) {
            next = cand;
            break;
          }
        }
        if (next != current) break;
      }
      if (next == current || next == start) break;  // closed the loop
      current = next;
    }
    loop.outer = twice_area > 0;
    loops_.push_back(std::move(loop));
  }

  for (std::size_t l = 0; l < loops_.size(); ++l) {
    const auto& verts = loops_[l].vertices;
    const std::size_t n = verts.size();
    for (std::size_t idx = 0; idx < n; ++idx) {
      const auto& a = verts[idx];
      const auto& b = verts[(idx + 1) % n];
      if (a.y == b.y) {
        const bool reversed = b.x < a.x;
        horizontal_edges_[key(std::min(a.x, b.x), a.y)] = {l, static_cast<std::int64_t>(idx), reversed};
      } else {
        const bool reversed = b.y < a.y;
        vertical_edges_[key(a.x, std::min(a.y, b.y))] = {l, static_cast<std::int64_t>(idx), reversed};
      }
    }
  }
}

void Grid::count_components() {
  std::unordered_set<std::uint64_t> seen;
  components_ = 0;
  for (const auto& c : cells_) {
    if (seen.contains(key(c.i, c.j))) continue;
    ++components_;
    std::deque<Cell> queue{c};
    seen.insert(key(c.i, c.j));
    while (!queue.empty()) {
      Cell cur = queue.front();
      queue.pop_front();
      const std::array<Cell, 4> nbrs{{{cur.i + 1, cur.j}, {cur.i - 1, cur.j}, {cur.i, cur.j + 1}, {cur.i, cur.j - 1}}};
      for (const auto& nb : nbrs) {
        if (has_cell(nb.i, nb.j) && seen.insert(key(nb.i, nb.j)).second) queue.push_back(nb);
      }
    }
  }
}

void Grid::compute_convexity() {
  if (components_ != 1) {
    convex_ = false;
    return;
  }
  std::map<std::int64_t, std::vector<std::int64_t>> rows;
  std::map<std::int64_t, std::vector<std::int64_t>> columns;
  for (const auto& c : cells_) {
    rows[c.j].push_back(c.i);
    columns[c.i].push_back(c.j);
  }
  auto single_run = [](const std::vector<std::int64_t>& sorted) {
    return sorted.back() - sorted.front() + 1 == static_cast<std::int64_t>(sorted.size());
  };
  convex_ = true;
  for (auto& [j, is] : rows) {
    // cells_ is sorted by (i, j) so row lists arrive sorted
    if (!single_run(is)) convex_ = false;
  }
  for (auto& [i, js] : columns) {
    if (!single_run(js)) convex_ = false;
  }
}

bool Grid::contains(const Point& p) const {
  const std::int64_t fx = floor_to_int(p.x);
  const std::int64_t fy = floor_to_int(p.y);
  const bool ix = is_integer(p.x);
  const bool iy = is_integer(p.y);
  for (std::int64_t di = 0; di <= (ix ? 1 : 0); ++di) {
    for (std::int64_t dj = 0; dj <= (iy ? 1 : 0); ++dj) {
      if (has_cell(fx - di, fy - dj)) return true;
    }
  }
  return false;
}

bool Grid::on_boundary(const Point& p) const { return locate_on_boundary(p).has_value(); }

std::optional<BoundaryPosition> Grid::locate_on_boundary(const Point& p) const {
  const bool ix = is_integer(p.x);
  const bool iy = is_integer(p.y);
  auto position_on = [&](const EdgeSlot& slot) {
    const auto& loop = loops_[slot.loop];
    const auto& start = loop.vertices[static_cast<std::size_t>(slot.index)];
    Rational along = abs_value(p.x - Rational(Integer(start.x))) + abs_value(p.y - Rational(Integer(start.y)));
    Rational arc = Rational(Integer(slot.index)) + along;
    if (arc >= Rational(Integer(loop.length()))) arc -= Rational(Integer(loop.length()));
    return BoundaryPosition{slot.loop, arc};
  };

  if (ix && iy) {
    const std::int64_t x = floor_to_int(p.x);
    const std::int64_t y = floor_to_int(p.y);
    const std::array<std::pair<const std::unordered_map<std::uint64_t, EdgeSlot>*, std::uint64_t>, 4> probes{{
        {&horizontal_edges_, key(x, y)},
        {&horizontal_edges_, key(x - 1, y)},
        {&vertical_edges_, key(x, y)},
        {&vertical_edges_, key(x, y - 1)},
    }};
    for (const auto& [map, k] : probes) {
      if (auto it = map->find(k); it != map->end()) return position_on(it->second);
    }
    return std::nullopt;
  }
  if (ix) {
    if (auto it = vertical_edges_.find(key(floor_to_int(p.x), floor_to_int(p.y))); it != vertical_edges_.end())
      return position_on(it->second);
    return std::nullopt;
  }
  if (iy) {
    if (auto it = horizontal_edges_.find(key(floor_to_int(p.x), floor_to_int(p.y))); it != horizontal_edges_.end())
      return position_on(it->second);
  }
  return std::nullopt;
}

Rational distance_to_cell(const Point& p, const Cell& c) {
  const Rational lo_x(Integer(c.i));
  const Rational lo_y(Integer(c.j));
  Rational dx = 0;
  if (p.x < lo_x) dx = lo_x - p.x;
  else if (p.x > lo_x + 1) dx = p.x - lo_x - 1;
  Rational dy = 0;
  if (p.y < lo_y) dy = lo_y - p.y;
  else if (p.y > lo_y + 1) dy = p.y - lo_y - 1;
  return dx + dy;
}

Point clamp_to_cell(const Point& p, const Cell& c) {
  const Rational lo_x(Integer(c.i));
  const Rational lo_y(Integer(c.j));
  return Point{std::clamp(p.x, lo_x, lo_x + 1), std::clamp(p.y, lo_y, lo_y + 1)};
}

std::optional<Point> Grid::nearest_point(const Point& p, const Rational& radius) const {
  std::optional<Point> best;
  Rational best_distance;
  auto consider = [&](const Cell& c) {
    Rational dist = distance_to_cell(p, c);
    if (dist > radius) return;
    Point q = clamp_to_cell(p, c);
    if (!best || dist < best_distance || (dist == best_distance && q < *best)) {
      best = q;
      best_distance = dist;
    }
  };
  const std::int64_t i0 = floor_to_int(p.x - radius) - 1;
  const std::int64_t i1 = floor_to_int(p.x + radius);
  const std::int64_t j0 = floor_to_int(p.y - radius) - 1;
  const std::int64_t j1 = floor_to_int(p.y + radius);
  if ((i1 - i0 + 1) * (j1 - j0 + 1) > area()) {
    for (const auto& c : cells_) consider(c);
  } else {
    for (std::int64_t i = i0; i <= i1; ++i)
      for (std::int64_t j = j0; j <= j1; ++j)
        if (has_cell(i, j)) consider(Cell{i, j});
  }
  return best;
}

std::optional<Rational> Grid::distance_within(const Point& p, const Rational& radius) const {
  auto q = nearest_point(p, radius);
  if (!q) return std::nullopt;
  return l1_distance(p, *q);
}

Grid parse_grid(std::string_view text) {
  std::vector<std::string> rows;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    rows.push_back(std::move(line));
    pos = end + 1;
  }
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  if (rows.empty()) fail(ErrorCode::parse, "empty mask");

  const std::size_t width = rows.front().size();
  std::vector<Cell> cells;
  const auto height = static_cast<std::int64_t>(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& line = rows[r];
    if (line.size() != width) {
      fail(ErrorCode::parse, "line " + std::to_string(r + 1) + ": ragged row (length " + std::to_string(line.size()) +
                                 ", expected " + std::to_string(width) + ")");
    }
    for (std::size_t col = 0; col < line.size(); ++col) {
      const char ch = line[col];
      if (ch == '#') {
        cells.push_back(Cell{static_cast<std::int64_t>(col), height - 1 - static_cast<std::int64_t>(r)});
      } else if (ch != '.') {
        fail(ErrorCode::parse, "line " + std::to_string(r + 1) + ", column " + std::to_string(col + 1) +
                                   ": unexpected character '" + std::string(1, ch) + "'");
      }
    }
  }
  if (cells.empty()) fail(ErrorCode::parse, "empty mask: no '#' squares");
  return Grid(std::move(cells));
}

Grid make_cross(std::int64_t n) {
  if (n < 0) fail(ErrorCode::domain, "cross arm length must be non-negative");
  std::vector<Cell> cells{{0, 0}};
  for (std::int64_t m = 1; m <= n; ++m) {
    cells.push_back({m, 0});
    cells.push_back({-m, 0});
    cells.push_back({0, m});
    cells.push_back({0, -m});
  }
  return Grid(std::move(cells));
}

Grid make_rectangle(std::int64_t width, std::int64_t height) {
  if (width < 1 || height < 1) fail(ErrorCode::domain, "rectangle sides must be positive");
  std::vector<Cell> cells;
  for (std::int64_t i = 0; i < width; ++i)
    for (std::int64_t j = 0; j < height; ++j) cells.push_back({i, j});
  return Grid(std::move(cells));
}

}  // namespace gridcover
