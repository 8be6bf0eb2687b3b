#include "gridcover/pathgen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "gridcover/error.hpp"

namespace gridcover {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

class NodeTable {
 public:
  std::size_t add(const Point& p, bool stop, SpanningStructure& st) {
    auto [it, inserted] = index_.try_emplace(p, st.nodes.size());
    if (inserted) {
      st.nodes.push_back(p);
      st.is_stop.push_back(stop);
    } else if (stop) {
      st.is_stop[it->second] = true;
    }
    return it->second;
  }

 private:
  std::map<Point, std::size_t> index_;
};

// Highest y such that the vertical segment from (x, y0) up to (x, y) stays in
// the grid; (x, y0) must be in the grid.
Rational exit_upwards(const Grid& g, const Rational& x, const Rational& y0) {
  const bool on_line = is_integer(x);
  const std::int64_t col = floor_to_int(x);
  auto present = [&](std::int64_t j) { return g.has_cell(col, j) || (on_line && g.has_cell(col - 1, j)); };
  std::int64_t j = floor_to_int(y0);
  while (present(j)) ++j;
  const Rational top{Integer(j)};
  return top > y0 ? top : y0;
}

// Counter-clockwise angle order of direction vectors, starting at +x.
bool angle_before(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by) {
  auto half = [](const Rational& x, const Rational& y) { return (y < 0 || (y == 0 && x < 0)) ? 1 : 0; };
  const int ha = half(ax, ay);
  const int hb = half(bx, by);
  if (ha != hb) return ha < hb;
  return ax * by - ay * bx > 0;
}

bool edge_less(const StructureEdge& e, const StructureEdge& f, const std::vector<Point>& nodes) {
  if (e.length != f.length) return e.length < f.length;
  const auto& [ea, eb] = std::minmax(nodes[e.a], nodes[e.b]);
  const auto& [fa, fb] = std::minmax(nodes[f.a], nodes[f.b]);
  if (!(ea == fa)) return ea < fa;
  if (!(eb == fb)) return eb < fb;
  return static_cast<int>(e.kind) < static_cast<int>(f.kind);
}

}  // namespace

SpanningStructure build_spanning_structure(const Grid& g, const StopSet& ss) {
  SpanningStructure st;
  st.spacing = ss.lattice.d;
  NodeTable table;
  for (const auto& p : ss.stops()) table.add(p, true, st);

  std::map<std::int64_t, std::vector<const LatticeCenter*>> traversals;
  for (const auto& c : ss.c_in) traversals[c.m].push_back(&c);

  for (auto& [m, column] : traversals) {
    std::sort(column.begin(), column.end(), [](const auto* a, const auto* b) { return a->n < b->n; });
    for (std::size_t idx = 0; idx < column.size(); ++idx) {
      const bool run_ends = idx + 1 == column.size() || column[idx + 1]->n != column[idx]->n + 1;
      const std::size_t here = table.add(column[idx]->p, true, st);
      if (!run_ends) {
        const std::size_t up = table.add(column[idx + 1]->p, true, st);
        st.edges.push_back({here, up, ss.lattice.d, EdgeKind::traversal});
        continue;
      }
      ++st.cin_runs;
      const Point& top = column[idx]->p;
      const Rational exit_y = exit_upwards(g, top.x, top.y);
      const Rational link = exit_y - top.y;
      if (link > ss.lattice.d) fail(ErrorCode::internal, "boundary link longer than the stop spacing");
      const std::size_t anchor = table.add(Point{top.x, exit_y}, false, st);
      if (anchor != here) st.edges.push_back({here, anchor, link, EdgeKind::link});
    }
  }

  // Boundary arcs between consecutive marked points of each loop.
  std::vector<std::vector<std::pair<Rational, std::size_t>>> marks(g.boundary_loops().size());
  for (std::size_t node = 0; node < st.nodes.size(); ++node) {
    if (auto pos = g.locate_on_boundary(st.nodes[node])) marks[pos->loop].emplace_back(pos->arc, node);
  }
  for (std::size_t loop = 0; loop < marks.size(); ++loop) {
    auto& list = marks[loop];
    if (list.size() < 2) continue;
    std::sort(list.begin(), list.end());
    const Rational loop_length(Integer(g.boundary_loops()[loop].length()));
    for (std::size_t idx = 0; idx + 1 < list.size(); ++idx) {
      st.edges.push_back({list[idx].second, list[idx + 1].second, list[idx + 1].first - list[idx].first,
                          EdgeKind::boundary_arc});
    }
    st.edges.push_back(
        {list.back().second, list.front().second, loop_length - list.back().first + list.front().first,
         EdgeKind::boundary_arc});
  }
  return st;
}

SpanningTree extract_spanning_tree(const SpanningStructure& st, bool allow_connectors) {
  SpanningTree tree;
  tree.length = 0;
  const std::size_t n = st.nodes.size();
  if (n == 0) return tree;

  std::vector<StructureEdge> sorted = st.edges;
  std::sort(sorted.begin(), sorted.end(),
            [&](const StructureEdge& e, const StructureEdge& f) { return edge_less(e, f, st.nodes); });
  DisjointSets sets(n);
  for (const auto& e : sorted) {
    if (sets.unite(e.a, e.b)) {
      tree.edges.push_back(e);
      tree.length += e.length;
    }
  }

  std::size_t components = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (sets.find(v) == v) ++components;
  if (components == 1) return tree;
  if (!allow_connectors) {
    fail(ErrorCode::precondition,
         "spanning structure is disconnected (" + std::to_string(components) + " components)");
  }

  std::vector<double> xs(n), ys(n);
  for (std::size_t v = 0; v < n; ++v) {
    xs[v] = to_double(st.nodes[v].x);
    ys[v] = to_double(st.nodes[v].y);
  }
  while (components > 1) {
    // closest pair across components; only nodes of the root's component
    // are compared with the rest, which merges one component per round
    const std::size_t root = sets.find(0);
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_a = 0, best_b = 0;
    for (std::size_t a = 0; a < n; ++a) {
      if (sets.find(a) != root) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (sets.find(b) == root) continue;
        const double dist = l1_distance_approx(xs[a], ys[a], xs[b], ys[b]);
        if (dist < best) {
          best = dist;
          best_a = a;
          best_b = b;
        }
      }
    }
    StructureEdge e{best_a, best_b, l1_distance(st.nodes[best_a], st.nodes[best_b]), EdgeKind::connector};
    sets.unite(best_a, best_b);
    tree.edges.push_back(e);
    tree.length += e.length;
    ++tree.connectors;
    --components;
  }
  return tree;
}

CoveringPath doubled_tour_path(const SpanningStructure& st, const SpanningTree& tree) {
  CoveringPath path;
  path.method = PathMethod::doubled_tree;
  path.d = st.spacing;
  const std::size_t n = st.nodes.size();
  if (n == 0) return path;
  if (tree.edges.size() + 1 != n) fail(ErrorCode::precondition, "tree does not span the structure");

  std::vector<std::vector<std::size_t>> adjacent(n);
  for (const auto& e : tree.edges) {
    adjacent[e.a].push_back(e.b);
    adjacent[e.b].push_back(e.a);
  }
  std::optional<std::size_t> root;
  for (std::size_t v = 0; v < n; ++v) {
    if (st.is_stop[v] && (!root || st.nodes[v] < st.nodes[*root])) root = v;
  }
  if (!root) return path;

  std::vector<bool> visited(n, false);
  std::vector<std::size_t> stack{*root};
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    if (visited[v]) continue;
    visited[v] = true;
    if (st.is_stop[v]) path.stops.push_back(st.nodes[v]);
    std::vector<std::size_t> children;
    for (std::size_t w : adjacent[v])
      if (!visited[w]) children.push_back(w);
    const Point& here = st.nodes[v];
    std::sort(children.begin(), children.end(), [&](std::size_t a, std::size_t b) {
      const Rational ax = st.nodes[a].x - here.x, ay = st.nodes[a].y - here.y;
      const Rational bx = st.nodes[b].x - here.x, by = st.nodes[b].y - here.y;
      if (angle_before(ax, ay, bx, by)) return true;
      if (angle_before(bx, by, ax, ay)) return false;
      return st.nodes[a] < st.nodes[b];
    });
    for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(*it);
  }
  return path;
}

CoveringPath doubled_tour_path(const SpanningStructure& st) {
  return doubled_tour_path(st, extract_spanning_tree(st, false));
}

CoveringPath convex_updown_path(const Grid& g, const StopSet& ss) {
  if (!g.is_convex()) fail(ErrorCode::precondition, "up-and-down path requires a convex grid");
  CoveringPath path;
  path.method = PathMethod::up_and_down;
  path.d = ss.lattice.d;

  std::map<std::int64_t, std::vector<const LatticeCenter*>> traversals;
  for (const auto& c : ss.c_in) traversals[c.m].push_back(&c);
  bool upwards = true;
  for (auto& [m, column] : traversals) {
    std::sort(column.begin(), column.end(), [&](const auto* a, const auto* b) {
      return upwards ? a->n < b->n : a->n > b->n;
    });
    for (const auto* c : column) path.stops.push_back(c->p);
    upwards = !upwards;
  }

  std::vector<double> xs, ys;
  for (const auto& p : path.stops) {
    xs.push_back(to_double(p.x));
    ys.push_back(to_double(p.y));
  }
  for (const auto& ps : ss.projected) {
    const double px = to_double(ps.stop.x);
    const double py = to_double(ps.stop.y);
    std::size_t where = 0;
    if (!path.stops.empty()) {
      const std::size_t n = path.stops.size();
      double best = l1_distance_approx(px, py, xs[0], ys[0]);
      const double tail = l1_distance_approx(px, py, xs[n - 1], ys[n - 1]);
      if (tail < best) {
        best = tail;
        where = n;
      }
      for (std::size_t i = 0; i + 1 < n; ++i) {
        const double added = l1_distance_approx(xs[i], ys[i], px, py) + l1_distance_approx(px, py, xs[i + 1], ys[i + 1]) -
                             l1_distance_approx(xs[i], ys[i], xs[i + 1], ys[i + 1]);
        if (added < best) {
          best = added;
          where = i + 1;
        }
      }
    }
    path.stops.insert(path.stops.begin() + static_cast<std::ptrdiff_t>(where), ps.stop);
    xs.insert(xs.begin() + static_cast<std::ptrdiff_t>(where), px);
    ys.insert(ys.begin() + static_cast<std::ptrdiff_t>(where), py);
  }
  return path;
}

std::optional<Point> single_stop_cover(const Grid& g, const Rational& k) {
  const auto& cells = g.cells();
  std::int64_t u_min = std::numeric_limits<std::int64_t>::max(), u_max = std::numeric_limits<std::int64_t>::min();
  std::int64_t v_min = u_min, v_max = u_max;
  for (const auto& c : cells) {
    u_min = std::min(u_min, c.i + c.j);
    u_max = std::max(u_max, c.i + c.j + 2);
    v_min = std::min(v_min, c.i - c.j - 1);
    v_max = std::max(v_max, c.i - c.j + 1);
  }
  if (Rational(Integer(u_max - u_min)) > 2 * k || Rational(Integer(v_max - v_min)) > 2 * k) return std::nullopt;
  const Rational u = Rational(Integer(u_min + u_max), Integer(2));
  const Rational v = Rational(Integer(v_min + v_max), Integer(2));
  return Point{(u + v) / 2, (u - v) / 2};
}

Rational default_spacing(const CostParams& p) {
  auto d_star = optimal_spacing(p);
  if (!d_star) fail(ErrorCode::domain, "optimal spacing is undefined for beta = 0");
  Rational d = quantize_down(*d_star, 12);
  if (d <= 0) d = Rational(Integer(1), Integer(4096));
  if (d > 2 * p.k) d = 2 * p.k;
  return d;
}

Construction construct(const Grid& g, const CostParams& p, const ConstructOptions& options) {
  p.validate();
  if (auto single = single_stop_cover(g, p.k)) {
    Construction out;
    out.path.method = PathMethod::single_stop;
    out.path.stops.push_back(*single);
    out.cost = path_cost(out.path, p);
    return out;
  }

  std::vector<Rational> spacings;
  if (options.d) {
    spacings.push_back(*options.d);
  } else if (p.beta > 0) {
    spacings.push_back(default_spacing(p));
  } else {
    const int points = std::max(1, options.spacing_scan_points);
    for (int j = 1; j <= points; ++j) spacings.push_back(2 * p.k * Rational(Integer(j), Integer(points)));
  }
  const int phases = std::max(1, options.phase_scan);

  std::optional<Construction> best;
  for (const auto& d : spacings) {
    const Rational s = 2 * p.k - d / 2;
    for (int a = 0; a < phases; ++a) {
      for (int b = 0; b < phases; ++b) {
        const Point shift{2 * s * Rational(Integer(a), Integer(phases)), d * Rational(Integer(b), Integer(phases))};
        Construction cand;
        cand.stop_set = build_stop_set(g, d, p, shift);
        if (g.is_convex()) {
          cand.path = convex_updown_path(g, *cand.stop_set);
        } else {
          const auto st = build_spanning_structure(g, *cand.stop_set);
          const auto tree = extract_spanning_tree(st, true);
          cand.path = doubled_tour_path(st, tree);
          cand.tree_length = tree.length;
          cand.tree_connectors = tree.connectors;
        }
        cand.cost = path_cost(cand.path, p);
        if (!best || cand.cost < best->cost) best = std::move(cand);
      }
    }
  }

  if (!best->tree_length) {
    const auto st = build_spanning_structure(g, *best->stop_set);
    const auto tree = extract_spanning_tree(st, true);
    best->tree_length = tree.length;
    best->tree_connectors = tree.connectors;
  }
  return std::move(*best);
}

}  // namespace gridcover
