#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "gridcover/error.hpp"
#include "gridcover/instances.hpp"
#include "gridcover/pathgen.hpp"
#include "gridcover/verify.hpp"
#include "support.hpp"

using namespace gridcover;

namespace {

CostParams params(Rational k, double alpha = 1, double beta = 1) {
  CostParams p;
  p.k = k;
  p.alpha = alpha;
  p.beta = beta;
  return p;
}

Point ipt(std::int64_t x, std::int64_t y) { return Point{Rational(Integer(x)), Rational(Integer(y))}; }

Rational reference_length(const std::vector<Point>& stops) {
  Rational total(0);
  for (std::size_t i = 1; i < stops.size(); ++i)
    total += abs_value(stops[i].x - stops[i - 1].x) + abs_value(stops[i].y - stops[i - 1].y);
  return total;
}

SpanningStructure star() {
  SpanningStructure st;
  st.nodes = {ipt(0, 0), ipt(1, 0), ipt(0, 1), ipt(-1, 0)};
  st.is_stop = {true, true, true, true};
  st.spacing = Rational(1);
  for (std::size_t leaf = 1; leaf <= 3; ++leaf) st.edges.push_back({0, leaf, Rational(1), EdgeKind::traversal});
  return st;
}

// Every run of consecutive C_in centers on a traversal either ends where
// the vertical line leaves the grid, or has one link from its top stop that
// runs straight up inside the grid to the boundary.
void check_run_links(const Grid& g, const StopSet& ss, const SpanningStructure& st) {
  std::map<std::int64_t, std::map<std::int64_t, Point>> columns;
  for (const auto& c : ss.c_in) columns[c.m][c.n] = c.p;
  const Rational eps = make_rational(1, 1 << 20);
  std::size_t runs = 0, links = 0;
  for (const auto& [m, column] : columns) {
    for (const auto& [n, top] : column) {
      if (column.count(n + 1)) continue;
      ++runs;
      const StructureEdge* link = nullptr;
      for (const auto& e : st.edges)
        if (e.kind == EdgeKind::link && st.nodes[e.a] == top) link = &e;
      if (!link) {
        CHECK_FALSE(g.contains(Point{top.x, top.y + eps}));
        continue;
      }
      ++links;
      const Point& end = st.nodes[link->b];
      CHECK(end.x == top.x);
      CHECK(end.y - top.y == link->length);
      CHECK(link->length <= ss.lattice.d);
      CHECK(g.on_boundary(end));
      CHECK_FALSE(g.contains(Point{end.x, end.y + eps}));
      for (int t = 1; t < 16; ++t) CHECK(g.contains(Point{top.x, top.y + link->length * make_rational(t, 16)}));
    }
  }
  CHECK(runs == st.cin_runs);
  std::size_t total = 0;
  for (const auto& e : st.edges) total += e.kind == EdgeKind::link;
  CHECK(total == links);
}

}  // namespace

TEST_CASE("path cost arithmetic") {
  CoveringPath one;
  one.stops = {ipt(3, 4)};
  CHECK(path_cost(one, params(Rational(1), 2, 7)) == doctest::Approx(7));
  CoveringPath two;
  two.stops = {ipt(0, 0), ipt(1, 2)};
  CHECK(two.length() == Rational(3));
  CHECK(path_cost(two, params(Rational(1), 2, 5)) == doctest::Approx(16));
  CHECK(path_cost(two, params(Rational(1), 2, 0)) == doctest::Approx(6));
}

TEST_CASE("two stops: path is the edge") {
  SpanningStructure st;
  st.nodes = {ipt(0, 0), ipt(2, 1)};
  st.is_stop = {true, true};
  st.edges = {{0, 1, Rational(3), EdgeKind::traversal}};
  const auto path = doubled_tour_path(st);
  REQUIRE(path.stop_count() == 2);
  CHECK(path.length() == Rational(3));
}

TEST_CASE("star of three unit edges") {
  const auto st = star();
  const auto tree = extract_spanning_tree(st, false);
  CHECK(tree.length == Rational(3));
  const auto path = doubled_tour_path(st, tree);
  CHECK(path.stop_count() == 4);
  CHECK(path.length() <= Rational(6));
  std::set<Point> seen(path.stops.begin(), path.stops.end());
  CHECK(seen.size() == 4);
  // Preorder from the smallest stop (-1,0): its only neighbour is the hub.
  CHECK(path.stops[0] == ipt(-1, 0));
  CHECK(path.stops[1] == ipt(0, 0));
}

TEST_CASE("disconnected structure without connectors is rejected") {
  SpanningStructure st;
  st.nodes = {ipt(0, 0), ipt(5, 0)};
  st.is_stop = {true, true};
  CHECK_THROWS_AS(extract_spanning_tree(st, false), Error);
  const auto tree = extract_spanning_tree(st, true);
  CHECK(tree.connectors == 1);
  CHECK(tree.length == Rational(5));
}

TEST_CASE("single square: one link and the perimeter cycle") {
  const Grid g = parse_grid("#");
  const auto p = params(Rational(1));
  // d = 2 puts lattice centers on the corners (0,0) and (1,1).
  const auto ss = build_stop_set(g, Rational(2), p);
  const auto st = build_spanning_structure(g, ss);
  Rational arcs(0);
  std::size_t links = 0;
  for (const auto& e : st.edges) {
    if (e.kind == EdgeKind::boundary_arc) arcs += e.length;
    if (e.kind == EdgeKind::link) {
      ++links;
      CHECK(e.length <= Rational(2));
    }
  }
  CHECK(arcs == Rational(4));
  check_run_links(g, ss, st);
}

TEST_CASE("10x1 strip: one link of length at most d per run") {
  const Grid g = make_rectangle(10, 1);
  const auto p = params(Rational(1));
  const auto ss = build_stop_set(g, Rational(2), p);
  const auto st = build_spanning_structure(g, ss);
  std::size_t links = 0;
  for (const auto& e : st.edges) {
    if (e.kind == EdgeKind::link) {
      ++links;
      CHECK(e.length <= Rational(2));
    }
    if (e.kind == EdgeKind::traversal) CHECK(e.length == Rational(2));
  }
  check_run_links(g, ss, st);
  CHECK(st.cin_runs > 0);
}

TEST_CASE("traversal edges have length d and links at most d on random grids") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 20; ++trial) {
    const Grid g = ref::random_blob(rng, 80, trial % 3);
    const auto p = params(Rational(1));
    const Rational d = make_rational(3 + trial % 5, 4);
    const auto ss = build_stop_set(g, d, p);
    const auto st = build_spanning_structure(g, ss);
    std::size_t links = 0;
    for (const auto& e : st.edges) {
      if (e.kind == EdgeKind::traversal) CHECK(e.length == d);
      if (e.kind == EdgeKind::link) {
        ++links;
        CHECK(e.length <= d);
      }
      if (e.kind == EdgeKind::boundary_arc) CHECK(e.length >= l1_distance(st.nodes[e.a], st.nodes[e.b]));
    }
    check_run_links(g, ss, st);
  }
}

TEST_CASE("no interior centers: boundary cycle and projected stops only") {
  // Traversals at x = -1/2 and 3/2 miss the unit-wide strip.
  const Grid g = make_rectangle(1, 6);
  const auto p = params(Rational(2));
  const auto ss = build_stop_set(g, Rational(4), p, Point{make_rational(3, 2), Rational(0)});
  CHECK(ss.c_in.empty());
  REQUIRE_FALSE(ss.projected.empty());
  const auto st = build_spanning_structure(g, ss);
  for (const auto& e : st.edges) CHECK(e.kind == EdgeKind::boundary_arc);
  const auto path = doubled_tour_path(st, extract_spanning_tree(st));
  CHECK(path.stop_count() == ss.stop_count());
  CHECK_FALSE(find_uncovered_point(g, path.stops, p.k).has_value());
}

TEST_CASE("doubled tour on 10x10 stays under the length cap") {
  const Grid g = make_rectangle(10, 10);
  const auto p = params(Rational(1));
  const Rational d = default_spacing(p);
  const auto ss = build_stop_set(g, d, p);
  const auto st = build_spanning_structure(g, ss);
  const auto tree = extract_spanning_tree(st);
  const auto path = doubled_tour_path(st, tree);
  CHECK(path.length() <= Rational(2) * tree.length);
  CHECK(to_double(path.length()) <= path_length_bound(p, to_double(d), 100, 40));
  CHECK(path_length_bound(p, to_double(d), 100, 40) == doctest::Approx(503.6).epsilon(2e-3));
  CHECK(to_double(tree.length) <= static_cast<double>(ss.c_in.size()) * to_double(d) + 40);
}

TEST_CASE("up-and-down path") {
  const auto p = params(Rational(1));
  const Grid u(std::vector<Cell>{{0, 0}, {1, 0}, {2, 0}, {0, 1}, {2, 1}});
  const auto ss_u = build_stop_set(u, Rational(1), p);
  CHECK_THROWS_AS(convex_updown_path(u, ss_u), Error);

  for (std::int64_t w = 1; w <= 12; w += 3) {
    for (std::int64_t h = 1; h <= 12; h += 4) {
      const Grid r = make_rectangle(w, h);
      const Rational d = default_spacing(p);
      const auto ss = build_stop_set(r, d, p);
      const auto path = convex_updown_path(r, ss);
      CHECK(path.method == PathMethod::up_and_down);
      CHECK(path.stop_count() == ss.stop_count());
      CHECK(path.length() <= Rational(Integer(static_cast<std::int64_t>(ss.c_in.size()))) * d + Rational(2 * r.perimeter()));
      CHECK_FALSE(find_uncovered_point(r, path.stops, p.k).has_value());
    }
  }
}

TEST_CASE("single traversal in a strip is a vertical sweep") {
  const Grid g = make_rectangle(1, 10);
  const auto p = params(Rational(1));
  // Traversal x = 1/2 runs up the middle of the strip; neighbours at +-7/4.
  const auto ss = build_stop_set(g, Rational(1), p, Point{make_rational(1, 2), Rational(0)});
  std::set<std::int64_t> traversals;
  for (const auto& c : ss.c_in) traversals.insert(c.m);
  CHECK(traversals.size() == 1);
  const auto path = convex_updown_path(g, ss);
  std::vector<Point> inner;
  for (const auto& s : path.stops)
    for (const auto& c : ss.c_in)
      if (c.p == s) inner.push_back(s);
  REQUIRE(inner.size() == ss.c_in.size());
  for (std::size_t i = 1; i < inner.size(); ++i) CHECK(inner[i].y > inner[i - 1].y);
}

TEST_CASE("construct: bounds on small instances") {
  const auto p = params(Rational(1));
  const Grid sq = make_rectangle(10, 10);
  const auto built = construct(sq, p);
  const double s = sigma(p);
  CHECK(built.cost >= s * 98);
  CHECK(built.cost <= 2 * s * 772);
  CHECK(built.cost <= s * 772);
  CHECK(built.path.method == PathMethod::up_and_down);

  const auto tiny = construct(parse_grid("#"), params(Rational(2)));
  CHECK(tiny.path.method == PathMethod::single_stop);
  CHECK(tiny.path.stop_count() == 1);
  CHECK(tiny.cost == doctest::Approx(1.0));
}

TEST_CASE("construct with zero stop cost on crosses") {
  const auto p = params(Rational(1), 1, 0);
  for (std::int64_t n : {5, 20}) {
    const Grid g = make_cross(n);
    const auto built = construct(g, p);
    const double A = static_cast<double>(g.area()), P = static_cast<double>(g.perimeter());
    const double L = to_double(built.path.length());
    CAPTURE(n);
    CHECK(L >= (A - 2) / 2);
    CHECK(L <= A + 16 * P + 32);
    CHECK(built.cost == doctest::Approx(L));
    CHECK_FALSE(find_uncovered_point(g, built.path.stops, p.k).has_value());
    MESSAGE("cross n=" << n << " L=" << L);
  }
  const auto cross5 = construct(make_cross(5), p);
  CHECK(to_double(cross5.path.length()) >= 9.5);
  CHECK(to_double(cross5.path.length()) <= 757);
}

TEST_CASE("constructed paths visit every stop once with exact length") {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 20; ++trial) {
    const Grid g = ref::random_blob(rng, 100, trial % 3);
    const auto p = params(trial % 2 ? Rational(1) : make_rational(1, 2));
    const auto built = construct(g, p);
    CAPTURE(trial);
    CHECK(built.path.length() == reference_length(built.path.stops));
    CHECK(built.cost == doctest::Approx(p.alpha * to_double(built.path.length()) +
                                        p.beta * static_cast<double>(built.path.stop_count())));
    if (built.stop_set) {
      std::map<Point, int> expected;
      for (const auto& s : built.stop_set->stops()) expected[s] += 1;
      std::map<Point, int> got;
      for (const auto& s : built.path.stops) got[s] += 1;
      CHECK(expected == got);
    }
    CHECK_FALSE(find_uncovered_point(g, built.path.stops, p.k).has_value());
  }
}

TEST_CASE("disconnected grids are joined and covered") {
  const Grid g(std::vector<Cell>{{0, 0}, {1, 0}, {8, 3}, {9, 3}, {9, 4}});
  const auto p = params(Rational(1));
  const auto built = construct(g, p);
  CHECK(built.tree_connectors >= 1);
  CHECK_FALSE(find_uncovered_point(g, built.path.stops, p.k).has_value());
}

TEST_CASE("construct is deterministic") {
  std::mt19937_64 rng(99);
  const Grid g = ref::random_blob(rng, 120, 2);
  const auto p = params(Rational(1));
  const auto a = construct(g, p);
  const auto b = construct(g, p);
  CHECK(a.path.stops == b.path.stops);
  ConstructOptions scan;
  scan.phase_scan = 2;
  const auto c = construct(g, p, scan);
  CHECK(c.cost <= a.cost + 1e-9);
}

TEST_CASE("spacing override and validation") {
  const Grid g = make_rectangle(4, 3);
  const auto p = params(Rational(1));
  ConstructOptions opt;
  opt.d = make_rational(1, 2);
  const auto built = construct(g, p, opt);
  REQUIRE(built.path.d.has_value());
  CHECK(*built.path.d == make_rational(1, 2));
  opt.d = Rational(3);
  CHECK_THROWS_AS(construct(g, p, opt), Error);
  CHECK(default_spacing(p) == quantize_down(optimal_spacing(p).value(), 12));
}
