#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "gridcover/error.hpp"
#include "gridcover/grid.hpp"
#include "gridcover/serialize.hpp"
#include "support.hpp"

using namespace gridcover;

namespace {

Point pt(std::int64_t xn, std::int64_t xd, std::int64_t yn, std::int64_t yd) {
  return Point{make_rational(xn, xd), make_rational(yn, yd)};
}

std::string error_message(std::string_view text) {
  try {
    parse_grid(text);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::parse);
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("parse single square") {
  const Grid g = parse_grid("#");
  REQUIRE(g.cells().size() == 1);
  CHECK(g.cells()[0] == Cell{0, 0});
  CHECK(g.area() == 1);
  CHECK(g.perimeter() == 4);
}

TEST_CASE("parse 2x2 block") {
  const Grid g = parse_grid("##\n##");
  CHECK(g.area() == 4);
  CHECK(g.perimeter() == 8);
}

TEST_CASE("parse ring counts the hole boundary") {
  const Grid g = parse_grid("###\n#.#\n###");
  CHECK(g.area() == 8);
  CHECK(g.perimeter() == 16);
  CHECK(g.perimeter() == ref::perimeter(ref::cell_set(g)));
  CHECK(g.hole_count() == 1);
  CHECK_FALSE(g.has_cell(1, 1));
}

TEST_CASE("top row maps to the highest j") {
  const Grid g = parse_grid("#.\n.#");
  CHECK(g.has_cell(0, 1));
  CHECK(g.has_cell(1, 0));
  CHECK_FALSE(g.has_cell(0, 0));
  CHECK(g.component_count() == 2);
}

TEST_CASE("parse errors name the location") {
  CHECK(error_message("..\n..").find("empty") != std::string::npos);
  CHECK(error_message("").find("empty") != std::string::npos);
  const std::string ragged = error_message("##\n#");
  CHECK(ragged.find("line 2") != std::string::npos);
  const std::string bad = error_message("#x#");
  CHECK(bad.find("line 1") != std::string::npos);
  CHECK(bad.find("column 2") != std::string::npos);
}

TEST_CASE("parse tolerates CRLF and a trailing newline") {
  const Grid g = parse_grid("##\r\n#.\r\n");
  CHECK(g.area() == 3);
  CHECK(g.perimeter() == 8);
}

TEST_CASE("area and perimeter of rectangles and crosses") {
  CHECK(make_rectangle(10, 10).area() == 100);
  CHECK(make_rectangle(10, 10).perimeter() == 40);
  for (std::int64_t m = 1; m <= 6; ++m)
    for (std::int64_t n = 1; n <= 6; ++n) {
      const Grid r = make_rectangle(m, n);
      CHECK(r.area() == m * n);
      CHECK(r.perimeter() == 2 * (m + n));
      CHECK(r.is_convex());
    }
  const Grid cross = make_cross(5);
  CHECK(cross.area() == 21);
  CHECK(cross.perimeter() == 44);
  CHECK(cross.perimeter() == ref::perimeter(ref::cell_set(cross)));
}

TEST_CASE("convexity examples") {
  CHECK(make_cross(3).is_convex());
  CHECK(make_rectangle(4, 1).is_convex());
  const Grid u(std::vector<Cell>{{0, 0}, {1, 0}, {2, 0}, {0, 1}, {2, 1}});
  CHECK_FALSE(u.is_convex());
  const Grid split(std::vector<Cell>{{0, 0}, {2, 0}});
  CHECK_FALSE(split.is_convex());
  // Diagonal neighbours are not edge-connected.
  const Grid diagonal(std::vector<Cell>{{0, 0}, {1, 1}});
  CHECK_FALSE(diagonal.is_convex());
}

TEST_CASE("boundary loops") {
  const Grid square = parse_grid("#");
  const auto& one = square.boundary_loops();
  REQUIRE(one.size() == 1);
  CHECK(one[0].length() == 4);
  CHECK(one[0].outer);

  const Grid ring_grid = parse_grid("###\n#.#\n###");
  const auto& ring = ring_grid.boundary_loops();
  REQUIRE(ring.size() == 2);
  std::int64_t outer = 0, hole = 0;
  for (const auto& l : ring) (l.outer ? outer : hole) += l.length();
  CHECK(outer == 12);
  CHECK(hole == 4);

  const Grid strip_grid = make_rectangle(2, 1);
  const auto& strip = strip_grid.boundary_loops();
  REQUIRE(strip.size() == 1);
  CHECK(strip[0].length() == 6);
  CHECK(strip[0].corners().size() == 4);
}

TEST_CASE("pinched grids trace into separate loops") {
  // Two squares touching at a corner: one component each, two outer loops.
  const Grid g(std::vector<Cell>{{0, 0}, {1, 1}});
  std::int64_t total = 0;
  for (const auto& l : g.boundary_loops()) {
    CHECK(l.outer);
    total += l.length();
  }
  CHECK(g.boundary_loops().size() == 2);
  CHECK(total == 8);
}

TEST_CASE("contains uses closed squares") {
  const Grid g = parse_grid("#");
  CHECK(g.contains(pt(1, 2, 1, 2)));
  CHECK(g.contains(pt(1, 1, 1, 1)));
  CHECK(g.contains(pt(0, 1, 0, 1)));
  CHECK_FALSE(g.contains(pt(5, 4, 1, 2)));
  CHECK(g.on_boundary(pt(1, 1, 1, 2)));
  CHECK_FALSE(g.on_boundary(pt(1, 2, 1, 2)));
}

TEST_CASE("l1 distance examples") {
  CHECK(l1_distance(pt(0, 1, 0, 1), pt(0, 1, 0, 1)) == 0);
  CHECK(l1_distance(pt(0, 1, 0, 1), pt(1, 1, 2, 1)) == 3);
  CHECK(l1_distance(pt(1, 2, 0, 1), pt(0, 1, 1, 2)) == 1);
}

TEST_CASE("random grids agree with reference computations") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<std::int64_t> area(1, 150);
    std::uniform_int_distribution<int> holes(0, 3);
    const Grid g = ref::random_blob(rng, area(rng), holes(rng));
    const auto cells = ref::cell_set(g);
    CAPTURE(trial);
    CHECK(g.area() == static_cast<std::int64_t>(cells.size()));
    CHECK(g.perimeter() == ref::perimeter(cells));
    CHECK(g.perimeter() % 2 == 0);
    CHECK(g.perimeter() >= 4);
    CHECK(g.is_convex() == ref::convex(cells));
    CHECK(g.component_count() == ref::components(cells));

    std::int64_t loop_total = 0;
    int outer_loops = 0;
    for (const auto& loop : g.boundary_loops()) {
      loop_total += loop.length();
      outer_loops += loop.outer ? 1 : 0;
      for (std::size_t v = 0; v < loop.vertices.size(); ++v) {
        const auto& a = loop.vertices[v];
        const auto& b = loop.vertices[(v + 1) % loop.vertices.size()];
        CHECK(std::abs(a.x - b.x) + std::abs(a.y - b.y) == 1);
      }
    }
    CHECK(loop_total == g.perimeter());
    CHECK(outer_loops == g.component_count());

    // Rasterised membership at resolution 1/4, strictly inside cells.
    const Box& box = g.bounding_box();
    for (std::int64_t i = box.min_i - 1; i <= box.max_i + 1; ++i)
      for (std::int64_t j = box.min_j - 1; j <= box.max_j + 1; ++j)
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b) {
            const Point p{Rational(Integer(i)) + make_rational(2 * a + 1, 8),
                          Rational(Integer(j)) + make_rational(2 * b + 1, 8)};
            CHECK(g.contains(p) == (cells.count({i, j}) > 0));
          }

    // Removing and re-adding a square leaves the derived values unchanged.
    auto list = g.cells();
    const Cell removed = list[list.size() / 2];
    list.erase(list.begin() + static_cast<std::ptrdiff_t>(list.size() / 2));
    if (!list.empty()) {
      list.push_back(removed);
      const Grid again(list);
      CHECK(again.area() == g.area());
      CHECK(again.perimeter() == g.perimeter());
    }
  }
}

TEST_CASE("nearest point and distance to the grid") {
  std::mt19937_64 rng(7);
  const Grid g = ref::random_blob(rng, 40, 1);
  const auto cells = ref::cell_set(g);
  const Box& box = g.bounding_box();
  for (std::int64_t a = 4 * (box.min_i - 3); a <= 4 * (box.max_i + 4); a += 3) {
    for (std::int64_t b = 4 * (box.min_j - 3); b <= 4 * (box.max_j + 4); b += 3) {
      const Point p{make_rational(a, 4), make_rational(b, 4)};
      const Rational expected = ref::grid_distance_exact(p, cells);
      const auto got = g.distance_within(p, Rational(Integer(100)));
      REQUIRE(got.has_value());
      CHECK(*got == expected);
      const auto q = g.nearest_point(p, Rational(Integer(100)));
      REQUIRE(q.has_value());
      CHECK(g.contains(*q));
      CHECK(l1_distance(p, *q) == expected);
      if (expected > 2) CHECK_FALSE(g.distance_within(p, Rational(2)).has_value());
    }
  }
}

TEST_CASE("JSON export is sorted and round-trips") {
  const Grid g = parse_grid(".#\n##");
  const std::string json = grid_to_json(g);
  CHECK(json == R"({"squares":[[0,0],[1,0],[1,1]],"area":3,"perimeter":8,"convex":true})");
  const Grid back = read_grid(json);
  CHECK(back.cells() == g.cells());
  CHECK(grid_to_mask(back) == ".#\n##\n");
  CHECK_THROWS_AS(read_grid(R"({"cells":[]})"), Error);
}

TEST_CASE("empty cell list is rejected") {
  CHECK_THROWS_AS(Grid(std::vector<Cell>{}), Error);
}
