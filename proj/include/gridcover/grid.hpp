#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "gridcover/rational.hpp"

namespace gridcover {

// Closed unit square [i, i+1] x [j, j+1].
struct Cell {
  std::int64_t i = 0;
  std::int64_t j = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

// One closed boundary curve, traced with the grid interior on the left:
// outer loops run counter-clockwise, hole loops clockwise. vertices holds one
// entry per unit step, so vertex n sits at arc position n.
struct BoundaryLoop {
  std::vector<LatticePoint> vertices;
  bool outer = true;

  std::int64_t length() const { return static_cast<std::int64_t>(vertices.size()); }
  // Vertices where the direction changes.
  std::vector<LatticePoint> corners() const;
};

struct BoundaryPosition {
  std::size_t loop = 0;
  Rational arc;  // distance along the loop from vertices[0]
};

struct Box {
  std::int64_t min_i = 0;
  std::int64_t min_j = 0;
  std::int64_t max_i = 0;  // inclusive cell index
  std::int64_t max_j = 0;

  std::int64_t width() const { return max_i - min_i + 1; }
  std::int64_t height() const { return max_j - min_j + 1; }
};

// A finite, non-empty union of integral unit squares. Immutable once built;
// every derived quantity is computed in the constructor.
class Grid {
 public:
  explicit Grid(std::vector<Cell> cells);

  const std::vector<Cell>& cells() const { return cells_; }  // sorted
  bool has_cell(std::int64_t i, std::int64_t j) const;

  std::int64_t area() const { return static_cast<std::int64_t>(cells_.size()); }
  std::int64_t perimeter() const { return perimeter_; }
  const Box& bounding_box() const { return box_; }

  bool is_convex() const { return convex_; }
  int component_count() const { return components_; }
  int hole_count() const;
  bool is_connected() const { return components_ == 1; }

  const std::vector<BoundaryLoop>& boundary_loops() const { return loops_; }

  // Closed containment: points on the boundary count as inside.
  bool contains(const Point& p) const;
  // True when p is in the grid but every neighbourhood of p leaves it.
  bool on_boundary(const Point& p) const;
  // Where p sits on the boundary loops; nullopt if p is not a boundary point.
  std::optional<BoundaryPosition> locate_on_boundary(const Point& p) const;

  // Closest grid point to p in l1 among cells within `radius` of p
  // (lexicographic tie-break); nullopt if no cell is that close.
  std::optional<Point> nearest_point(const Point& p, const Rational& radius) const;
  // l1 distance from p to the grid, or nullopt if it exceeds `radius`.
  std::optional<Rational> distance_within(const Point& p, const Rational& radius) const;

 private:
  static std::uint64_t key(std::int64_t i, std::int64_t j);

  void trace_boundary();
  void compute_convexity();
  void count_components();

  std::vector<Cell> cells_;
  std::unordered_set<std::uint64_t> lookup_;
  Box box_;
  std::int64_t perimeter_ = 0;
  bool convex_ = false;
  int components_ = 0;
  std::vector<BoundaryLoop> loops_;
  // start vertex of a directed boundary step -> (loop, index); keyed by the
  // unit edge (lower-left endpoint and orientation).
  struct EdgeSlot {
    std::size_t loop;
    std::int64_t index;
    bool reversed;
  };
  std::unordered_map<std::uint64_t, EdgeSlot> horizontal_edges_;
  std::unordered_map<std::uint64_t, EdgeSlot> vertical_edges_;
};

// Parses the ASCII mask: '#' filled, '.' empty, top row has the highest j.
Grid parse_grid(std::string_view text);

// l1 distance from p to the closed cell, and the closest point of the cell.
Rational distance_to_cell(const Point& p, const Cell& c);
Point clamp_to_cell(const Point& p, const Cell& c);

// Plus-shaped grid with n squares on each of the four arms (area 4n+1).
Grid make_cross(std::int64_t n);
Grid make_rectangle(std::int64_t width, std::int64_t height);

}  // namespace gridcover
