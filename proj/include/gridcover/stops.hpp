#pragma once

#include <cstdint>
#include <vector>

#include "gridcover/bounds.hpp"
#include "gridcover/grid.hpp"
#include "gridcover/rational.hpp"

namespace gridcover {

// Offset-column lattice of candidate stops. Traversal m is the vertical line
// x = anchor.x + m*s; its stops sit at y = anchor.y + n*d + (m mod 2)*d/2.
// With s = 2k - d/2 every point of the plane is within l1 distance k of a
// center, and each center's nearest-center cell has area d*s = f(d).
struct StopLattice {
  Rational k;
  Rational d;
  Rational s;
  Point anchor;
  // Inclusive index ranges spanning the grid's bounding box inflated by 2k.
  std::int64_t m_min = 0;
  std::int64_t m_max = 0;
  std::int64_t n_min = 0;
  std::int64_t n_max = 0;

  Rational traversal_x(std::int64_t m) const;
  Point center(std::int64_t m, std::int64_t n) const;
};

struct LatticeCenter {
  std::int64_t m = 0;
  std::int64_t n = 0;
  Point p;
};

// Boundary stop that stands in for an outside center X_out inside one of the
// four radius-k/2 sub-diamonds of D(X_out; k).
struct ProjectedStop {
  Point stop;
  Point source;
  int diamond_index = 1;  // 1 right, 2 up, 3 left, 4 down
};

struct CenterClassification {
  std::vector<LatticeCenter> inside;   // C_in
  std::vector<LatticeCenter> outside;  // C_out
};

struct StopSet {
  StopLattice lattice;
  std::vector<LatticeCenter> c_in;
  std::vector<LatticeCenter> c_out;
  std::vector<ProjectedStop> projected;  // duplicates of earlier stops removed

  std::size_t stop_count() const { return c_in.size() + projected.size(); }
  // C_in first, then projected stops, in construction order.
  std::vector<Point> stops() const;
};

// anchor_shift translates the lattice away from the bounding-box corner.
StopLattice build_lattice(const Rational& d, const CostParams& p, const Grid& g, const Point& anchor_shift = {});

// Selects every center whose coverage diamond D(center; k) meets the grid
// and splits the selection by closed containment.
CenterClassification classify_centers(const Grid& g, const StopLattice& lat);

// Center of sub-diamond i (1..4) of D(x; k).
Point sub_diamond_center(const Point& x, const Rational& k, int index);

// One boundary stop per sub-diamond of D(x_out; k) that meets the grid.
std::vector<ProjectedStop> project_out_center(const Grid& g, const Point& x_out, const Rational& k);

StopSet build_stop_set(const Grid& g, const Rational& d, const CostParams& p, const Point& anchor_shift = {});

}  // namespace gridcover
