#pragma once

#include <optional>
#include <vector>

#include "gridcover/bounds.hpp"
#include "gridcover/grid.hpp"
#include "gridcover/path.hpp"
#include "gridcover/stops.hpp"

namespace gridcover {

enum class EdgeKind { traversal, link, boundary_arc, connector };

struct StructureEdge {
  std::size_t a = 0;
  std::size_t b = 0;
  Rational length;
  EdgeKind kind = EdgeKind::traversal;
};

// Graph over the stops plus the boundary points where C_in runs are linked
// to the boundary. Edges: consecutive C_in stops on a traversal (length d),
// one boundary link per run (length <= d), and the boundary arcs between
// consecutive marked points of each loop.
struct SpanningStructure {
  std::vector<Point> nodes;
  std::vector<bool> is_stop;
  std::vector<StructureEdge> edges;
  std::size_t cin_runs = 0;
  Rational spacing;
};

struct SpanningTree {
  std::vector<StructureEdge> edges;
  Rational length;
  std::size_t connectors = 0;  // straight edges added to join components
};

SpanningStructure build_spanning_structure(const Grid& g, const StopSet& ss);

// Minimum spanning tree over the structure (exact lengths, lexicographic
// tie-break). When the structure is disconnected (holes, disconnected grids)
// components are joined by closest-pair straight connectors if allowed,
// otherwise Error(precondition) is thrown naming the component count.
SpanningTree extract_spanning_tree(const SpanningStructure& st, bool allow_connectors = true);

// Preorder of the tree from the lexicographically smallest stop, children in
// counter-clockwise angular order; non-stop nodes are skipped.
CoveringPath doubled_tour_path(const SpanningStructure& st, const SpanningTree& tree);
CoveringPath doubled_tour_path(const SpanningStructure& st);

// Serpentine over the C_in traversals (alternately up and down, left to
// right), then each projected stop is inserted where it lengthens the path
// least. Requires a convex grid.
CoveringPath convex_updown_path(const Grid& g, const StopSet& ss);

struct ConstructOptions {
  std::optional<Rational> d;   // overrides the spacing choice
  int phase_scan = 1;          // n x n lattice translations tried per spacing
  int spacing_scan_points = 32;  // used when beta == 0
};

struct Construction {
  CoveringPath path;
  std::optional<StopSet> stop_set;       // absent for a single-stop cover
  std::optional<Rational> tree_length;
  std::size_t tree_connectors = 0;
  double cost = 0;
};

// Single stop at the center of the grid's uv-extent, if it covers the grid.
std::optional<Point> single_stop_cover(const Grid& g, const Rational& k);

// Spacing used when no override is given and beta > 0: d_star rounded down
// to a multiple of 2^-12, clamped to (0, 2k].
Rational default_spacing(const CostParams& p);

Construction construct(const Grid& g, const CostParams& p, const ConstructOptions& options = {});

}  // namespace gridcover
