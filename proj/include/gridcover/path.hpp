#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gridcover/bounds.hpp"
#include "gridcover/rational.hpp"

namespace gridcover {

enum class PathMethod { doubled_tree, up_and_down, oracle, single_stop };

std::string to_string(PathMethod m);
PathMethod path_method_from_string(const std::string& name);

// Ordered stop sequence S_1 -> ... -> S_T. Legs are straight l1 moves and
// are not required to stay inside the grid.
struct CoveringPath {
  std::vector<Point> stops;
  PathMethod method = PathMethod::doubled_tree;
  std::optional<Rational> d;  // lattice spacing used by the construction

  std::size_t stop_count() const { return stops.size(); }
  Rational length() const;
};

Rational path_length(const std::vector<Point>& stops);

// alpha * L + beta * T.
double path_cost(const CoveringPath& path, const CostParams& p);

}  // namespace gridcover
