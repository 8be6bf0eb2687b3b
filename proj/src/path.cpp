#include "gridcover/path.hpp"

#include "gridcover/error.hpp"

namespace gridcover {

std::string to_string(PathMethod m) {
  switch (m) {
    case PathMethod::doubled_tree: return "doubled-tree";
    case PathMethod::up_and_down: return "up-and-down";
    case PathMethod::oracle: return "oracle";
    case PathMethod::single_stop: return "single-stop";
  }
  return "unknown";
}

PathMethod path_method_from_string(const std::string& name) {
  if (name == "doubled-tree") return PathMethod::doubled_tree;
  if (name == "up-and-down") return PathMethod::up_and_down;
  if (name == "oracle") return PathMethod::oracle;
  if (name == "single-stop") return PathMethod::single_stop;
  fail(ErrorCode::parse, "unknown path method '" + name + "'");
}

Rational path_length(const std::vector<Point>& stops) {
  Rational total = 0;
  for (std::size_t i = 1; i < stops.size(); ++i) total += l1_distance(stops[i - 1], stops[i]);
  return total;
}

Rational CoveringPath::length() const { return path_length(stops); }

double path_cost(const CoveringPath& path, const CostParams& p) {
  return p.alpha * to_double(path.length()) + p.beta * static_cast<double>(path.stop_count());
}

}  // namespace gridcover
