#pragma once

#include <string>
#include <string_view>

#include "gridcover/bounds.hpp"
#include "gridcover/grid.hpp"
#include "gridcover/path.hpp"
#include "gridcover/stops.hpp"
#include "gridcover/verify.hpp"

namespace gridcover {

// {"squares":[[i,j],...],"area":A,"perimeter":P,"convex":bool}, squares sorted.
std::string grid_to_json(const Grid& g);
// Accepts the JSON form above (only "squares" is read) or an ASCII mask.
Grid read_grid(std::string_view text);
// ASCII mask covering the bounding box, top row first.
std::string grid_to_mask(const Grid& g);

std::string bounds_to_json(const BoundsProfile& b);

// {d, s, anchor, c_in:[[x,y],...], projected:[{stop, source, diamond_index}]}
// with every rational written as a "p/q" string.
std::string stop_set_to_json(const StopSet& ss);

// {method, d, stops:[[x,y],...], L, T, cost, L_exact}; stop coordinates are
// "p/q" strings so the path can be re-read exactly.
std::string path_to_json(const CoveringPath& path, const CostParams& p);
// Coordinates may be "p/q" strings or JSON numbers.
CoveringPath path_from_json(std::string_view text);

std::string coverage_to_json(const CoverageReport& r);
std::string audit_to_json(const AuditReport& r);

}  // namespace gridcover
