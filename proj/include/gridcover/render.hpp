#pragma once

#include <string>

#include "gridcover/grid.hpp"
#include "gridcover/path.hpp"
#include "gridcover/stops.hpp"

namespace gridcover {

struct RenderOptions {
  double scale = 32;         // pixels per unit
  double cell_sampling = 0;  // spacing for lattice-cell boundaries; 0 picks k/32
  bool show_cells = true;
};

// Layers, bottom to top: grid, lattice cells, stops (C_in and projected in
// different colors), path. Cell boundaries are found by sampling nearest
// centers in floating point and are for display only.
std::string render_svg(const Grid& g, const StopSet* stops, const CoveringPath* path, const RenderOptions& opt = {});

}  // namespace gridcover
