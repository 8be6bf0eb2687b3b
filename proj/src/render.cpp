#include "gridcover/render.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "gridcover/error.hpp"
#include "gridcover/format.hpp"

namespace gridcover {

namespace {

constexpr double kMarginUnits = 1.0;

struct Frame {
  double min_x, min_y, max_x, max_y, scale;
  double px(double x) const { return (x - min_x) * scale; }
  double py(double y) const { return (max_y - y) * scale; }
};

std::string num(double v) { return format_number(std::round(v * 100) / 100); }

// Index of the nearest lattice center, searched among the neighbors of the
// traversal and row the point falls in.
std::pair<std::int64_t, std::int64_t> nearest_center(const StopLattice& lat, double x, double y) {
  const double ax = to_double(lat.anchor.x), ay = to_double(lat.anchor.y);
  const double s = to_double(lat.s), d = to_double(lat.d);
  const auto m0 = static_cast<std::int64_t>(std::floor((x - ax) / s));
  std::pair<std::int64_t, std::int64_t> best{0, 0};
  double best_dist = std::numeric_limits<double>::infinity();
  for (std::int64_t m = m0 - 1; m <= m0 + 2; ++m) {
    const double cx = ax + static_cast<double>(m) * s;
    const double off = (m % 2 != 0) ? d / 2 : 0;
    const auto n0 = static_cast<std::int64_t>(std::floor((y - ay - off) / d));
    for (std::int64_t n = n0 - 1; n <= n0 + 2; ++n) {
      const double cy = ay + off + static_cast<double>(n) * d;
      const double dist = std::abs(x - cx) + std::abs(y - cy);
      if (dist < best_dist) {
        best_dist = dist;
        best = {m, n};
      }
    }
  }
  return best;
}

}  // namespace

std::string render_svg(const Grid& g, const StopSet* stops, const CoveringPath* path, const RenderOptions& opt) {
  if (!(opt.scale > 0)) fail(ErrorCode::domain, "render scale must be positive");
  const Box& box = g.bounding_box();
  Frame fr{static_cast<double>(box.min_i) - kMarginUnits, static_cast<double>(box.min_j) - kMarginUnits,
           static_cast<double>(box.max_i + 1) + kMarginUnits, static_cast<double>(box.max_j + 1) + kMarginUnits,
           opt.scale};
  auto widen = [&](const Point& p) {
    fr.min_x = std::min(fr.min_x, to_double(p.x) - kMarginUnits);
    fr.max_x = std::max(fr.max_x, to_double(p.x) + kMarginUnits);
    fr.min_y = std::min(fr.min_y, to_double(p.y) - kMarginUnits);
    fr.max_y = std::max(fr.max_y, to_double(p.y) + kMarginUnits);
  };
  if (path)
    for (const auto& p : path->stops) widen(p);
  if (stops)
    for (const auto& c : stops->c_in) widen(c.p);

  std::ostringstream out;
  const double width = (fr.max_x - fr.min_x) * fr.scale;
  const double height = (fr.max_y - fr.min_y) * fr.scale;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
      << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  out << "<g id=\"grid\" fill=\"#d8e4f0\" stroke=\"#7f9db9\" stroke-width=\"1\">\n";
  for (const auto& c : g.cells()) {
    out << "<rect x=\"" << num(fr.px(static_cast<double>(c.i))) << "\" y=\"" << num(fr.py(static_cast<double>(c.j + 1)))
        << "\" width=\"" << num(fr.scale) << "\" height=\"" << num(fr.scale) << "\"/>\n";
  }
  out << "</g>\n";

  if (stops && opt.show_cells) {
    const StopLattice& lat = stops->lattice;
    const double h = opt.cell_sampling > 0 ? opt.cell_sampling : to_double(lat.k) / 32;
    const auto nx = static_cast<std::int64_t>(std::ceil((fr.max_x - fr.min_x) / h));
    const auto ny = static_cast<std::int64_t>(std::ceil((fr.max_y - fr.min_y) / h));
    if (nx * ny > 4'000'000) fail(ErrorCode::too_large, "cell sampling too fine for this drawing");
    std::vector<std::pair<std::int64_t, std::int64_t>> row_prev(static_cast<std::size_t>(nx + 1));
    out << "<g id=\"cells\" fill=\"#5a5a5a\">\n";
    const double dot = std::max(1.0, h * fr.scale);
    for (std::int64_t b = 0; b <= ny; ++b) {
      const double y = fr.min_y + static_cast<double>(b) * h;
      std::pair<std::int64_t, std::int64_t> left{};
      for (std::int64_t a = 0; a <= nx; ++a) {
        const double x = fr.min_x + static_cast<double>(a) * h;
        const auto here = nearest_center(lat, x, y);
        const bool edge = (a > 0 && here != left) || (b > 0 && here != row_prev[static_cast<std::size_t>(a)]);
        if (edge) {
          out << "<rect x=\"" << num(fr.px(x) - dot / 2) << "\" y=\"" << num(fr.py(y) - dot / 2) << "\" width=\""
              << num(dot) << "\" height=\"" << num(dot) << "\"/>\n";
        }
        left = here;
        row_prev[static_cast<std::size_t>(a)] = here;
      }
    }
    out << "</g>\n";
  }

  if (path && path->stops.size() > 1) {
    out << "<g id=\"path\" fill=\"none\" stroke=\"#202020\" stroke-width=\"1.5\">\n<polyline points=\"";
    for (std::size_t i = 0; i < path->stops.size(); ++i) {
      if (i) out << ' ';
      out << num(fr.px(to_double(path->stops[i].x))) << ',' << num(fr.py(to_double(path->stops[i].y)));
    }
    out << "\"/>\n</g>\n";
  }

  const double r = std::max(2.0, fr.scale / 10);
  out << "<g id=\"stops\">\n";
  if (stops) {
    for (const auto& c : stops->c_in) {
      out << "<circle cx=\"" << num(fr.px(to_double(c.p.x))) << "\" cy=\"" << num(fr.py(to_double(c.p.y))) << "\" r=\""
          << num(r) << "\" fill=\"#1f6fb4\"/>\n";
    }
    for (const auto& ps : stops->projected) {
      out << "<circle cx=\"" << num(fr.px(to_double(ps.stop.x))) << "\" cy=\"" << num(fr.py(to_double(ps.stop.y)))
          << "\" r=\"" << num(r) << "\" fill=\"#d9480f\"/>\n";
    }
  } else if (path) {
    for (const auto& p : path->stops) {
      out << "<circle cx=\"" << num(fr.px(to_double(p.x))) << "\" cy=\"" << num(fr.py(to_double(p.y))) << "\" r=\""
          << num(r) << "\" fill=\"#1f6fb4\"/>\n";
    }
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace gridcover
