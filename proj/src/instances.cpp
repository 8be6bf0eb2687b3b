#include "gridcover/instances.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "gridcover/error.hpp"

namespace gridcover {

namespace {

constexpr std::int64_t kMaxSide = 40;

Grid random_rectangle(std::mt19937_64& rng, std::int64_t max_area) {
  const std::int64_t w = draw(rng, 1, std::min(max_area, kMaxSide));
  const std::int64_t h = draw(rng, 1, std::min(std::max<std::int64_t>(1, max_area / w), kMaxSide));
  return make_rectangle(w, h);
}

std::vector<Cell> grow_blob(std::mt19937_64& rng, std::int64_t target) {
  std::vector<Cell> cells{{0, 0}};
  std::set<Cell> present{{0, 0}};
  constexpr std::array<std::pair<int, int>, 4> steps{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};
  while (static_cast<std::int64_t>(cells.size()) < target) {
    const Cell& base = cells[static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(cells.size()) - 1))];
    const auto& [dx, dy] = steps[static_cast<std::size_t>(draw(rng, 0, 3))];
    Cell next{base.i + dx, base.j + dy};
    if (present.insert(next).second) cells.push_back(next);
  }
  return cells;
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::rectangle: return "rectangle";
    case Family::cross: return "cross";
    case Family::blob: return "blob";
    case Family::u_shape: return "ushape";
    case Family::ring: return "ring";
    case Family::holey_blob: return "holeyblob";
  }
  return "unknown";
}

std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  if (hi < lo) fail(ErrorCode::domain, "empty draw range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

Grid random_grid(Family family, std::mt19937_64& rng, std::int64_t max_area) {
  if (max_area < 1) fail(ErrorCode::domain, "max_area must be at least 1");
  switch (family) {
    case Family::rectangle:
      return random_rectangle(rng, max_area);
    case Family::cross:
      return make_cross(draw(rng, 0, std::min<std::int64_t>((max_area - 1) / 4, 30)));
    case Family::blob:
      return Grid(grow_blob(rng, draw(rng, 1, max_area)));
    case Family::u_shape: {
      if (max_area < 5) return random_rectangle(rng, max_area);
      const std::int64_t w = draw(rng, 3, std::min<std::int64_t>(kMaxSide, std::max<std::int64_t>(3, max_area / 2)));
      const std::int64_t h = draw(rng, 2, std::min(kMaxSide, std::max<std::int64_t>(2, max_area / w)));
      if (w * h - (w - 2) * (h - 1) > max_area) return random_rectangle(rng, max_area);
      std::int64_t depth = draw(rng, 1, h - 1);
      while (w * h - (w - 2) * depth > max_area) ++depth;
      std::vector<Cell> cells;
      for (std::int64_t i = 0; i < w; ++i)
        for (std::int64_t j = 0; j < h; ++j)
          if (i == 0 || i == w - 1 || j < h - depth) cells.push_back({i, j});
      return Grid(std::move(cells));
    }
    case Family::ring: {
      if (max_area < 8) return random_rectangle(rng, max_area);
      std::int64_t w = 0, h = 0, hw = 0, hh = 0;
      for (int attempt = 0; attempt < 64; ++attempt) {
        w = draw(rng, 3, std::min<std::int64_t>(kMaxSide, max_area));
        h = draw(rng, 3, std::min<std::int64_t>(kMaxSide, std::max<std::int64_t>(3, max_area)));
        hw = draw(rng, 1, w - 2);
        hh = draw(rng, 1, h - 2);
        if (w * h - hw * hh <= max_area) break;
        w = 3;
        h = 3;
        hw = hh = 1;
      }
      const std::int64_t hx = draw(rng, 1, w - 1 - hw);
      const std::int64_t hy = draw(rng, 1, h - 1 - hh);
      std::vector<Cell> cells;
      for (std::int64_t i = 0; i < w; ++i)
        for (std::int64_t j = 0; j < h; ++j)
          if (i < hx || i >= hx + hw || j < hy || j >= hy + hh) cells.push_back({i, j});
      return Grid(std::move(cells));
    }
    case Family::holey_blob: {
      auto cells = grow_blob(rng, draw(rng, std::min<std::int64_t>(max_area, 9), max_area));
      std::set<Cell> present(cells.begin(), cells.end());
      std::vector<Cell> interior;
      for (const auto& c : cells) {
        bool surrounded = true;
        for (std::int64_t di = -1; di <= 1 && surrounded; ++di)
          for (std::int64_t dj = -1; dj <= 1 && surrounded; ++dj)
            if (!present.contains({c.i + di, c.j + dj})) surrounded = false;
        if (surrounded) interior.push_back(c);
      }
      const std::int64_t holes = interior.empty() ? 0 : draw(rng, 1, 3);
      for (std::int64_t h = 0; h < holes && !interior.empty(); ++h) {
        const auto idx = static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(interior.size()) - 1));
        const Cell victim = interior[idx];
        interior.erase(interior.begin() + static_cast<std::ptrdiff_t>(idx));
        bool still_surrounded = true;
        for (std::int64_t di = -1; di <= 1; ++di)
          for (std::int64_t dj = -1; dj <= 1; ++dj)
            if ((di != 0 || dj != 0) && !present.contains({victim.i + di, victim.j + dj})) still_surrounded = false;
        if (still_surrounded && present.size() > 1) present.erase(victim);
      }
      return Grid(std::vector<Cell>(present.begin(), present.end()));
    }
  }
  fail(ErrorCode::domain, "unknown grid family");
}

std::vector<RatioInstance> benchmark_instances(std::uint64_t seed, std::size_t count, std::int64_t max_area) {
  constexpr std::array<Family, 6> families{Family::rectangle, Family::cross,  Family::blob,
                                           Family::u_shape,   Family::ring,   Family::holey_blob};
  std::vector<RatioInstance> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t instance_seed = seed + i;
    std::mt19937_64 rng(instance_seed);
    const Family family = families[i % families.size()];
    out.push_back(RatioInstance{to_string(family) + "_" + std::to_string(i), instance_seed,
                                random_grid(family, rng, max_area)});
  }
  return out;
}

}  // namespace gridcover
