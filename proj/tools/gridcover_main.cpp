#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "gridcover/gridcover.h"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitSoftware = 70;
constexpr int kExitIo = 74;
constexpr int kExitFailed = 1;

struct Failure {
  int code;
  std::string message;
};

struct StringDeleter {
  void operator()(char* s) const { gc_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct GridDeleter {
  void operator()(gc_grid* g) const { gc_grid_free(g); }
};
using GridHandle = std::unique_ptr<gc_grid, GridDeleter>;

struct ConstructionDeleter {
  void operator()(gc_construction* c) const { gc_construction_free(c); }
};
using ConstructionHandle = std::unique_ptr<gc_construction, ConstructionDeleter>;

int exit_code_for(gc_status st) {
  switch (st) {
    case GC_OK: return 0;
    case GC_ERR_PARSE: return kExitData;
    case GC_ERR_DOMAIN:
    case GC_ERR_ARGUMENT: return kExitUsage;
    case GC_ERR_IO: return kExitIo;
    case GC_ERR_INTERNAL: return kExitSoftware;
    default: return kExitFailed;
  }
}

void check(gc_status st, const std::string& context) {
  if (st != GC_OK) throw Failure{exit_code_for(st), context + ": " + gc_last_error()};
}

std::string take(char* s) {
  OwnedString owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitIo, "cannot open " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Failure{kExitIo, "error reading " + path};
  return buf.str();
}

// "-" or empty writes to stdout.
void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw Failure{kExitIo, "error writing to stdout"};
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Failure{kExitIo, "cannot open " + path + " for writing"};
  out << text;
  out.close();
  if (!out) throw Failure{kExitIo, "error writing " + path};
}

std::string with_newline(std::string s) {
  if (s.empty() || s.back() != '\n') s.push_back('\n');
  return s;
}

struct CostFlags {
  std::string k = "1";
  double alpha = 1;
  double beta = 1;

  gc_params params() const { return gc_params{k.c_str(), alpha, beta}; }
};

void add_cost_flags(CLI::App* cmd, CostFlags& f) {
  cmd->add_option("--k", f.k, "coverage radius (rational, e.g. 1, 3/2, 0.5)")->capture_default_str();
  cmd->add_option("--alpha", f.alpha, "cost per unit of travel")->capture_default_str();
  cmd->add_option("--beta", f.beta, "cost per stop")->capture_default_str();
}

void validate_params(const CostFlags& f) {
  const gc_params p = f.params();
  check(gc_params_check(&p), "invalid parameters");
}

GridHandle load_grid(const std::string& path) {
  const std::string text = read_file(path);
  gc_grid* g = nullptr;
  check(gc_grid_parse(text.c_str(), &g), path);
  return GridHandle(g);
}

std::optional<std::uint64_t> env_seed() {
  const char* raw = std::getenv("GRIDCOVER_SEED");
  if (!raw || !*raw) return std::nullopt;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(raw, &used);
    if (used != std::string(raw).size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw Failure{kExitUsage, std::string("GRIDCOVER_SEED is not an unsigned integer: ") + raw};
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Covering paths over grid regions: bounds, construction, verification, oracle, benchmarks."};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(gc_version()));

  // bounds
  CostFlags bounds_cost;
  std::string bounds_grid, bounds_out;
  std::int64_t bounds_area = -1, bounds_perimeter = 0;
  auto* bounds = app.add_subcommand("bounds", "print the optimal-spacing profile and cost bounds");
  add_cost_flags(bounds, bounds_cost);
  auto* bounds_grid_opt = bounds->add_option("--grid", bounds_grid, "grid file (ASCII mask or JSON)");
  bounds->add_option("--area", bounds_area, "area A, when no grid is given")->excludes(bounds_grid_opt)->check(CLI::NonNegativeNumber);
  bounds->add_option("--perimeter", bounds_perimeter, "perimeter P, when no grid is given")->excludes(bounds_grid_opt)->check(CLI::NonNegativeNumber);
  bounds->add_option("-o,--out", bounds_out, "output file (default stdout)");
  bounds->add_flag("--json", "JSON output (the only format; accepted for compatibility)");

  // construct
  CostFlags cons_cost;
  std::string cons_grid, cons_out, cons_svg, cons_stops, cons_audit, cons_d;
  int cons_phase = 1;
  auto* cons = app.add_subcommand("construct", "build a covering path and write it as JSON");
  add_cost_flags(cons, cons_cost);
  cons->add_option("--grid", cons_grid, "grid file")->required();
  cons->add_option("--d", cons_d, "override the stop spacing d (0 < d <= 2k)");
  cons->add_option("--phase-scan,--scan-phase", cons_phase, "lattice translations tried per axis")->check(CLI::Range(1, 16))->capture_default_str();
  cons->add_option("-o,--out", cons_out, "path JSON output (default stdout)");
  cons->add_option("--svg", cons_svg, "also write an SVG rendering");
  cons->add_option("--stops", cons_stops, "also write the stop set JSON");
  cons->add_option("--audit", cons_audit, "also write the bound audit JSON");

  // verify
  std::string ver_grid, ver_path, ver_k = "1", ver_h, ver_out;
  int ver_halvings = 2;
  bool ver_sampled_only = false;
  auto* ver = app.add_subcommand("verify", "certify that a path's stops cover the grid");
  ver->add_option("--grid", ver_grid, "grid file")->required();
  ver->add_option("--path", ver_path, "path JSON file")->required();
  ver->add_option("--k", ver_k, "coverage radius")->capture_default_str();
  ver->set_help_flag("--help", "Print this help message and exit");
  ver->add_option("--h", ver_h, "initial sample spacing (default k/16)");
  ver->add_option("--halvings", ver_halvings, "extra passes at h/2, h/4, ...")->check(CLI::Range(0, 8))->capture_default_str();
  ver->add_flag("--sampled-only", ver_sampled_only, "report inconclusive instead of running the exact check");
  ver->add_option("-o,--out", ver_out, "report JSON output (default stdout)");

  // oracle
  CostFlags orc_cost;
  std::string orc_grid, orc_out, orc_spacing = "1/2";
  std::size_t orc_max_candidates = 24, orc_max_subset = 10;
  auto* orc = app.add_subcommand("oracle", "lattice-restricted optimum by exhaustive search (tiny grids)");
  add_cost_flags(orc, orc_cost);
  orc->add_option("--grid", orc_grid, "grid file")->required();
  orc->add_option("--spacing", orc_spacing, "candidate lattice spacing")->capture_default_str();
  orc->add_option("--max-candidates", orc_max_candidates, "abort above this many candidates")->check(CLI::Range(1, 64))->capture_default_str();
  orc->add_option("--max-subset", orc_max_subset, "largest stop subset tried")->check(CLI::Range(1, 20))->capture_default_str();
  orc->add_option("-o,--out", orc_out, "path JSON output (default stdout)");

  // benchmark
  CostFlags bench_cost;
  std::optional<std::uint64_t> bench_seed;
  std::size_t bench_count = 100;
  std::int64_t bench_max_area = 400;
  int bench_workers = 0;
  std::string bench_csv, bench_json, bench_spacing = "1/2";
  auto* bench = app.add_subcommand("benchmark", "seeded random grids, construction vs bounds vs oracle");
  add_cost_flags(bench, bench_cost);
  bench->add_option("--seed", bench_seed, "instance seed (default: GRIDCOVER_SEED, else 1)");
  bench->add_option("--count", bench_count, "number of instances")->capture_default_str();
  bench->add_option("--max-area", bench_max_area, "largest generated area")->check(CLI::Range(std::int64_t{1}, std::int64_t{100000}))->capture_default_str();
  bench->add_option("--workers", bench_workers, "worker threads (0: hardware concurrency)")->check(CLI::Range(0, 256))->capture_default_str();
  bench->add_option("--oracle-spacing", bench_spacing, "oracle candidate spacing")->capture_default_str();
  bench->add_option("--csv", bench_csv, "CSV output (default stdout)");
  bench->add_option("--json", bench_json, "also write per-instance JSON");

  // render
  CostFlags ren_cost;
  std::string ren_grid, ren_path, ren_out, ren_d;
  double ren_scale = 32;
  auto* ren = app.add_subcommand("render", "SVG of the grid, lattice cells, stops and path");
  add_cost_flags(ren, ren_cost);
  ren->add_option("--grid", ren_grid, "grid file")->required();
  ren->add_option("--path", ren_path, "draw this path JSON instead of constructing one");
  ren->add_option("--d", ren_d, "stop spacing for the construction");
  ren->add_option("--scale", ren_scale, "pixels per unit")->check(CLI::Range(1.0, 1000.0))->capture_default_str();
  ren->add_option("-o,--out", ren_out, "SVG output (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (bounds->parsed()) {
      validate_params(bounds_cost);
      if (bounds_grid.empty() && bounds_area < 0) throw Failure{kExitUsage, "bounds needs --grid or --area"};
      const gc_params p = bounds_cost.params();
      GridHandle g;
      if (!bounds_grid.empty()) g = load_grid(bounds_grid);
      char* out = nullptr;
      check(gc_bounds_json(&p, g.get(), bounds_area, bounds_perimeter, &out), "bounds");
      write_output(bounds_out, with_newline(take(out)));
      return 0;
    }

    if (cons->parsed()) {
      validate_params(cons_cost);
      auto g = load_grid(cons_grid);
      const gc_params p = cons_cost.params();
      const gc_construct_options opt{cons_d.empty() ? nullptr : cons_d.c_str(), cons_phase};
      gc_construction* raw = nullptr;
      check(gc_construct(g.get(), &p, &opt, &raw), "construct");
      ConstructionHandle c(raw);
      char* out = nullptr;
      check(gc_construction_path_json(c.get(), &out), "construct");
      write_output(cons_out, with_newline(take(out)));
      if (!cons_svg.empty()) {
        check(gc_construction_svg(c.get(), 32, &out), "render");
        write_output(cons_svg, take(out));
      }
      if (!cons_stops.empty()) {
        check(gc_construction_stops_json(c.get(), &out), "stops");
        write_output(cons_stops, with_newline(take(out)));
      }
      if (!cons_audit.empty()) {
        check(gc_construction_audit_json(c.get(), &out), "audit");
        write_output(cons_audit, with_newline(take(out)));
      }
      return 0;
    }

    if (ver->parsed()) {
      const gc_params p{ver_k.c_str(), 1.0, 0.0};
      check(gc_params_check(&p), "invalid parameters");
      auto g = load_grid(ver_grid);
      const std::string path = read_file(ver_path);
      const gc_verify_options opt{ver_h.empty() ? nullptr : ver_h.c_str(), ver_halvings, ver_sampled_only ? 0 : 1};
      gc_coverage result = GC_INCONCLUSIVE;
      char* out = nullptr;
      check(gc_verify(g.get(), path.c_str(), ver_k.c_str(), &opt, &result, &out), "verify");
      write_output(ver_out, with_newline(take(out)));
      return static_cast<int>(result);
    }

    if (orc->parsed()) {
      validate_params(orc_cost);
      auto g = load_grid(orc_grid);
      const gc_params p = orc_cost.params();
      const gc_oracle_options opt{orc_spacing.c_str(), orc_max_candidates, orc_max_subset};
      char* out = nullptr;
      check(gc_oracle(g.get(), &p, &opt, &out), "oracle");
      write_output(orc_out, with_newline(take(out)));
      return 0;
    }

    if (bench->parsed()) {
      validate_params(bench_cost);
      std::uint64_t seed = 1;
      if (bench_seed) {
        seed = *bench_seed;
      } else if (auto from_env = env_seed()) {
        seed = *from_env;
      }
      int workers = bench_workers;
      if (workers == 0) workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
      const gc_params p = bench_cost.params();
      const gc_oracle_options opt{bench_spacing.c_str(), 24, 10};
      char* csv = nullptr;
      char* json = nullptr;
      check(gc_benchmark(seed, bench_count, bench_max_area, &p, &opt, workers, &csv, bench_json.empty() ? nullptr : &json),
            "benchmark");
      const std::string csv_text = take(csv);
      const std::string json_text = take(json);
      write_output(bench_csv, csv_text);
      if (!bench_json.empty()) write_output(bench_json, json_text);
      return 0;
    }

    if (ren->parsed()) {
      validate_params(ren_cost);
      auto g = load_grid(ren_grid);
      char* out = nullptr;
      if (!ren_path.empty()) {
        const std::string path = read_file(ren_path);
        check(gc_render_svg(g.get(), path.c_str(), ren_scale, &out), "render");
      } else {
        const gc_params p = ren_cost.params();
        const gc_construct_options opt{ren_d.empty() ? nullptr : ren_d.c_str(), 1};
        gc_construction* raw = nullptr;
        check(gc_construct(g.get(), &p, &opt, &raw), "construct");
        ConstructionHandle c(raw);
        check(gc_construction_svg(c.get(), ren_scale, &out), "render");
      }
      write_output(ren_out, take(out));
      return 0;
    }
  } catch (const Failure& f) {
    std::cerr << "gridcover: " << f.message << '\n';
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "gridcover: " << e.what() << '\n';
    return kExitSoftware;
  }
  return kExitUsage;
}
