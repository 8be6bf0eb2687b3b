#include "gridcover/gridcover.h"

#include <cstring>
#include <json.hpp>
#include <new>
#include <string>

#include "gridcover/error.hpp"
#include "gridcover/format.hpp"
#include "gridcover/instances.hpp"
#include "gridcover/oracle.hpp"
#include "gridcover/pathgen.hpp"
#include "gridcover/render.hpp"
#include "gridcover/serialize.hpp"
#include "gridcover/verify.hpp"

struct gc_grid {
  gridcover::Grid grid;
};

struct gc_construction {
  gridcover::Grid grid;
  gridcover::CostParams params;
  gridcover::Construction result;
};

namespace {

thread_local std::string last_error;

gc_status status_of(gridcover::ErrorCode code) {
  using gridcover::ErrorCode;
  switch (code) {
    case ErrorCode::parse: return GC_ERR_PARSE;
    case ErrorCode::domain: return GC_ERR_DOMAIN;
    case ErrorCode::precondition: return GC_ERR_PRECONDITION;
    case ErrorCode::too_large: return GC_ERR_TOO_LARGE;
    case ErrorCode::infeasible: return GC_ERR_INFEASIBLE;
    case ErrorCode::io: return GC_ERR_IO;
    case ErrorCode::internal: return GC_ERR_INTERNAL;
  }
  return GC_ERR_INTERNAL;
}

char* copy_out(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

gridcover::CostParams params_of(const gc_params* p) {
  require(p != nullptr, "params must not be NULL");
  gridcover::CostParams out;
  if (p->k) out.k = gridcover::parse_rational(p->k);
  out.alpha = p->alpha;
  out.beta = p->beta;
  out.validate();
  return out;
}

gridcover::OracleConfig oracle_config_of(const gc_oracle_options* o) {
  gridcover::OracleConfig cfg;
  if (!o) return cfg;
  if (o->spacing) cfg.spacing = gridcover::parse_rational(o->spacing);
  if (o->max_candidates) cfg.max_candidates = o->max_candidates;
  if (o->max_subset) cfg.max_subset = o->max_subset;
  return cfg;
}

}  // namespace

#define GC_TRY \
  last_error.clear(); \
  try {

#define GC_CATCH \
  } \
  catch (const gridcover::Error& e) { \
    last_error = e.what(); \
    return status_of(e.code()); \
  } \
  catch (const std::invalid_argument& e) { \
    last_error = e.what(); \
    return GC_ERR_ARGUMENT; \
  } \
  catch (const std::bad_alloc&) { \
    last_error = "out of memory"; \
    return GC_ERR_INTERNAL; \
  } \
  catch (const std::exception& e) { \
    last_error = e.what(); \
    return GC_ERR_INTERNAL; \
  } \
  catch (...) { \
    last_error = "unknown error"; \
    return GC_ERR_INTERNAL; \
  } \
  return GC_OK;

extern "C" {

const char* gc_last_error(void) { return last_error.c_str(); }

const char* gc_version(void) { return "1.0.0"; }

void gc_string_free(char* s) { delete[] s; }

gc_status gc_params_check(const gc_params* p) {
  GC_TRY
  params_of(p);
  GC_CATCH
}

gc_status gc_grid_parse(const char* text, gc_grid** out) {
  GC_TRY
  require(text && out, "text and out must not be NULL");
  *out = new gc_grid{gridcover::read_grid(text)};
  GC_CATCH
}

gc_status gc_grid_cross(int64_t n, gc_grid** out) {
  GC_TRY
  require(out != nullptr, "out must not be NULL");
  *out = new gc_grid{gridcover::make_cross(n)};
  GC_CATCH
}

gc_status gc_grid_rectangle(int64_t width, int64_t height, gc_grid** out) {
  GC_TRY
  require(out != nullptr, "out must not be NULL");
  *out = new gc_grid{gridcover::make_rectangle(width, height)};
  GC_CATCH
}

void gc_grid_free(gc_grid* g) { delete g; }

int64_t gc_grid_area(const gc_grid* g) { return g ? g->grid.area() : 0; }

int64_t gc_grid_perimeter(const gc_grid* g) { return g ? g->grid.perimeter() : 0; }

int gc_grid_is_convex(const gc_grid* g) { return g && g->grid.is_convex() ? 1 : 0; }

gc_status gc_grid_json(const gc_grid* g, char** out) {
  GC_TRY
  require(g && out, "grid and out must not be NULL");
  *out = copy_out(gridcover::grid_to_json(g->grid));
  GC_CATCH
}

gc_status gc_grid_mask(const gc_grid* g, char** out) {
  GC_TRY
  require(g && out, "grid and out must not be NULL");
  *out = copy_out(gridcover::grid_to_mask(g->grid));
  GC_CATCH
}

gc_status gc_bounds_json(const gc_params* p, const gc_grid* g, int64_t area, int64_t perimeter, char** out) {
  GC_TRY
  require(out != nullptr, "out must not be NULL");
  const auto params = params_of(p);
  if (g) {
    area = g->grid.area();
    perimeter = g->grid.perimeter();
  }
  *out = copy_out(gridcover::bounds_to_json(gridcover::optimal_profile(params, area, perimeter)));
  GC_CATCH
}

gc_status gc_construct(const gc_grid* g, const gc_params* p, const gc_construct_options* options,
                       gc_construction** out) {
  GC_TRY
  require(g && out, "grid and out must not be NULL");
  const auto params = params_of(p);
  gridcover::ConstructOptions opt;
  if (options) {
    if (options->d) opt.d = gridcover::parse_rational(options->d);
    if (options->phase_scan < 1) gridcover::fail(gridcover::ErrorCode::domain, "phase scan must be at least 1");
    opt.phase_scan = options->phase_scan;
  }
  auto result = gridcover::construct(g->grid, params, opt);
  *out = new gc_construction{g->grid, params, std::move(result)};
  GC_CATCH
}

void gc_construction_free(gc_construction* c) { delete c; }

double gc_construction_cost(const gc_construction* c) { return c ? c->result.cost : 0.0; }

gc_status gc_construction_path_json(const gc_construction* c, char** out) {
  GC_TRY
  require(c && out, "construction and out must not be NULL");
  *out = copy_out(gridcover::path_to_json(c->result.path, c->params));
  GC_CATCH
}

gc_status gc_construction_stops_json(const gc_construction* c, char** out) {
  GC_TRY
  require(c && out, "construction and out must not be NULL");
  *out = copy_out(c->result.stop_set ? gridcover::stop_set_to_json(*c->result.stop_set) : std::string("null"));
  GC_CATCH
}

gc_status gc_construction_audit_json(const gc_construction* c, char** out) {
  GC_TRY
  require(c && out, "construction and out must not be NULL");
  const auto& r = c->result;
  const auto report = gridcover::audit(c->grid, c->params, r.path, r.stop_set ? &*r.stop_set : nullptr, r.tree_length);
  *out = copy_out(gridcover::audit_to_json(report));
  GC_CATCH
}

gc_status gc_construction_svg(const gc_construction* c, double scale, char** out) {
  GC_TRY
  require(c && out, "construction and out must not be NULL");
  gridcover::RenderOptions opt;
  if (scale > 0) opt.scale = scale;
  const auto& r = c->result;
  *out = copy_out(gridcover::render_svg(c->grid, r.stop_set ? &*r.stop_set : nullptr, &r.path, opt));
  GC_CATCH
}

gc_status gc_verify(const gc_grid* g, const char* path_json, const char* k, const gc_verify_options* options,
                    gc_coverage* result, char** report_json) {
  GC_TRY
  require(g && path_json && k && result, "grid, path, k and result must not be NULL");
  const auto path = gridcover::path_from_json(path_json);
  const auto kk = gridcover::parse_rational(k);
  if (kk <= 0) gridcover::fail(gridcover::ErrorCode::domain, "k must be positive");
  gridcover::CertifyOptions opt;
  if (options) {
    if (options->h) opt.h = gridcover::parse_rational(options->h);
    if (options->halvings < 0) gridcover::fail(gridcover::ErrorCode::domain, "halvings must be non-negative");
    opt.halvings = options->halvings;
    opt.exact_fallback = options->exact_fallback != 0;
  }
  const auto report = gridcover::certify_coverage(g->grid, path.stops, kk, opt);
  switch (report.status) {
    case gridcover::CoverageStatus::certified: *result = GC_COVERED; break;
    case gridcover::CoverageStatus::counterexample: *result = GC_COUNTEREXAMPLE; break;
    case gridcover::CoverageStatus::inconclusive: *result = GC_INCONCLUSIVE; break;
  }
  if (report_json) *report_json = copy_out(gridcover::coverage_to_json(report));
  GC_CATCH
}

gc_status gc_audit_path(const gc_grid* g, const gc_params* p, const char* path_json, char** out) {
  GC_TRY
  require(g && path_json && out, "grid, path and out must not be NULL");
  const auto params = params_of(p);
  const auto path = gridcover::path_from_json(path_json);
  *out = copy_out(gridcover::audit_to_json(gridcover::audit(g->grid, params, path)));
  GC_CATCH
}

gc_status gc_oracle(const gc_grid* g, const gc_params* p, const gc_oracle_options* options, char** path_json) {
  GC_TRY
  require(g && path_json, "grid and out must not be NULL");
  const auto params = params_of(p);
  const auto path = gridcover::solve_exact(g->grid, params, oracle_config_of(options));
  *path_json = copy_out(gridcover::path_to_json(path, params));
  GC_CATCH
}

gc_status gc_benchmark(uint64_t seed, size_t count, int64_t max_area, const gc_params* p,
                       const gc_oracle_options* oracle, int workers, char** csv, char** json) {
  GC_TRY
  const auto params = params_of(p);
  const auto instances = gridcover::benchmark_instances(seed, count, max_area);
  const auto rows = gridcover::ratio_study(instances, params, oracle_config_of(oracle), workers);
  if (csv) *csv = copy_out(gridcover::ratio_csv(rows));
  if (json) {
    using Json = nlohmann::ordered_json;
    auto opt = [](const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); };
    Json doc;
    doc["seed"] = seed;
    doc["count"] = count;
    doc["max_area"] = max_area;
    doc["k"] = gridcover::to_fraction_string(params.k);
    doc["alpha"] = params.alpha;
    doc["beta"] = params.beta;
    Json items = Json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      Json item;
      item["instance"] = r.instance;
      item["seed"] = r.seed;
      item["grid"] = Json::parse(gridcover::grid_to_json(instances[i].grid));
      item["d"] = r.d;
      item["lower"] = r.lower;
      item["oracle"] = opt(r.oracle);
      item["oracle_error"] = r.oracle_error.empty() ? Json(nullptr) : Json(r.oracle_error);
      item["constructed"] = opt(r.constructed);
      item["construct_error"] = r.construct_error.empty() ? Json(nullptr) : Json(r.construct_error);
      item["ratio_lower"] = opt(r.ratio_lower);
      item["ratio_oracle"] = opt(r.ratio_oracle);
      items.push_back(std::move(item));
    }
    doc["instances"] = std::move(items);
    *json = copy_out(doc.dump(2) + "\n");
  }
  GC_CATCH
}

gc_status gc_render_svg(const gc_grid* g, const char* path_json, double scale, char** out) {
  GC_TRY
  require(g && out, "grid and out must not be NULL");
  gridcover::RenderOptions opt;
  if (scale > 0) opt.scale = scale;
  if (path_json) {
    const auto path = gridcover::path_from_json(path_json);
    *out = copy_out(gridcover::render_svg(g->grid, nullptr, &path, opt));
  } else {
    *out = copy_out(gridcover::render_svg(g->grid, nullptr, nullptr, opt));
  }
  GC_CATCH
}

}  // extern "C"
