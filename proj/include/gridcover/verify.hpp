#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gridcover/bounds.hpp"
#include "gridcover/grid.hpp"
#include "gridcover/path.hpp"
#include "gridcover/stops.hpp"

namespace gridcover {

enum class CoverageStatus { certified, counterexample, inconclusive };

std::string to_string(CoverageStatus s);

struct CoverageReport {
  CoverageStatus status = CoverageStatus::inconclusive;
  double max_observed_distance = 0;
  Rational sample_spacing;  // effective spacing, 1/ceil(1/h) <= h
  std::optional<Point> counterexample;
  double margin = 0;        // k - max_observed_distance
  bool exact = false;       // settled by the exact region sweep

  bool certified() const { return status == CoverageStatus::certified; }
};

// Lipschitz certificate. Samples every cell on a square lattice of spacing
// h' = 1/ceil(1/h) (corners included); m is the largest sample-to-stop
// distance. m <= k - h' certifies (distance to the stop set is 1-Lipschitz in
// l1 and every grid point is within h' of a sample); a sample farther than k
// is a counterexample; anything else is inconclusive.
CoverageReport verify_coverage(const Grid& g, const std::vector<Point>& stops, const Rational& k, const Rational& h);

// Exact decision: in the rotated frame u = x + y, v = x - y every coverage
// diamond is an axis-parallel box and every cell is a diamond, so each cell
// is swept slab by slab for open gaps in the union of boxes. Returns a grid
// point farther than k from every stop, or nullopt when the grid is covered.
std::optional<Point> find_uncovered_point(const Grid& g, const std::vector<Point>& stops, const Rational& k);

struct CertifyOptions {
  std::optional<Rational> h;  // default k/16
  int halvings = 2;
  bool exact_fallback = true;
};

// Sampled certificate at h, h/2, ... then the exact sweep if still
// inconclusive and exact_fallback is set.
CoverageReport certify_coverage(const Grid& g, const std::vector<Point>& stops, const Rational& k,
                                const CertifyOptions& options = {});

// (T-1) f(L/(T-1)) >= A - 2k^2, evaluated exactly.
bool verify_tradeoff(const CoveringPath& path, const Grid& g, const Rational& k);

struct AuditCheck {
  std::string name;
  bool applicable = true;
  bool holds = true;
  double lhs = 0;
  double rhs = 0;
};

struct AuditReport {
  std::int64_t area = 0;
  std::int64_t perimeter = 0;
  bool convex = false;
  bool connected = true;
  bool hole_free = true;
  std::optional<double> d;
  std::size_t stop_count = 0;
  double length = 0;
  double realized_cost = 0;
  double lower_bound = 0;         // sigma*A0 + beta (beta if degenerate)
  double lower_bound_relaxed = 0; // sigma*(A - 2k^2)
  double upper_general = 0;
  double upper_convex = 0;
  double ratio_to_lower = 0;
  std::vector<AuditCheck> checks;

  bool all_hold() const;
  const AuditCheck* find(const std::string& name) const;
};

// Sigma-based inequalities are compared with relative slack 1e-12; the
// counting and length inequalities are exact.
AuditReport audit(const Grid& g, const CostParams& p, const CoveringPath& path, const StopSet* stop_set = nullptr,
                  std::optional<Rational> tree_length = std::nullopt);

}  // namespace gridcover
