#pragma once

#include <cstdint>
#include <optional>

#include "gridcover/rational.hpp"

namespace gridcover {

// Coverage radius k and the weights of cost = alpha * L + beta * T.
struct CostParams {
  Rational k = 1;
  double alpha = 1.0;
  double beta = 1.0;

  double k_value() const { return to_double(k); }
  // Throws Error(domain) unless k > 0, alpha > 0, beta >= 0.
  void validate() const;
};

// Unique coverage area per stop at average stop spacing d:
// d(2k - d/2) on (0, 2k], capped at 2k^2 beyond.
double tradeoff_area(double d, double k);
Rational tradeoff_area(const Rational& d, const Rational& k);

// These three take raw weights so the alpha -> 0 limit can be evaluated.
double gamma_factor(double alpha, double beta, double k);
double sigma_closed_form(double alpha, double beta, double k);
// sigma expressed through an average spacing d: (alpha d + beta) / f(d).
double sigma_from_spacing(double alpha, double beta, double d, double k);

double gamma_factor(const CostParams& p);
double sigma(const CostParams& p);

// Optimal stop spacing (4k*gamma - 2) / gamma; undefined when beta == 0.
std::optional<double> optimal_spacing(const CostParams& p);

struct BoundsProfile {
  std::int64_t area = 0;
  std::int64_t perimeter = 0;
  double gamma = 0;
  double sigma = 0;
  std::optional<double> d_star;   // absent for beta == 0
  double a0 = 0;                  // A - 2k^2
  double l_star = 0;
  std::optional<double> t0_star;  // absent for beta == 0
  bool degenerate = false;        // A <= 2k^2: trade-off machinery skipped
  double lower_bound = 0;         // sigma*A0 + beta, or beta when degenerate
  double lower_bound_relaxed = 0; // sigma*(A - 2k^2)
  double upper_general = 0;
  double upper_convex = 0;
};

BoundsProfile optimal_profile(const CostParams& p, std::int64_t area, std::int64_t perimeter = 0);

// 2 sigma (A + 16 k P + 32 k^2).
double upper_bound_general(const CostParams& p, std::int64_t area, std::int64_t perimeter);
// sigma (A + 16 k P + 32 k^2), half of the general bound.
double upper_bound_convex(const CostParams& p, std::int64_t area, std::int64_t perimeter);

// Stop-count and length caps of the construction at spacing d.
double stop_count_bound(const CostParams& p, double d, std::int64_t area, std::int64_t perimeter);
double path_length_bound(const CostParams& p, double d, std::int64_t area, std::int64_t perimeter);
// |C_in| + |C_out| and |C_out| caps.
double selected_center_bound(const CostParams& p, double d, std::int64_t area, std::int64_t perimeter);
double outside_center_bound(const CostParams& p, double d, std::int64_t perimeter);

}  // namespace gridcover
