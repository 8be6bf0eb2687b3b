#include "gridcover/bounds.hpp"

#include <cmath>

#include "gridcover/error.hpp"

namespace gridcover {

void CostParams::validate() const {
  if (k <= 0) fail(ErrorCode::domain, "coverage radius k must be positive");
  if (!(alpha > 0) || !std::isfinite(alpha)) fail(ErrorCode::domain, "alpha must be positive and finite");
  if (!(beta >= 0) || !std::isfinite(beta)) fail(ErrorCode::domain, "beta must be non-negative and finite");
}

double tradeoff_area(double d, double k) {
  if (!(d > 0) || !(k > 0)) fail(ErrorCode::domain, "trade-off function needs d > 0 and k > 0");
  if (d <= 2 * k) return d * (2 * k - d / 2);
  return 2 * k * k;
}

Rational tradeoff_area(const Rational& d, const Rational& k) {
  if (d <= 0 || k <= 0) fail(ErrorCode::domain, "trade-off function needs d > 0 and k > 0");
  if (d <= 2 * k) return d * (2 * k - d / 2);
  return 2 * k * k;
}

double gamma_factor(double alpha, double beta, double k) {
  const double w = 4 * alpha * k + beta;
  return (w + std::sqrt(w * beta)) / (2 * k * w);
}

double sigma_closed_form(double alpha, double beta, double k) {
  if (beta == 0) return alpha / (2 * k);
  const double g = gamma_factor(alpha, beta, k);
  return alpha * g + beta * g * g / (4 * k * g - 2);
}

double sigma_from_spacing(double alpha, double beta, double d, double k) {
  return (alpha * d + beta) / tradeoff_area(d, k);
}

double gamma_factor(const CostParams& p) {
  p.validate();
  return gamma_factor(p.alpha, p.beta, p.k_value());
}

double sigma(const CostParams& p) {
  p.validate();
  return sigma_closed_form(p.alpha, p.beta, p.k_value());
}

std::optional<double> optimal_spacing(const CostParams& p) {
  p.validate();
  if (p.beta == 0) return std::nullopt;
  const double k = p.k_value();
  const double g = gamma_factor(p.alpha, p.beta, k);
  return std::min((4 * k * g - 2) / g, 2 * k);
}

BoundsProfile optimal_profile(const CostParams& p, std::int64_t area, std::int64_t perimeter) {
  p.validate();
  const double k = p.k_value();
  BoundsProfile out;
  out.area = area;
  out.perimeter = perimeter;
  out.gamma = gamma_factor(p.alpha, p.beta, k);
  out.sigma = sigma_closed_form(p.alpha, p.beta, k);
  out.d_star = optimal_spacing(p);
  out.a0 = static_cast<double>(area) - 2 * k * k;
  out.lower_bound_relaxed = out.sigma * out.a0;
  out.degenerate = out.a0 <= 0;
  if (out.degenerate) {
    out.l_star = 0;
    out.t0_star = 0.0;
    out.lower_bound = p.beta;
  } else {
    out.l_star = out.gamma * out.a0;
    if (p.beta > 0) out.t0_star = out.gamma * out.gamma * out.a0 / (4 * k * out.gamma - 2);
    out.lower_bound = out.sigma * out.a0 + p.beta;
  }
  out.upper_general = upper_bound_general(p, area, perimeter);
  out.upper_convex = upper_bound_convex(p, area, perimeter);
  return out;
}

double upper_bound_convex(const CostParams& p, std::int64_t area, std::int64_t perimeter) {
  const double k = p.k_value();
  return sigma(p) * (static_cast<double>(area) + 16 * k * static_cast<double>(perimeter) + 32 * k * k);
}

double upper_bound_general(const CostParams& p, std::int64_t area, std::int64_t perimeter) {
  return 2 * upper_bound_convex(p, area, perimeter);
}

double stop_count_bound(const CostParams& p, double d, std::int64_t area, std::int64_t perimeter) {
  const double k = p.k_value();
  return (static_cast<double>(area) + 16 * k * static_cast<double>(perimeter) + 32 * k * k) / tradeoff_area(d, k);
}

double path_length_bound(const CostParams& p, double d, std::int64_t area, std::int64_t perimeter) {
  const double k = p.k_value();
  return 2 * d * (static_cast<double>(area) + 6 * k * static_cast<double>(perimeter) + 8 * k * k) /
         tradeoff_area(d, k);
}

double selected_center_bound(const CostParams& p, double d, std::int64_t area, std::int64_t perimeter) {
  const double k = p.k_value();
  return (static_cast<double>(area) + 4 * k * static_cast<double>(perimeter) + 8 * k * k) / tradeoff_area(d, k);
}

double outside_center_bound(const CostParams& p, double d, std::int64_t perimeter) {
  const double k = p.k_value();
  return (4 * k * static_cast<double>(perimeter) + 8 * k * k) / tradeoff_area(d, k);
}

}  // namespace gridcover
