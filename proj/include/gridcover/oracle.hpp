#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gridcover/bounds.hpp"
#include "gridcover/grid.hpp"
#include "gridcover/path.hpp"

namespace gridcover {

// Brute-force reference solver. Stops are restricted to grid points on a
// square candidate lattice, so its answer is the lattice-restricted optimum:
// never below the true optimum.
struct OracleConfig {
  Rational spacing = Rational(1, 2);
  std::size_t max_candidates = 24;
  std::size_t max_subset = 10;
};

// Grid points on the candidate lattice, sorted lexicographically.
std::vector<Point> oracle_candidates(const Grid& g, const Rational& spacing);

// Shortest Hamiltonian path (free endpoints) over integer l1 coordinates,
// by dynamic programming over subsets. Returns the visiting order.
std::vector<std::size_t> shortest_hamiltonian_path(const std::vector<std::pair<std::int64_t, std::int64_t>>& pts,
                                                   std::int64_t* length = nullptr);
// Same quantity by enumerating permutations; for cross-checks only.
std::int64_t shortest_hamiltonian_length_bruteforce(const std::vector<std::pair<std::int64_t, std::int64_t>>& pts);

// Minimum alpha L + beta T over covering subsets of the candidates.
// Throws Error(too_large) past the configured limits and Error(infeasible)
// when no subset within max_subset covers the grid.
CoveringPath solve_exact(const Grid& g, const CostParams& p, const OracleConfig& cfg = {});

struct RatioInstance {
  std::string name;
  std::uint64_t seed = 0;
  Grid grid;
};

struct RatioRow {
  std::string instance;
  std::uint64_t seed = 0;
  std::int64_t area = 0;
  std::int64_t perimeter = 0;
  bool convex = false;
  std::string k;
  double alpha = 0;
  double beta = 0;
  std::string d;        // "p/q", or "NA" for a single-stop cover
  double lower = 0;
  std::optional<double> oracle;
  std::string oracle_error;  // marker when the oracle did not run
  std::optional<double> constructed;
  std::string construct_error;
  std::optional<double> ratio_lower;
  std::optional<double> ratio_oracle;
};

std::vector<RatioRow> ratio_study(const std::vector<RatioInstance>& instances, const CostParams& p,
                                  const OracleConfig& cfg, int workers = 1);

// Fixed column order:
// instance,seed,A,P,convex,k,alpha,beta,d,lower,oracle,constructed,ratio_lower,ratio_oracle
std::string ratio_csv(const std::vector<RatioRow>& rows);

}  // namespace gridcover
