// Brute-force reference implementations: midpoint-quadrature profits over
// pointwise best responses, grid + golden-section penalty search, and a
// region map. These deliberately know nothing about cutoffs or profit branch
// conditions (they only call utilities_* / best_response), so agreement with
// closedform.hpp is an end-to-end check of the algebra there.
#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "disclose/equilibrium.hpp"
#include "disclose/params.hpp"

namespace disclose {

struct OracleConfig {
  long f_cells = 200'000;      // quadrature cells on [0,1]; >= 1000
  int p_cells = 200;           // penalty grid points; >= 100
  double p_max_factor = 3.0;   // search range multiple of the largest penalty landmark
  int refine_iters = 40;       // golden-section iterations after the grid pass; >= 30
};

void validate(const OracleConfig& cfg);

// Midpoint-rule platform profit. Absolute error is O(1/f_cells), driven by
// the revenue jumps at strategy boundaries. Summation order is fixed.
double oracle_profit(const ModelParams& p, Regime regime, double penalty,
                     const OracleConfig& cfg);

struct PenaltySearch {
  double p = 0.0;       // best penalty found (plateaus make this non-unique)
  double profit = 0.0;  // oracle profit at `p`; compare profits, not locations
};

// Grid search over [0, p_max_factor * max(p_bar, p_tilde, 0.01)] plus
// golden-section refinement around the best bracket. The closed-form penalty
// landmarks are used only to size the box, never to pick the winner.
PenaltySearch oracle_p_star(const ModelParams& p, const OracleConfig& cfg);

struct RegionCell {
  StrategySet present;          // strategies with positive measure at the oracle optimum
  Regime chosen = Regime::N;    // regime with higher oracle profit
};

// Evaluates the (delta, v) grid cell-by-cell (rows = deltas, row-major),
// in parallel; output order is scheduling-independent.
std::vector<RegionCell> oracle_region_map(const ModelParams& base,
                                          const std::vector<double>& deltas,
                                          const std::vector<double>& vs,
                                          const OracleConfig& cfg);

// Thrown when a finite-difference stencil crosses a declared region edge;
// the sample point must move.
class RegionStraddle : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Central difference (fn(at+h) - fn(at-h)) / 2h. The optional predicate
// receives (at-h, at+h) and returns false if they lie in different regions.
double finite_difference(const std::function<double(double)>& fn, double at, double h);
double finite_difference(const std::function<double(double)>& fn, double at, double h,
                         const std::function<bool(double, double)>& same_region);

}  // namespace disclose
