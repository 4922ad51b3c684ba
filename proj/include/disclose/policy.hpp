// Platform-level policy analysis: regime selection, the disclosure-wedge
// boundaries in (delta, v) space, and sign predictions for the comparative
// statics of equilibrium profits.
#pragma once

#include <optional>
#include <vector>

#include "disclose/closedform.hpp"
#include "disclose/equilibrium.hpp"
#include "disclose/params.hpp"

namespace disclose {

struct RegimeDecision {
  double profit_n = 0.0;
  double profit_d_star = 0.0;
  PenaltyChoice penalty;        // optimal penalty backing profit_d_star
  Regime chosen = Regime::N;    // ties go to N (disclosure machinery is not free)
  double margin = 0.0;          // profit_d_star - profit_n
};

RegimeDecision regime_choice(const ModelParams& p);

// Disclosure-wedge boundaries. b* are roots in v of the four profit-gap
// branch expressions, evaluated at the params' delta (absent when the branch
// quadratic has no real root). delta* are roots in delta at quality `v`,
// found by bisection (tolerance 1e-10) and validated against the profit gap;
// absent means the wedge is unbounded on that side at this quality.
struct RegimeBoundaries {
  double b0 = 0.0;                // gap root on the shared-deterrence branch
  std::optional<double> b2;       // gap root where N is interior, D screens
  std::optional<double> b3;       // gap root where both are past full adoption
  std::optional<double> b5;       // gap root where N is past full adoption, D deters
  std::optional<double> delta0;   // delta at which v hits the adoption threshold
  std::optional<double> delta1;   // lower delta edge of the wedge
  std::optional<double> delta2;   // upper delta edge of the wedge
};

RegimeBoundaries regime_boundaries(const ModelParams& p, double v);

// The v-root that actually closes the disclosure wedge from above at the
// params' delta, with the branch it came from; absent when no wedge exists.
struct UpperBoundary {
  double v = 0.0;
  enum class Source { B0, B2, B3, B5 } source = Source::B0;
};
std::optional<UpperBoundary> upper_boundary_root(const ModelParams& p);

enum class Sign { Negative, Zero, Positive };
enum class StaticsVariable { V, Beta };

struct SignInterval {
  double lo = 0.0;
  double hi = 0.0;
  Sign sign = Sign::Zero;
};

// Predicted derivative sign of the equilibrium profit (Pi_N or Pi_D*) with
// respect to `variable`, as intervals tiling (adoption threshold, v_bar).
// Empty intervals from the piecewise rules are dropped and same-sign
// neighbors merged, so the pattern is minimal.
struct StaticsPrediction {
  Regime regime = Regime::N;
  StaticsVariable variable = StaticsVariable::V;
  std::vector<SignInterval> intervals;
};

StaticsPrediction statics_prediction(const ModelParams& p, Regime regime,
                                     StaticsVariable variable);

}  // namespace disclose
