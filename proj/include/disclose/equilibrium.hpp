// Creator-side equilibrium objects: strategy utilities, the pointwise best
// response, and the credibility-line segmentation induced by the closed-form
// cutoffs. best_response compares utilities directly and never touches
// cutoffs, so it can serve as the independent reference for them.
#pragma once

#include <string>
#include <vector>

#include "disclose/params.hpp"

namespace disclose {

enum class Regime {
  N,  // disclosure off: strategies NAI / AI
  D,  // disclosure on: strategies NAI / AINAI / AIAI
};

enum class Strategy {
  NAI,    // produce by hand
  AI,     // adopt AI (non-disclosure regime only)
  AINAI,  // adopt AI, conceal, risk the penalty
  AIAI,   // adopt AI and self-disclose
};

const char* to_string(Regime regime);
const char* to_string(Strategy s);

struct UtilitiesN {
  double nai;
  double ai;
};

struct UtilitiesD {
  double nai;
  double ainai;
  double aiai;
};

// Creator payoffs at credibility f (Eq.-level primitives; every brute-force
// check in the oracle is built from these two functions alone).
UtilitiesN utilities_N(const ModelParams& p, double f);
UtilitiesD utilities_D(const ModelParams& p, double f, double penalty);

// Utility argmax at f; exact ties resolve NAI > AIAI > AINAI > AI.
Strategy best_response(const ModelParams& p, double f, Regime regime, double penalty = 0.0);

struct Segment {
  double lo = 0.0;
  double hi = 0.0;
  Strategy strategy = Strategy::NAI;
  double measure() const { return hi - lo; }
};

// Ordered partition of [0,1] into maximal same-strategy intervals.
struct Segmentation {
  Regime regime = Regime::N;
  double penalty = 0.0;
  std::vector<Segment> segments;  // sorted by lo, gap-free, zero-measure ones omitted

  double measure_of(Strategy s) const;
  Strategy strategy_at(double f) const;
};

// Builds the segmentation from the closed-form cutoffs, clamped to [0,1].
Segmentation segment(const ModelParams& p, Regime regime, double penalty = 0.0);

struct StrategySet {
  bool nai = false;
  bool ai = false;
  bool ainai = false;
  bool aiai = false;

  bool operator==(const StrategySet&) const = default;
  // "NAI+AINAI+AIAI" style, fixed order.
  std::string str() const;
};

// Strategies with measure above `min_measure` in a segmentation.
StrategySet present_strategies(const Segmentation& seg, double min_measure = 0.0);

// Equilibrium strategy set under disclosure at the optimal penalty.
StrategySet strategy_set(const ModelParams& p);

}  // namespace disclose
