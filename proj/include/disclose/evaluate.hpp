// Point evaluation and two-axis parameter sweeps: the plumbing behind the
// CLI's `eval` and `sweep` subcommands.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "disclose/closedform.hpp"
#include "disclose/equilibrium.hpp"
#include "disclose/params.hpp"
#include "disclose/policy.hpp"
#include "disclose/welfare.hpp"

namespace disclose {

struct PointEval {
  ModelParams params;
  ParamRegion param_region = ParamRegion::Active;
  Thresholds thresholds;
  RegimeDecision decision;
  WelfareReport welfare;
  Segmentation seg_n;
  Segmentation seg_d;  // at the optimal penalty
  StrategySet set_d;   // strategies used under disclosure at p*
};

PointEval evaluate_point(const ModelParams& p);

nlohmann::ordered_json eval_json(const PointEval& e);

// A sweep axis overwrites one parameter field per grid value. Valid names:
// v, c, delta, beta, r, k.
struct SweepAxis {
  std::string name;
  std::vector<double> values;
};

// Throws RangeError (field "axis") for an unknown axis name.
double ModelParams::* axis_field(const std::string& name);

std::vector<double> linspace(double lo, double hi, int n);

struct SweepSpec {
  ModelParams base;
  SweepAxis axis1;  // outer (row-major) axis
  SweepAxis axis2;
};

struct SweepRow {
  double a1 = 0.0, a2 = 0.0;
  PenaltyRegion region = PenaltyRegion::Deregulation;
  StrategySet set;
  double p_star = 0.0;
  double profit_n = 0.0, profit_d_star = 0.0;
  Regime chosen = Regime::N;
  double cs_n = 0.0, cs_d = 0.0;
  double t_n = 0.0, t_d = 0.0;
  double q_n = 0.0, q_d = 0.0;
};

// Rows in axis1-major order; cells are independent and computed in parallel
// into preallocated slots, so the output is deterministic.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

// CSV with axis parameter names as the first two header columns and all
// numbers printed with %.9g, so reruns are byte-identical.
void write_sweep_csv(std::ostream& os, const SweepSpec& spec,
                     const std::vector<SweepRow>& rows);

}  // namespace disclose
