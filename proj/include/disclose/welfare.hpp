// Welfare-side outcomes of an equilibrium: creator surplus, attribution
// transparency, average content quality, and the cross-regime comparison at
// the platform's optimal penalty.
#pragma once

#include "disclose/closedform.hpp"
#include "disclose/equilibrium.hpp"
#include "disclose/params.hpp"
#include "disclose/policy.hpp"

namespace disclose {

// Equilibrium utility integrated over creator skill; exact because utilities
// are linear in f on each segment.
double creator_surplus(const ModelParams& p, Regime regime,
                       double penalty = 0.0);

// Share of content whose origin viewers perceive correctly: AI use that is
// neither disclosed nor caught (AI in regime N, undetected AINAI in regime D)
// is the only misattributed mass.
double transparency(const ModelParams& p, Regime regime, double penalty = 0.0);

// Mean content quality: human-made content counts 1, AI-assisted counts v.
double average_quality(const ModelParams& p, Regime regime,
                       double penalty = 0.0);

// Revenue base per unit of ad intensity (profit / r); diagnostic only.
double average_perceived_value(const ModelParams& p, Regime regime,
                               double penalty = 0.0);

struct WelfareReport {
  double p_star = 0.0;
  PenaltyRegion region = PenaltyRegion::Deregulation;
  double cs_n = 0.0, cs_d = 0.0;  // creator surplus
  double t_n = 0.0, t_d = 0.0;    // transparency
  double q_n = 0.0, q_d = 0.0;    // average quality
};

// Welfare measures for both regimes, disclosure evaluated at its optimal
// penalty.
WelfareReport welfare_comparison(const ModelParams& p);

// Predicted sign of q_d - q_n from the penalty region alone: zero where the
// regimes induce identical human/AI splits, otherwise the sign of (1 - v)
// where disclosure retains strictly more human creators.
Sign quality_comparison_sign(const ModelParams& p);

}  // namespace disclose
