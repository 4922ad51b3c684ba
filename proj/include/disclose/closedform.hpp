// Closed-form equilibrium objects: quality thresholds, credibility cutoffs,
// platform profits under both regimes, and the optimal penalty. Everything
// here is an explicit formula (piecewise in v and p); the brute-force
// counterparts live in oracle.hpp and never share this branch logic.
#pragma once

#include "disclose/params.hpp"

namespace disclose {

// Quality thresholds and penalty landmarks for a parameter tuple. Square-root
// expressions clamp their radicand at 0, which makes the object total on the
// validated domain (radicands only go negative once the cost gap exceeds 1-r,
// where the associated regions are empty anyway).
struct Thresholds {
  double v_lo1;     // adoption threshold: below it no creator ever adopts AI
  double v_lo2;     // concealment threshold: below it deterrence is free (p_bar <= 0)
  double v_hat;     // full-adoption threshold under non-disclosure (f0 hits 0)
  double tv1;       // v where the slope of Pi_N in v flips sign
  double tv2;       // v where the slope of Pi_N in beta flips sign
  double tv3;       // screening region lower edge, (1-beta*k)/(1-beta); constant in delta
  double tv4;       // full-deterrence upper edge in the tv4 < tv3 ordering
  double tv5;       // screening region upper edge
  double v_d;       // trough of the deterrence branch of Pi_D*(v)
  double v8;        // stationary point of the screening branch of Pi_D*(v)
  double p_hat;     // penalty at which the hand-made segment appears (f1 = 0)
  double p_bar;     // full-deterrence penalty (f1 = f2); may be negative below v_lo2
  double p_tilde;   // interior optimum of the screening branch of Pi_D(p)
  double delta0;    // cost-discount level separating the tv4<tv3 / tv3<tv4 orderings
};

// Credibility cutoffs, reported unclamped; segmentation clamps them to [0,1].
struct Cutoffs {
  double f0;   // non-disclosure regime: NAI vs AI indifference
  double f1;   // disclosure regime: NAI vs AINAI indifference (depends on p)
  double f2;   // disclosure regime: AINAI vs AIAI indifference (depends on p)
  double f12;  // disclosure regime: NAI vs AIAI indifference (p-independent)
};

enum class PenaltyRegion {
  AllHuman,          // v <= v_lo1: degenerate, no adoption under any penalty
  NoThreat,          // v_lo1 < v <= v_lo2: concealment never pays, any p >= 0 optimal
  FullDeterrence,    // p* = p_bar, concealment fully deterred
  PartialScreening,  // p* = p_tilde, all three strategies coexist
  Deregulation,      // p* = 0, penalties only destroy profit
};

struct PenaltyChoice {
  double p = 0.0;
  PenaltyRegion region = PenaltyRegion::Deregulation;
};

const char* to_string(PenaltyRegion region);

Thresholds compute_thresholds(const ModelParams& p);

double cutoff_f0(const ModelParams& p);
Cutoffs cutoffs_at(const ModelParams& p, double penalty);

// Platform profit with disclosure off. Piecewise in v (degenerate / interior /
// full adoption).
double profit_N(const ModelParams& p);

// Platform profit with disclosure on and penalty `penalty`. Piecewise in
// (v, penalty); each piece is the exact integral of segment revenue.
double profit_D(const ModelParams& p, double penalty);

// Profit-maximizing penalty and its region tag. Smallest maximizer on
// plateaus; exact threshold values resolve to the lower branch.
PenaltyChoice optimal_penalty(const ModelParams& p);

// Pi_D at the optimal penalty, as a direct formula (not via profit_D); the
// two routes agreeing is a library invariant and is tested.
double profit_D_star(const ModelParams& p);

}  // namespace disclose
