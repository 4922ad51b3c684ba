#include "disclose/equilibrium.hpp"

#include <algorithm>
#include <cmath>

#include "disclose/closedform.hpp"
#include "disclose/util.hpp"

namespace disclose {

const char* to_string(Regime regime) { return regime == Regime::N ? "N" : "D"; }

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::NAI: return "NAI";
    case Strategy::AI: return "AI";
    case Strategy::AINAI: return "AINAI";
    case Strategy::AIAI: return "AIAI";
  }
  return "?";
}

UtilitiesN utilities_N(const ModelParams& p, double f) {
  UtilitiesN u{};
  u.nai = 1.0 - p.r - p.c;
  u.ai = (1.0 - p.r) * (p.beta * f * p.v + (1.0 - p.beta) * p.v) - p.delta * p.c;
  return u;
}

UtilitiesD utilities_D(const ModelParams& p, double f, double penalty) {
  UtilitiesD u{};
  u.nai = 1.0 - p.r - p.c;
  u.ainai = (1.0 - p.r) * (p.beta * (f * p.k * p.v - penalty) + (1.0 - p.beta) * p.v) -
            p.delta * p.c;
  u.aiai = (1.0 - p.r) * f * p.v - p.delta * p.c;
  return u;
}

Strategy best_response(const ModelParams& p, double f, Regime regime, double penalty) {
  if (regime == Regime::N) {
    const UtilitiesN u = utilities_N(p, f);
    return u.nai >= u.ai ? Strategy::NAI : Strategy::AI;
  }
  const UtilitiesD u = utilities_D(p, f, penalty);
  // Tie order NAI > AIAI > AINAI.
  Strategy best = Strategy::NAI;
  double value = u.nai;
  if (u.aiai > value) {
    best = Strategy::AIAI;
    value = u.aiai;
  }
  if (u.ainai > value) best = Strategy::AINAI;
  return best;
}

double Segmentation::measure_of(Strategy s) const {
  double total = 0.0;
  for (const Segment& seg : segments)
    if (seg.strategy == s) total += seg.measure();
  return total;
}

namespace {

// Tie preference at exact boundaries: NAI > AIAI > AINAI > AI.
int tie_rank(Strategy s) {
  switch (s) {
    case Strategy::NAI: return 3;
    case Strategy::AIAI: return 2;
    case Strategy::AINAI: return 1;
    case Strategy::AI: return 0;
  }
  return 0;
}

}  // namespace

Strategy Segmentation::strategy_at(double f) const {
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (f < segments[i].hi) return segments[i].strategy;
    if (f == segments[i].hi) {
      if (i + 1 == segments.size()) return segments[i].strategy;
      // A boundary point is indifferent between its two neighbors.
      return tie_rank(segments[i].strategy) >= tie_rank(segments[i + 1].strategy)
                 ? segments[i].strategy
                 : segments[i + 1].strategy;
    }
  }
  return segments.back().strategy;
}

namespace {

void push_segment(std::vector<Segment>& out, double lo, double hi, Strategy s) {
  if (hi - lo <= 0.0) return;
  out.push_back({lo, hi, s});
}

}  // namespace

Segmentation segment(const ModelParams& p, Regime regime, double penalty) {
  Segmentation out;
  out.regime = regime;
  out.penalty = regime == Regime::D ? penalty : 0.0;
  const Cutoffs c = cutoffs_at(p, penalty);
  if (regime == Regime::N) {
    const double split = util::clamp01(c.f0);
    push_segment(out.segments, 0.0, split, Strategy::NAI);
    push_segment(out.segments, split, 1.0, Strategy::AI);
    if (out.segments.empty()) out.segments.push_back({0.0, 1.0, Strategy::NAI});
    return out;
  }
  // Upper envelope of three lines in f: NAI flat, AINAI slope beta*k*(1-r)*v,
  // AIAI slope (1-r)*v. The middle segment exists only while f1 < f2
  // (penalty below p_bar); otherwise NAI meets AIAI at f12.
  double a = util::clamp01(c.f1);
  double b = util::clamp01(c.f2);
  // Tolerance kills the one-ulp sliver that appears at penalty exactly p_bar,
  // where f1 and f2 coincide analytically.
  if (c.f1 >= c.f2 - 1e-12) a = b = util::clamp01(c.f12);
  push_segment(out.segments, 0.0, a, Strategy::NAI);
  push_segment(out.segments, a, b, Strategy::AINAI);
  push_segment(out.segments, b, 1.0, Strategy::AIAI);
  if (out.segments.empty()) out.segments.push_back({0.0, 1.0, Strategy::NAI});
  return out;
}

std::string StrategySet::str() const {
  std::string out;
  auto add = [&out](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += '+';
    out += name;
  };
  add(nai, "NAI");
  add(ai, "AI");
  add(ainai, "AINAI");
  add(aiai, "AIAI");
  return out;
}

StrategySet present_strategies(const Segmentation& seg, double min_measure) {
  StrategySet out;
  for (const Segment& s : seg.segments) {
    if (s.measure() <= min_measure) continue;
    switch (s.strategy) {
      case Strategy::NAI: out.nai = true; break;
      case Strategy::AI: out.ai = true; break;
      case Strategy::AINAI: out.ainai = true; break;
      case Strategy::AIAI: out.aiai = true; break;
    }
  }
  return out;
}

StrategySet strategy_set(const ModelParams& p) {
  StrategySet out;
  switch (optimal_penalty(p).region) {
    case PenaltyRegion::AllHuman:
      out.nai = true;
      break;
    case PenaltyRegion::NoThreat:
    case PenaltyRegion::FullDeterrence:
      out.nai = out.aiai = true;
      break;
    case PenaltyRegion::PartialScreening:
      out.nai = out.ainai = out.aiai = true;
      break;
    case PenaltyRegion::Deregulation:
      // Past the screening region the hand-made segment is gone (f1(0) < 0).
      out.ainai = out.aiai = true;
      break;
  }
  return out;
}

}  // namespace disclose
