#include "disclose/welfare.hpp"

namespace disclose {

namespace {

double utility_of(const ModelParams& p, double f, Strategy s, double penalty) {
  switch (s) {
    case Strategy::NAI:
      return utilities_N(p, f).nai;
    case Strategy::AI:
      return utilities_N(p, f).ai;
    case Strategy::AINAI:
      return utilities_D(p, f, penalty).ainai;
    case Strategy::AIAI:
      return utilities_D(p, f, penalty).aiai;
  }
  return 0.0;
}

}  // namespace

double creator_surplus(const ModelParams& p, Regime regime, double penalty) {
  const Segmentation seg = segment(p, regime, penalty);
  double total = 0.0;
  for (const Segment& s : seg.segments) {
    const double u_lo = utility_of(p, s.lo, s.strategy, penalty);
    const double u_hi = utility_of(p, s.hi, s.strategy, penalty);
    total += 0.5 * (u_lo + u_hi) * s.measure();
  }
  return total;
}

double transparency(const ModelParams& p, Regime regime, double penalty) {
  const Segmentation seg = segment(p, regime, penalty);
  const double hidden = regime == Regime::N ? seg.measure_of(Strategy::AI)
                                            : seg.measure_of(Strategy::AINAI);
  return 1.0 - (1.0 - p.beta) * hidden;
}

double average_quality(const ModelParams& p, Regime regime, double penalty) {
  const Segmentation seg = segment(p, regime, penalty);
  const double human = seg.measure_of(Strategy::NAI);
  return human + p.v * (1.0 - human);
}

double average_perceived_value(const ModelParams& p, Regime regime,
                               double penalty) {
  const double profit =
      regime == Regime::N ? profit_N(p) : profit_D(p, penalty);
  return profit / p.r;
}

WelfareReport welfare_comparison(const ModelParams& p) {
  const PenaltyChoice pc = optimal_penalty(p);
  WelfareReport w;
  w.p_star = pc.p;
  w.region = pc.region;
  w.cs_n = creator_surplus(p, Regime::N);
  w.cs_d = creator_surplus(p, Regime::D, pc.p);
  w.t_n = transparency(p, Regime::N);
  w.t_d = transparency(p, Regime::D, pc.p);
  w.q_n = average_quality(p, Regime::N);
  w.q_d = average_quality(p, Regime::D, pc.p);
  return w;
}

Sign quality_comparison_sign(const ModelParams& p) {
  switch (optimal_penalty(p).region) {
    case PenaltyRegion::AllHuman:
    case PenaltyRegion::Deregulation:
      // Identical human shares in both regimes (all human, or none).
      return Sign::Zero;
    case PenaltyRegion::PartialScreening:
      // Screening only arises past tv3 > 1, so extra human mass hurts quality.
      return Sign::Negative;
    case PenaltyRegion::NoThreat:
    case PenaltyRegion::FullDeterrence:
      if (p.v < 1.0) return Sign::Positive;
      if (p.v > 1.0) return Sign::Negative;
      return Sign::Zero;
  }
  return Sign::Zero;
}

}  // namespace disclose
