#include "disclose/closedform.hpp"

#include <algorithm>
#include <cmath>

#include "disclose/util.hpp"

namespace disclose {

namespace {

double sqrt0(double x) { return std::sqrt(std::max(0.0, x)); }

}  // namespace

const char* to_string(PenaltyRegion region) {
  switch (region) {
    case PenaltyRegion::AllHuman: return "all-human";
    case PenaltyRegion::NoThreat: return "no-threat";
    case PenaltyRegion::FullDeterrence: return "full-deterrence";
    case PenaltyRegion::PartialScreening: return "partial-screening";
    case PenaltyRegion::Deregulation: return "deregulation";
  }
  return "?";
}

Thresholds compute_thresholds(const ModelParams& p) {
  const double v = p.v, c = p.c, b = p.beta, r = p.r, k = p.k;
  const double cg = p.cost_gap();
  const double om = 1.0 - r;  // retained engagement share

  Thresholds t{};
  t.v_lo1 = (om - cg) / om;
  t.v_hat = t.v_lo1 / (1.0 - b);
  t.v_lo2 = (1.0 - k * b) * t.v_lo1 / (1.0 - b);
  t.tv1 = sqrt0(om * om - cg * cg) / om;
  t.tv2 = (om + cg) / om;
  t.tv3 = (1.0 - k * b) / (1.0 - b);
  t.tv4 = std::sqrt(1.0 - b * k) * sqrt0(om * om - cg * cg) / ((1.0 - b) * om);
  t.tv5 = 1.0 / (1.0 - b) - cg * std::sqrt(b * k) / ((1.0 - b) * om);
  t.v_d = t.tv1;
  const double big_b = (1.0 - b) * (1.0 - b) + b * k * (1.0 - b * k);
  t.v8 = sqrt0((1.0 - b * k) * (om * om - b * k * cg * cg)) / (om * std::sqrt(big_b));
  t.p_hat = (cg + ((1.0 - b) * v - 1.0) * om) / (b * om);
  t.p_bar = (cg * (1.0 - b * k) + om * (b * k - 1.0 + (1.0 - b) * v)) / (b * om);
  t.p_tilde = cg * (1.0 - b * k) / (b * om);
  t.delta0 = 1.0 - om * std::sqrt(b * k) / c;
  return t;
}

double cutoff_f0(const ModelParams& p) {
  const double om = 1.0 - p.r;
  return (om * (1.0 - p.v * (1.0 - p.beta)) - p.cost_gap()) / (om * p.v * p.beta);
}

Cutoffs cutoffs_at(const ModelParams& p, double penalty) {
  const double v = p.v, b = p.beta, k = p.k;
  const double cg = p.cost_gap();
  const double om = 1.0 - p.r;
  Cutoffs c{};
  c.f0 = cutoff_f0(p);
  c.f1 = (om * (1.0 - v * (1.0 - b) + penalty * b) - cg) / (om * k * v * b);
  c.f2 = (v - (penalty + v) * b) / (v * (1.0 - k * b));
  c.f12 = (om - cg) / (om * v);
  return c;
}

double profit_N(const ModelParams& p) {
  const double v = p.v, b = p.beta, r = p.r;
  const double cg = p.cost_gap();
  const double om = 1.0 - r;
  const Thresholds t = compute_thresholds(p);
  if (v <= t.v_lo1) return r;
  if (v < t.v_hat)
    return r * (om * om * (2.0 * b * v + (1.0 - v) * (1.0 - v)) - cg * cg) /
           (2.0 * b * om * om * v);
  return (2.0 - b) * r * v / 2.0;
}

namespace {

// Exact revenue integrals over one segment of each strategy. The platform
// earns its share of realized engagement; the penalty never enters revenue.
struct SegmentRevenue {
  const ModelParams& p;
  double nai(double lo, double hi) const { return p.r * (hi - lo); }
  double ainai(double lo, double hi) const {
    return p.r * (p.beta * p.k * p.v * (hi * hi - lo * lo) / 2.0 +
                  (1.0 - p.beta) * p.v * (hi - lo));
  }
  double aiai(double lo, double hi) const {
    return p.r * p.v * (hi * hi - lo * lo) / 2.0;
  }
};

}  // namespace

double profit_D(const ModelParams& p, double penalty) {
  const Thresholds t = compute_thresholds(p);
  const Cutoffs c = cutoffs_at(p, penalty);
  const SegmentRevenue rev{p};
  // Cutoffs are clamped inside each piece: a no-op on the piece's natural
  // domain, and the correct degenerate value outside it (e.g. the deterrence
  // form with f12 < 0 collapses to the all-AIAI profit r*v/2).
  const auto deterred = [&] {
    const double x = util::clamp01(c.f12);
    return rev.nai(0.0, x) + rev.aiai(x, 1.0);
  };
  const auto three_way = [&] {
    const double a = util::clamp01(c.f1);
    const double b2 = std::max(a, util::clamp01(c.f2));
    return rev.nai(0.0, a) + rev.ainai(a, b2) + rev.aiai(b2, 1.0);
  };
  if (p.v <= t.v_lo1) return p.r;
  if (p.v <= t.v_lo2) return deterred();
  if (p.v < t.v_hat) return penalty < t.p_bar ? three_way() : deterred();
  // Full-adoption qualities: no hand-made segment until the penalty passes p_hat.
  if (penalty <= t.p_hat) {
    const double x = util::clamp01(c.f2);
    return rev.ainai(0.0, x) + rev.aiai(x, 1.0);
  }
  if (penalty < t.p_bar) return three_way();
  return deterred();
}

PenaltyChoice optimal_penalty(const ModelParams& p) {
  const Thresholds t = compute_thresholds(p);
  const double v = p.v;
  // Exact boundary values resolve to the lower-v branch throughout.
  if (v <= t.v_lo1) return {0.0, PenaltyRegion::AllHuman};
  if (v <= t.v_lo2) return {0.0, PenaltyRegion::NoThreat};
  if (v <= std::min(t.tv3, t.tv4)) return {t.p_bar, PenaltyRegion::FullDeterrence};
  if (t.tv3 < v && v <= t.tv5) return {t.p_tilde, PenaltyRegion::PartialScreening};
  return {0.0, PenaltyRegion::Deregulation};
}

double profit_D_star(const ModelParams& p) {
  const double v = p.v, b = p.beta, r = p.r, k = p.k;
  const double cg = p.cost_gap();
  const double om = 1.0 - r;
  const Thresholds t = compute_thresholds(p);
  if (v <= t.v_lo1) return r;
  if (v <= std::min(t.tv3, t.tv4))
    return r * (om * om * (v * v + 1.0) - cg * cg) / (2.0 * om * om * v);
  if (t.tv3 < v && v <= t.tv5) {
    const double g = 1.0 + b * (b - b * k * k + k - 2.0);
    const double num = om * om * (v * v * g + (1.0 - b * k) * (1.0 - 2.0 * (1.0 - b) * v)) -
                       b * cg * cg * k * (1.0 - b * k);
    return r * num / (2.0 * b * k * om * om * (1.0 - b * k) * v);
  }
  return r * v * (2.0 - (2.0 - b + k) * b) / (2.0 * (1.0 - b * k));
}

}  // namespace disclose
