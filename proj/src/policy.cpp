#include "disclose/policy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "disclose/util.hpp"

namespace disclose {

namespace {

double profit_gap(const ModelParams& p) {
  return profit_N(p) - profit_D_star(p);
}

// Roots in v of the per-branch profit-gap expressions at the params' delta.
// Each is the relevant root of a quadratic; nullopt when the discriminant is
// negative or the quadratic degenerates.

double root_b0(const ModelParams& p) {
  const double om = 1.0 - p.r;
  return (om + p.cost_gap()) / om;
}

std::optional<double> root_b2(const ModelParams& p) {
  const double om = 1.0 - p.r;
  const double cg = p.cost_gap();
  const double b = p.beta;
  const double k = p.k;
  const double inner = (1.0 - b) * (1.0 - k) *
                       ((1.0 - b) * cg * cg * (b + b * k - 1.0) +
                        b * b * (1.0 - k) * om * om) /
                       (k * om * om * (1.0 - b * k));
  if (inner < 0.0) return std::nullopt;
  const double den = (1.0 - b) * (1.0 - k) * (1.0 - (1.0 + k) * b);
  if (std::abs(den) < 1e-14) return std::nullopt;
  const double s = std::sqrt(inner);
  return (1.0 - b * k) * (k * (b - s - 1.0) + 1.0 - b) / den;
}

std::optional<double> root_b3(const ModelParams& p) {
  const double om = 1.0 - p.r;
  const double cg = p.cost_gap();
  const double b = p.beta;
  const double k = p.k;
  const double a1 = b * (k * (b * k - 1.0) - 1.0) + 1.0;
  const double den = (b - 1.0) * om * om * a1;
  if (std::abs(den) < 1e-14) return std::nullopt;
  const double num0 = om * om * (-b * b * k + b * (k + 1.0) - 1.0);
  const double rad = (b - 1.0) * b * k * om * om * (b * k - 1.0) *
                     (cg * cg * a1 - b * (k - 1.0) * om * om);
  if (rad < 0.0) return std::nullopt;
  return (num0 + std::sqrt(rad)) / den;
}

std::optional<double> root_b5(const ModelParams& p) {
  const double om = 1.0 - p.r;
  const double cg = p.cost_gap();
  const double rad = om * om - cg * cg;
  if (rad <= 0.0) return std::nullopt;
  return std::sqrt(rad) / (om * std::sqrt(1.0 - p.beta));
}

// Delta at which the b5 and b3 curves cross (both sit at quality tv3 there);
// below it the lower wedge edge follows b5, above it b3.
std::optional<double> delta_cross_53(const ModelParams& p) {
  const double b = p.beta;
  const double rad = (1.0 - b) * (p.k * (2.0 - b * p.k) - 1.0) * b;
  if (rad <= 0.0) return std::nullopt;
  return 1.0 - (1.0 - p.r) * std::sqrt(rad) / ((1.0 - b) * p.c);
}

// Delta at which the b2 and b0 curves cross; below it the upper wedge edge
// follows b2, above it b0.
double delta_cross_20(const ModelParams& p) {
  return 1.0 -
         (1.0 - p.k) * (1.0 - p.r) * p.beta / ((1.0 - p.beta) * p.c);
}

// Bisect curve(delta) = v on (0, 1). The curves are monotone in delta;
// where a curve is undefined (complex root) it is replaced by an extreme
// sentinel on the side it approaches, which preserves bracketing.
template <typename Curve>
std::optional<double> delta_root(const ModelParams& base, double v,
                                 Curve curve, bool increasing) {
  const double sentinel = increasing ? -1e6 : 1e6;
  auto g = [&](double d) {
    ModelParams q = base;
    q.delta = d;
    const std::optional<double> val = curve(q);
    return (val ? *val : sentinel) - v;
  };
  return util::bisect(g, 1e-9, 1.0 - 1e-9, 1e-10);
}

// A candidate delta-root is accepted only if the two regimes' profits in
// fact tie there; curve crossings outside the active region are rejected.
bool gap_vanishes(const ModelParams& base, double v, double d) {
  ModelParams q = base;
  q.v = v;
  q.delta = d;
  return std::abs(profit_gap(q)) < 1e-7;
}

std::optional<double> pick_root(const ModelParams& base, double v,
                                std::optional<double> primary,
                                std::optional<double> secondary) {
  if (primary && gap_vanishes(base, v, *primary)) return primary;
  if (secondary && gap_vanishes(base, v, *secondary)) return secondary;
  return std::nullopt;
}

}  // namespace

RegimeDecision regime_choice(const ModelParams& p) {
  RegimeDecision d;
  d.profit_n = profit_N(p);
  d.penalty = optimal_penalty(p);
  d.profit_d_star = profit_D_star(p);
  d.margin = d.profit_d_star - d.profit_n;
  d.chosen = d.margin > 0.0 ? Regime::D : Regime::N;
  return d;
}

RegimeBoundaries regime_boundaries(const ModelParams& p, double v) {
  RegimeBoundaries rb;
  rb.b0 = root_b0(p);
  rb.b2 = root_b2(p);
  rb.b3 = root_b3(p);
  rb.b5 = root_b5(p);

  // Adoption threshold crossing: (1 - r - c(1-d))/(1 - r) = v has a closed
  // solution in d; it exists only for qualities the threshold can reach.
  const double om = 1.0 - p.r;
  const double d0 = 1.0 - (1.0 - v) * om / p.c;
  if (d0 > 0.0 && d0 < 1.0) rb.delta0 = d0;

  const std::optional<double> r5 =
      delta_root(p, v, root_b5, /*increasing=*/true);
  const std::optional<double> r3 =
      delta_root(p, v, root_b3, /*increasing=*/true);
  const std::optional<double> cross53 = delta_cross_53(p);
  const bool b5_side = r5 && (!cross53 || *r5 < *cross53);
  rb.delta1 = b5_side ? pick_root(p, v, r5, r3) : pick_root(p, v, r3, r5);

  const std::optional<double> r2 =
      delta_root(p, v, root_b2, /*increasing=*/false);
  const std::optional<double> r0 = delta_root(
      p, v, [](const ModelParams& q) { return std::optional<double>(root_b0(q)); },
      /*increasing=*/false);
  const bool b2_side = r2 && *r2 < delta_cross_20(p);
  rb.delta2 = b2_side ? pick_root(p, v, r2, r0) : pick_root(p, v, r0, r2);
  return rb;
}

std::optional<UpperBoundary> upper_boundary_root(const ModelParams& p) {
  const Thresholds t = compute_thresholds(p);
  const double lo = std::max(t.v_lo1, 0.0);
  auto in_window = [&](std::optional<double> root, double wlo, double whi) {
    return root && *root > wlo && *root < whi;
  };
  auto validated = [&](double v) {
    ModelParams q = p;
    q.v = v;
    return std::abs(profit_gap(q)) < 1e-7;
  };

  struct Candidate {
    std::optional<double> root;
    double wlo, whi;
    UpperBoundary::Source src;
  };
  const Candidate candidates[] = {
      {root_b0(p), lo, std::min(t.v_hat, t.tv3), UpperBoundary::Source::B0},
      {root_b2(p), t.tv3, t.v_hat, UpperBoundary::Source::B2},
      {root_b5(p), t.v_hat, t.tv3, UpperBoundary::Source::B5},
      {root_b3(p), std::max(t.v_hat, t.tv3), t.tv5, UpperBoundary::Source::B3},
  };
  for (const Candidate& c : candidates) {
    if (in_window(c.root, c.wlo, c.whi) && validated(*c.root)) {
      return UpperBoundary{*c.root, c.src};
    }
  }
  return std::nullopt;
}

StaticsPrediction statics_prediction(const ModelParams& p, Regime regime,
                                     StaticsVariable variable) {
  const Thresholds t = compute_thresholds(p);
  StaticsPrediction out;
  out.regime = regime;
  out.variable = variable;

  const double lo = std::max(t.v_lo1, 0.0);
  const double hi = p.v_bar;
  if (lo >= hi) return out;

  std::vector<double> splits;
  std::function<Sign(double)> sign_rule;

  if (regime == Regime::N && variable == StaticsVariable::V) {
    const double s = std::min(t.tv1, t.v_hat);
    splits = {s};
    sign_rule = [s](double v) { return v < s ? Sign::Negative : Sign::Positive; };
  } else if (regime == Regime::N && variable == StaticsVariable::Beta) {
    const double s = std::min(t.tv2, t.v_hat);
    splits = {s};
    sign_rule = [s](double v) { return v < s ? Sign::Positive : Sign::Negative; };
  } else if (regime == Regime::D && variable == StaticsVariable::V) {
    const double inner = std::min(t.v8, t.tv5);
    const bool late_dip = p.delta > t.delta0;
    splits = {t.v_d, t.tv3, inner};
    sign_rule = [&t, inner, late_dip](double v) {
      if (v < t.v_d) return Sign::Negative;
      if (v < t.tv3) return Sign::Positive;
      if (late_dip && v < inner) return Sign::Negative;
      return Sign::Positive;
    };
  } else {
    const double s = std::min(t.tv3, t.tv4);
    splits = {s};
    sign_rule = [s](double v) { return v < s ? Sign::Zero : Sign::Negative; };
  }

  std::vector<double> pts = {lo};
  std::sort(splits.begin(), splits.end());
  for (double s : splits) {
    if (s > lo + 1e-12 && s < hi - 1e-12 &&
        (pts.empty() || s > pts.back() + 1e-12)) {
      pts.push_back(s);
    }
  }
  pts.push_back(hi);

  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double a = pts[i];
    const double b = pts[i + 1];
    const Sign s = sign_rule(0.5 * (a + b));
    if (!out.intervals.empty() && out.intervals.back().sign == s) {
      out.intervals.back().hi = b;
    } else {
      out.intervals.push_back({a, b, s});
    }
  }
  return out;
}

}  // namespace disclose
