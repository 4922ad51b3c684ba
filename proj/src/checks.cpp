#include "disclose/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "disclose/closedform.hpp"
#include "disclose/equilibrium.hpp"
#include "disclose/policy.hpp"
#include "disclose/welfare.hpp"

namespace disclose {

namespace {

struct DrawOutcome {
  std::vector<Failure> failures;
  long long flagged = 0;
};

class Recorder {
 public:
  Recorder(int draw, const ModelParams& p, DrawOutcome& out)
      : draw_(draw), params_(p), out_(out) {}

  // Negated comparisons so NaN counts as a failure.
  void close(const char* claim, double observed, double expected, double tol) {
    if (!(std::abs(observed - expected) <= tol)) fail(claim, observed, expected);
  }
  void leq(const char* claim, double lhs, double rhs, double slack) {
    if (!(lhs <= rhs + slack)) fail(claim, lhs, rhs);
  }
  void holds(const char* claim, bool ok, double observed, double expected) {
    if (!ok) fail(claim, observed, expected);
  }
  void flag() { ++out_.flagged; }

 private:
  void fail(const char* claim, double observed, double expected) {
    out_.failures.push_back({draw_, claim, observed, expected, params_});
  }
  int draw_;
  const ModelParams& params_;
  DrawOutcome& out_;
};

double claimed_pbar(const ModelParams& p, const CheckConfig& cfg) {
  if (!cfg.pbar_denominator_r) return compute_thresholds(p).p_bar;
  const double cg = p.cost_gap();
  const double num = cg * (1.0 - p.beta * p.k) +
                     (1.0 - p.r) * (p.beta * p.k - 1.0 + (1.0 - p.beta) * p.v);
  return num / (p.beta * p.r);
}

double penalty_draw_cap(const Thresholds& t) {
  return 1.5 * std::max({t.p_bar, t.p_tilde, 0.1});
}

void suite_indifference(const ModelParams& p, const CheckConfig& cfg,
                        util::Rng& rng, Recorder& rec) {
  const Thresholds t = compute_thresholds(p);
  rec.close("full-adoption threshold rescales the adoption threshold",
            t.v_hat * (1.0 - p.beta), t.v_lo1, 1e-10);
  rec.close("concealment threshold is tv3 times the adoption threshold",
            t.v_lo2, t.tv3 * t.v_lo1, 1e-10);

  const double f0 = cutoff_f0(p);
  if (f0 > 1e-9 && f0 < 1.0 - 1e-9) {
    const UtilitiesN u = utilities_N(p, f0);
    rec.close("f0 equalizes NAI and AI payoffs", u.nai, u.ai, 1e-9);
  }

  const double pen = rng.uniform(0.0, penalty_draw_cap(t));
  const Cutoffs cuts = cutoffs_at(p, pen);
  if (cuts.f1 < cuts.f2) {
    if (cuts.f1 > 1e-9 && cuts.f1 < 1.0 - 1e-9) {
      const UtilitiesD u = utilities_D(p, cuts.f1, pen);
      rec.close("f1 equalizes NAI and AINAI payoffs", u.nai, u.ainai, 1e-9);
    }
    if (cuts.f2 > 1e-9 && cuts.f2 < 1.0 - 1e-9) {
      const UtilitiesD u = utilities_D(p, cuts.f2, pen);
      rec.close("f2 equalizes AINAI and AIAI payoffs", u.ainai, u.aiai, 1e-9);
    }
  } else if (cuts.f12 > 1e-9 && cuts.f12 < 1.0 - 1e-9) {
    const UtilitiesD u = utilities_D(p, cuts.f12, pen);
    rec.close("f12 equalizes NAI and AIAI payoffs", u.nai, u.aiai, 1e-9);
  }

  // The deterrence cap is the penalty at which the screening band (f1, f2)
  // collapses; rebuild that penalty by bisection and compare.
  const double cap = claimed_pbar(p, cfg);
  auto band = [&](double q) {
    const Cutoffs c = cutoffs_at(p, q);
    return c.f1 - c.f2;
  };
  const std::optional<double> rebuilt = util::bisect_expanding(band, -1.0, 1.0);
  if (rebuilt) {
    rec.close("screening band collapses exactly at the deterrence cap", cap,
              *rebuilt, 1e-7);
  } else {
    rec.flag();
  }
  const Cutoffs at_cap = cutoffs_at(p, cap);
  rec.close("f1 at the cap meets the two-way cutoff", at_cap.f1, at_cap.f12,
            1e-7);
  rec.close("f2 at the cap meets the two-way cutoff", at_cap.f2, at_cap.f12,
            1e-7);
}

void suite_oracle_equivalence(const ModelParams& p, const CheckConfig& cfg,
                              util::Rng& rng, Recorder& rec) {
  const double tol = cfg.numerics.abs_tol;
  rec.close("Pi_N matches brute force", profit_N(p),
            oracle_profit(p, Regime::N, 0.0, cfg.oracle), tol);

  const Thresholds t = compute_thresholds(p);
  const PenaltyChoice pc = optimal_penalty(p);
  const double pens[3] = {0.0, pc.p, rng.uniform(0.0, penalty_draw_cap(t))};
  const char* claims[3] = {"Pi_D(0) matches brute force",
                           "Pi_D(p*) matches brute force",
                           "Pi_D(random p) matches brute force"};
  for (int i = 0; i < 3; ++i) {
    rec.close(claims[i], profit_D(p, pens[i]),
              oracle_profit(p, Regime::D, pens[i], cfg.oracle), tol);
  }
}

void suite_penalty_optimality(const ModelParams& p, const CheckConfig& cfg,
                              Recorder& rec) {
  const PenaltyChoice pc = optimal_penalty(p);
  const double star = profit_D_star(p);
  rec.close("optimal-profit formula equals profit at p*", star,
            profit_D(p, pc.p), 1e-12);

  // Route 1: the closed-form profit itself, maximized numerically.
  const Thresholds t = compute_thresholds(p);
  const double cap =
      cfg.oracle.p_max_factor * std::max({t.p_bar, t.p_tilde, 0.01});
  auto closed = [&](double q) { return profit_D(p, q); };
  double best = closed(0.0);
  double best_p = 0.0;
  for (int i = 1; i <= cfg.oracle.p_cells; ++i) {
    const double q = cap * i / cfg.oracle.p_cells;
    const double val = closed(q);
    if (val > best) {
      best = val;
      best_p = q;
    }
  }
  const double h = cap / cfg.oracle.p_cells;
  const double refined = util::golden_section_max(
      closed, std::max(0.0, best_p - h), best_p + h, cfg.oracle.refine_iters);
  best = std::max(best, closed(refined));
  rec.leq("no penalty on the refined grid beats p*", best, star, 1e-9);

  // Route 2: full brute-force search (coarser skill grid, so a looser
  // tolerance that scales with the quadrature error).
  OracleConfig search = cfg.oracle;
  search.f_cells = std::min(search.f_cells, 20'000L);
  const PenaltySearch found = oracle_p_star(p, search);
  const double tol = std::max(cfg.numerics.abs_tol,
                              20.0 / static_cast<double>(search.f_cells));
  rec.close("brute-force penalty search lands on the optimal profit",
            found.profit, star, tol);
}

std::optional<Sign> sign_at(const StaticsPrediction& pred, double v) {
  for (const SignInterval& iv : pred.intervals) {
    if (v >= iv.lo && v <= iv.hi) return iv.sign;
  }
  return std::nullopt;
}

void suite_statics(const ModelParams& p, Recorder& rec) {
  constexpr double kH = 1e-6;
  constexpr double kMargin = 1e-3;   // slope dead band
  constexpr double kEdge = 1e-3;     // distance kept from interval edges

  const struct {
    Regime regime;
    StaticsVariable var;
    const char* claim;
  } combos[] = {
      {Regime::N, StaticsVariable::V, "slope of Pi_N in v has predicted sign"},
      {Regime::N, StaticsVariable::Beta,
       "slope of Pi_N in beta has predicted sign"},
      {Regime::D, StaticsVariable::V, "slope of Pi_D* in v has predicted sign"},
      {Regime::D, StaticsVariable::Beta,
       "slope of Pi_D* in beta has predicted sign"},
  };

  for (const auto& combo : combos) {
    const StaticsPrediction pred = statics_prediction(p, combo.regime, combo.var);
    auto profit_at = [&](double v, double beta) {
      ModelParams q = p;
      q.v = v;
      q.beta = beta;
      return combo.regime == Regime::N ? profit_N(q) : profit_D_star(q);
    };
    for (const SignInterval& iv : pred.intervals) {
      const double width = iv.hi - iv.lo;
      if (width < 2.0 * kEdge + 1e-6) {
        rec.flag();  // too narrow to probe at this margin
        continue;
      }
      for (int j = 0; j < 5; ++j) {
        const double v =
            iv.lo + kEdge + (j + 0.5) / 5.0 * (width - 2.0 * kEdge);
        double fd = 0.0;
        if (combo.var == StaticsVariable::V) {
          fd = (profit_at(v + kH, p.beta) - profit_at(v - kH, p.beta)) /
               (2.0 * kH);
        } else {
          // A beta step moves the thresholds; skip points whose predicted
          // sign is not stable across the step.
          ModelParams q = p;
          bool stable = true;
          for (double b : {p.beta - kH, p.beta + kH}) {
            q.beta = b;
            const auto s = sign_at(statics_prediction(q, combo.regime, combo.var), v);
            if (!s || *s != iv.sign) stable = false;
          }
          if (!stable) {
            rec.flag();
            continue;
          }
          fd = (profit_at(v, p.beta + kH) - profit_at(v, p.beta - kH)) /
               (2.0 * kH);
        }
        switch (iv.sign) {
          case Sign::Positive:
            rec.holds(combo.claim, fd > -kMargin, fd, 1.0);
            break;
          case Sign::Negative:
            rec.holds(combo.claim, fd < kMargin, fd, -1.0);
            break;
          case Sign::Zero:
            rec.holds(combo.claim, std::abs(fd) <= kMargin, fd, 0.0);
            break;
        }
      }
    }

    // Cross-check (v-combos only): the number of strict slope sign changes
    // along a v-grid should match the predicted interval pattern. Counted as
    // flagged, not failed: the grid can miss or double-count near edges.
    if (combo.var == StaticsVariable::V && pred.intervals.size() >= 1) {
      int predicted = static_cast<int>(pred.intervals.size()) - 1;
      int seen = 0;
      int last = 0;
      const double lo = pred.intervals.front().lo + kEdge;
      const double hi = pred.intervals.back().hi - kEdge;
      if (hi > lo) {
        for (int g = 0; g <= 40; ++g) {
          const double v = lo + (hi - lo) * g / 40.0;
          const double fd =
              (profit_at(v + kH, p.beta) - profit_at(v - kH, p.beta)) /
              (2.0 * kH);
          const int s = fd > kMargin ? 1 : (fd < -kMargin ? -1 : 0);
          if (s != 0) {
            if (last != 0 && s != last) ++seen;
            last = s;
          }
        }
        if (seen != predicted) rec.flag();
      }
    }
  }
}

void suite_welfare_order(const ModelParams& p, Recorder& rec) {
  const WelfareReport w = welfare_comparison(p);
  rec.leq("disclosure never raises creator surplus", w.cs_d, w.cs_n, 1e-9);
  rec.leq("disclosure never lowers transparency", w.t_n, w.t_d, 1e-9);
  rec.holds("transparency stays within [beta, 1]",
            w.t_n >= p.beta - 1e-12 && w.t_n <= 1.0 + 1e-12 &&
                w.t_d >= p.beta - 1e-12 && w.t_d <= 1.0 + 1e-12,
            std::min(w.t_n, w.t_d), p.beta);
  const double q_lo = std::min(1.0, p.v) - 1e-12;
  const double q_hi = std::max(1.0, p.v) + 1e-12;
  rec.holds("average quality stays between the pure levels",
            w.q_n >= q_lo && w.q_n <= q_hi && w.q_d >= q_lo && w.q_d <= q_hi,
            w.q_d, p.v);

  const double diff = w.q_d - w.q_n;
  switch (quality_comparison_sign(p)) {
    case Sign::Positive:
      rec.holds("quality gap has predicted sign", diff > -1e-9, diff, 1.0);
      break;
    case Sign::Negative:
      rec.holds("quality gap has predicted sign", diff < 1e-9, diff, -1.0);
      break;
    case Sign::Zero:
      rec.holds("quality gap has predicted sign", std::abs(diff) <= 1e-9, diff,
                0.0);
      break;
  }
}

double set_mask(const StrategySet& s) {
  return (s.nai ? 1.0 : 0.0) + (s.ai ? 2.0 : 0.0) + (s.ainai ? 4.0 : 0.0) +
         (s.aiai ? 8.0 : 0.0);
}

void suite_region_consistency(const ModelParams& p, Recorder& rec) {
  rec.holds("draw box keeps parameters non-degenerate",
            validate(p).region == ParamRegion::Active, 0.0, 1.0);

  const PenaltyChoice pc = optimal_penalty(p);
  const Segmentation seg_n = segment(p, Regime::N);
  const Segmentation seg_d = segment(p, Regime::D, pc.p);
  for (const Segmentation* seg : {&seg_n, &seg_d}) {
    double total = 0.0;
    double edge = 0.0;
    for (std::size_t i = 0; i < seg->segments.size(); ++i) {
      const Segment& s = seg->segments[i];
      rec.holds("segments are ordered with positive measure", s.hi > s.lo,
                s.hi, s.lo);
      rec.close("segments tile without gaps", s.lo, edge, 1e-12);
      edge = s.hi;
      total += s.measure();
    }
    rec.close("segment measures sum to one", total, 1.0, 1e-12);
    rec.close("last segment reaches the top skill", edge, 1.0, 1e-12);
  }

  const StrategySet declared = strategy_set(p);
  const StrategySet realized = present_strategies(seg_d, 1e-12);
  rec.holds("declared strategy set is realized at p*", declared == realized,
            set_mask(realized), set_mask(declared));

  const double m_nai = seg_d.measure_of(Strategy::NAI);
  const double m_ainai = seg_d.measure_of(Strategy::AINAI);
  switch (pc.region) {
    case PenaltyRegion::AllHuman:
      rec.holds("all-human region is all human and free",
                pc.p == 0.0 && m_nai > 1.0 - 1e-12, m_nai, 1.0);
      break;
    case PenaltyRegion::NoThreat:
      rec.holds("no-threat region needs no penalty and has no concealment",
                pc.p == 0.0 && m_ainai < 1e-12, m_ainai, 0.0);
      break;
    case PenaltyRegion::FullDeterrence:
      rec.holds("deterrence region pays a positive cap and kills concealment",
                pc.p > 0.0 && m_ainai < 1e-12, m_ainai, 0.0);
      break;
    case PenaltyRegion::PartialScreening:
      rec.holds("screening region keeps a positive concealment band",
                pc.p > 0.0 && m_ainai > 1e-9, m_ainai, 0.1);
      break;
    case PenaltyRegion::Deregulation:
      rec.holds("deregulation region is free with no hand-made content",
                pc.p == 0.0 && m_nai < 1e-9 && m_ainai > 1e-9, m_nai, 0.0);
      break;
  }

  const RegimeDecision rd = regime_choice(p);
  rec.holds("regime choice follows the profit margin",
            (rd.chosen == Regime::D) == (rd.margin > 0.0), rd.margin, 0.0);
  rec.close("decision reports the closed-form profits", rd.profit_n,
            profit_N(p), 0.0);
  rec.close("decision reports the optimal disclosure profit", rd.profit_d_star,
            profit_D_star(p), 0.0);
}

}  // namespace

std::string to_string(SuiteId id) {
  switch (id) {
    case SuiteId::Indifference: return "indifference";
    case SuiteId::OracleEquivalence: return "oracle-equivalence";
    case SuiteId::PenaltyOptimality: return "penalty-optimality";
    case SuiteId::Statics: return "statics";
    case SuiteId::WelfareOrder: return "welfare-order";
    case SuiteId::RegionConsistency: return "region-consistency";
  }
  return "unknown";
}

SuiteId parse_suite(const std::string& name) {
  for (SuiteId id : {SuiteId::Indifference, SuiteId::OracleEquivalence,
                     SuiteId::PenaltyOptimality, SuiteId::Statics,
                     SuiteId::WelfareOrder, SuiteId::RegionConsistency}) {
    if (to_string(id) == name) return id;
  }
  throw UnknownSuite(name);
}

ModelParams draw_params(util::Rng& rng) {
  // Box chosen so every penalty region and both regime choices occur with
  // useful frequency; draw order is part of the reproducibility contract.
  ModelParams p;
  p.c = rng.uniform(0.05, 0.9);
  p.delta = rng.uniform(0.05, 0.95);
  p.beta = rng.uniform(0.55, 0.95);
  p.r = rng.uniform(0.05, 0.6);
  p.k = rng.uniform(0.05, 0.95);
  p.v_bar = 3.0;
  const double lo = std::max(adoption_threshold(p), 0.0) + 0.01;
  p.v = rng.uniform(lo, 3.0);
  return p;
}

CheckReport run_suite(SuiteId id, const CheckConfig& cfg) {
  validate(cfg.numerics);
  validate(cfg.oracle);
  const auto start = std::chrono::steady_clock::now();

  std::vector<DrawOutcome> outcomes(static_cast<std::size_t>(cfg.draws));
  util::parallel_for(outcomes.size(), [&](std::size_t i) {
    util::Rng rng = util::Rng::stream(cfg.seed, i);
    const ModelParams p = draw_params(rng);
    Recorder rec(static_cast<int>(i), p, outcomes[i]);
    switch (id) {
      case SuiteId::Indifference:
        suite_indifference(p, cfg, rng, rec);
        break;
      case SuiteId::OracleEquivalence:
        suite_oracle_equivalence(p, cfg, rng, rec);
        break;
      case SuiteId::PenaltyOptimality:
        suite_penalty_optimality(p, cfg, rec);
        break;
      case SuiteId::Statics:
        suite_statics(p, rec);
        break;
      case SuiteId::WelfareOrder:
        suite_welfare_order(p, rec);
        break;
      case SuiteId::RegionConsistency:
        suite_region_consistency(p, rec);
        break;
    }
  });

  CheckReport report;
  report.suite = id;
  report.draws = cfg.draws;
  report.seed = cfg.seed;
  for (DrawOutcome& out : outcomes) {
    report.flagged += out.flagged;
    for (Failure& f : out.failures) {
      ++report.failure_count;
      if (report.failures.size() <
          static_cast<std::size_t>(kMaxStoredFailures)) {
        report.failures.push_back(std::move(f));
      }
    }
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

nlohmann::ordered_json report_json(const CheckReport& report) {
  nlohmann::ordered_json j;
  j["suite"] = to_string(report.suite);
  j["draws"] = report.draws;
  j["seed"] = report.seed;
  j["failure_count"] = report.failure_count;
  j["flagged"] = report.flagged;
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const Failure& f : report.failures) {
    failures.push_back({{"draw", f.draw},
                        {"claim", f.claim},
                        {"observed", f.observed},
                        {"expected", f.expected},
                        {"params",
                         {{"v", f.params.v},
                          {"c", f.params.c},
                          {"delta", f.params.delta},
                          {"beta", f.params.beta},
                          {"r", f.params.r},
                          {"k", f.params.k}}}});
  }
  j["failures"] = failures;
  return j;
}

}  // namespace disclose
