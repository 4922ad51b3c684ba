#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "disclose/closedform.hpp"
#include "disclose/equilibrium.hpp"
#include "disclose/util.hpp"

using namespace disclose;

namespace {

// Reference point used throughout: c=0.5, delta=0.5, beta=0.6, r=0.3, k=0.8.
ModelParams base(double v) {
  ModelParams p;
  p.v = v;
  return p;
}

// Independent reconstruction of f0: bisect the N-regime utility gap.
double f0_by_bisection(const ModelParams& p) {
  auto gap = [&](double f) {
    const UtilitiesN u = utilities_N(p, f);
    return u.nai - u.ai;
  };
  return *util::bisect(gap, 0.0, 1.0, 1e-12);
}

// Independent reconstruction of p_bar: bisect the screening-band width.
double pbar_by_bisection(const ModelParams& p) {
  auto band = [&](double pen) {
    const Cutoffs c = cutoffs_at(p, pen);
    return c.f1 - c.f2;
  };
  return *util::bisect_expanding(band, -1.0, 1.0, 1e-12);
}

}  // namespace

TEST_CASE("threshold values at the reference point") {
  const Thresholds t = compute_thresholds(base(1.0));
  CHECK(t.v_lo1 == doctest::Approx(0.6428571428571428).epsilon(1e-12));
  CHECK(t.v_lo2 == doctest::Approx(0.8357142857142855).epsilon(1e-12));
  CHECK(t.v_hat == doctest::Approx(1.6071428571428570).epsilon(1e-12));
  CHECK(t.tv1 == doctest::Approx(0.9340497736158585).epsilon(1e-12));
  CHECK(t.tv2 == doctest::Approx(1.3571428571428572).epsilon(1e-12));
  CHECK(t.tv3 == doctest::Approx(1.3).epsilon(1e-12));
  CHECK(t.tv4 == doctest::Approx(1.6838821763037548).epsilon(1e-12));
  CHECK(t.tv5 == doctest::Approx(1.8814104258682580).epsilon(1e-12));
  CHECK(t.v_d == t.tv1);
  CHECK(t.v8 == doctest::Approx(1.0916981482712040).epsilon(1e-12));
  CHECK(t.p_hat == doctest::Approx(-0.4047619047619048).epsilon(1e-12));
  CHECK(t.p_bar == doctest::Approx(0.1095238095238096).epsilon(1e-12));
  CHECK(t.p_tilde == doctest::Approx(0.3095238095238095).epsilon(1e-12));
  CHECK(t.delta0 == doctest::Approx(0.0300515477614288).epsilon(1e-12));
}

TEST_CASE("threshold identities across parameter points") {
  for (double v : {0.7, 1.0, 1.4, 2.2}) {
    for (double delta : {0.1, 0.5, 0.9}) {
      ModelParams p = base(v);
      p.delta = delta;
      const Thresholds t = compute_thresholds(p);
      CHECK(t.v_hat * (1.0 - p.beta) == doctest::Approx(t.v_lo1).epsilon(1e-12));
      CHECK(t.v_lo2 == doctest::Approx(t.tv3 * t.v_lo1).epsilon(1e-12));
      const double om = 1.0 - p.r;
      const double cg = p.cost_gap();
      CHECK(t.tv1 * t.tv1 * om * om + cg * cg ==
            doctest::Approx(om * om).epsilon(1e-12));
      CHECK(t.tv4 * (1.0 - p.beta) ==
            doctest::Approx(t.tv1 * std::sqrt(1.0 - p.beta * p.k)).epsilon(1e-12));
      // The orderings tv4 vs tv3 and tv5 vs tv3 flip together at delta0.
      CHECK((t.tv4 < t.tv3) == (p.delta < t.delta0));
      CHECK((t.tv5 < t.tv3) == (p.delta < t.delta0));
    }
  }
}

TEST_CASE("penalty landmarks anchored to quality thresholds") {
  const Thresholds t0 = compute_thresholds(base(1.0));
  ModelParams p = base(t0.v_lo2);
  CHECK(compute_thresholds(p).p_bar == doctest::Approx(0.0).epsilon(1e-12));
  p = base(t0.v_hat);
  CHECK(compute_thresholds(p).p_hat == doctest::Approx(0.0).epsilon(1e-12));
  p = base(t0.tv3);
  const Thresholds t3 = compute_thresholds(p);
  CHECK(t3.p_bar == doctest::Approx(t3.p_tilde).epsilon(1e-12));
  // sign(p_bar - p_tilde) tracks sign(v - tv3)
  CHECK(compute_thresholds(base(1.2)).p_bar < compute_thresholds(base(1.2)).p_tilde);
  CHECK(compute_thresholds(base(1.4)).p_bar > compute_thresholds(base(1.4)).p_tilde);
}

TEST_CASE("cutoffs at the reference point") {
  const ModelParams p = base(1.0);
  CHECK(cutoff_f0(p) == doctest::Approx(0.4047619047619048).epsilon(1e-12));
  const Cutoffs at0 = cutoffs_at(p, 0.0);
  CHECK(at0.f2 == doctest::Approx(0.7692307692307692).epsilon(1e-12));
  CHECK(at0.f12 == doctest::Approx(0.6428571428571428).epsilon(1e-12));
  // All three cutoffs coincide at p_bar.
  const double pbar = compute_thresholds(p).p_bar;
  const Cutoffs atbar = cutoffs_at(p, pbar);
  CHECK(atbar.f1 == doctest::Approx(atbar.f12).epsilon(1e-12));
  CHECK(atbar.f2 == doctest::Approx(atbar.f12).epsilon(1e-12));
  // f1 vanishes at p_hat.
  ModelParams hi = base(2.0);
  const double phat = compute_thresholds(hi).p_hat;
  CHECK(phat > 0.0);
  CHECK(cutoffs_at(hi, phat).f1 == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("cutoffs agree with bisection reconstructions") {
  for (double v : {0.8, 1.0, 1.3, 1.55}) {
    const ModelParams p = base(v);
    CHECK(cutoff_f0(p) == doctest::Approx(f0_by_bisection(p)).epsilon(1e-9));
    CHECK(compute_thresholds(p).p_bar ==
          doctest::Approx(pbar_by_bisection(p)).epsilon(1e-9));
  }
  // p_bar is negative below the concealment threshold; bisection still finds it.
  const ModelParams lo = base(0.7);
  CHECK(compute_thresholds(lo).p_bar < 0.0);
  CHECK(compute_thresholds(lo).p_bar ==
        doctest::Approx(pbar_by_bisection(lo)).epsilon(1e-9));
}

TEST_CASE("profit spots, non-disclosure") {
  CHECK(profit_N(base(0.5)) == doctest::Approx(0.3).epsilon(1e-12));  // = r
  CHECK(profit_N(base(1.0)) == doctest::Approx(0.26811224489795915).epsilon(1e-12));
  CHECK(profit_N(base(2.0)) == doctest::Approx(0.42).epsilon(1e-12));
  CHECK(profit_N(base(2.5)) == doctest::Approx(0.525).epsilon(1e-12));
}

TEST_CASE("profit spots, disclosure at the optimal penalty") {
  CHECK(profit_D_star(base(1.0)) == doctest::Approx(0.28086734693877546).epsilon(1e-12));
  CHECK(profit_D_star(base(1.5)) == doctest::Approx(0.31480900052328625).epsilon(1e-12));
  CHECK(profit_D_star(base(2.0)) == doctest::Approx(0.3923076923076923).epsilon(1e-12));
  CHECK(profit_D_star(base(2.5)) == doctest::Approx(0.49038461538461536).epsilon(1e-12));
}

TEST_CASE("optimal penalty regions along the quality axis") {
  PenaltyChoice pc = optimal_penalty(base(0.5));
  CHECK(pc.region == PenaltyRegion::AllHuman);
  CHECK(pc.p == 0.0);
  pc = optimal_penalty(base(0.8));
  CHECK(pc.region == PenaltyRegion::NoThreat);
  CHECK(pc.p == 0.0);
  pc = optimal_penalty(base(1.0));
  CHECK(pc.region == PenaltyRegion::FullDeterrence);
  CHECK(pc.p == doctest::Approx(0.1095238095238096).epsilon(1e-12));
  pc = optimal_penalty(base(1.5));
  CHECK(pc.region == PenaltyRegion::PartialScreening);
  CHECK(pc.p == doctest::Approx(0.3095238095238095).epsilon(1e-12));
  pc = optimal_penalty(base(2.0));
  CHECK(pc.region == PenaltyRegion::Deregulation);
  CHECK(pc.p == 0.0);
}

TEST_CASE("region tags serialize kebab-case") {
  CHECK(std::string(to_string(PenaltyRegion::AllHuman)) == "all-human");
  CHECK(std::string(to_string(PenaltyRegion::NoThreat)) == "no-threat");
  CHECK(std::string(to_string(PenaltyRegion::FullDeterrence)) == "full-deterrence");
  CHECK(std::string(to_string(PenaltyRegion::PartialScreening)) == "partial-screening");
  CHECK(std::string(to_string(PenaltyRegion::Deregulation)) == "deregulation");
}

TEST_CASE("profit_D is flat past the deterrence cap") {
  const ModelParams p = base(1.0);
  const double star = profit_D_star(p);
  for (double pen : {0.11, 0.2, 1.0, 10.0}) {
    CHECK(profit_D(p, pen) == doctest::Approx(star).epsilon(1e-12));
  }
}

TEST_CASE("profit_D is unimodal in p with an interior peak when screening") {
  const ModelParams p = base(1.5);
  const Thresholds t = compute_thresholds(p);
  CHECK(t.p_tilde < t.p_bar);
  const double peak = profit_D(p, t.p_tilde);
  CHECK(peak > profit_D(p, 0.0));
  CHECK(peak > profit_D(p, t.p_bar));
  CHECK(peak > profit_D(p, t.p_tilde - 0.05));
  CHECK(peak > profit_D(p, t.p_tilde + 0.05));
  // single local max on a grid over [0, p_bar]
  int local_maxima = 0;
  const int n = 200;
  double prev = profit_D(p, 0.0);
  double cur = profit_D(p, t.p_bar / n);
  for (int i = 2; i <= n; ++i) {
    const double next = profit_D(p, t.p_bar * i / n);
    if (cur > prev + 1e-15 && cur > next + 1e-15) ++local_maxima;
    prev = cur;
    cur = next;
  }
  CHECK(local_maxima <= 1);
}

TEST_CASE("direct optimal-profit formula equals profit at p*") {
  for (double v = 0.3; v < 2.95; v += 0.05) {
    const ModelParams p = base(v);
    CHECK(profit_D_star(p) ==
          doctest::Approx(profit_D(p, optimal_penalty(p).p)).epsilon(1e-12));
  }
  ModelParams q;
  q.c = 0.7;
  q.delta = 0.2;
  q.beta = 0.85;
  q.r = 0.45;
  q.k = 0.3;
  for (double v = 0.2; v < 2.95; v += 0.1) {
    q.v = v;
    CHECK(profit_D_star(q) ==
          doctest::Approx(profit_D(q, optimal_penalty(q).p)).epsilon(1e-12));
  }
}

TEST_CASE("profits are continuous across branch thresholds") {
  const Thresholds t = compute_thresholds(base(1.0));
  const double eps = 1e-9;
  for (double v : {t.v_lo1, t.v_hat}) {
    CHECK(std::abs(profit_N(base(v + eps)) - profit_N(base(v - eps))) < 1e-6);
  }
  for (double v : {t.v_lo1, t.v_lo2, t.v_hat, t.tv3, t.tv5}) {
    CHECK(std::abs(profit_D_star(base(v + eps)) - profit_D_star(base(v - eps))) < 1e-6);
  }
  // and in p at the kinks of Pi_D
  const ModelParams hi = base(2.0);
  const Thresholds th = compute_thresholds(hi);
  for (double pen : {th.p_hat, th.p_bar}) {
    CHECK(std::abs(profit_D(hi, pen + eps) - profit_D(hi, pen - eps)) < 1e-6);
  }
  // Under the tv4 < tv3 ordering the deterrence branch ends at tv4 instead.
  ModelParams u = base(1.0);
  u.c = 0.6;
  u.delta = 0.05;
  const Thresholds tu = compute_thresholds(u);
  CHECK(u.delta < tu.delta0);
  CHECK(tu.tv4 < tu.tv3);
  ModelParams ua = u, ub = u;
  ua.v = tu.tv4 - eps;
  ub.v = tu.tv4 + eps;
  CHECK(std::abs(profit_D_star(ua) - profit_D_star(ub)) < 1e-6);
}

TEST_CASE("degenerate corner: cost gap above 1-r") {
  ModelParams p;
  p.c = 0.9;
  p.delta = 0.05;
  p.r = 0.6;
  p.v = 1.2;
  const Thresholds t = compute_thresholds(p);
  CHECK(t.v_lo1 < 0.0);
  CHECK(t.tv1 == 0.0);  // clamped radicand
  CHECK(t.tv4 == 0.0);
  CHECK(t.v8 == 0.0);
  // Everyone adopts; both profits follow the full-adoption branches.
  CHECK(profit_N(p) == doctest::Approx((2.0 - p.beta) * p.r * p.v / 2.0).epsilon(1e-12));
  CHECK(profit_D_star(p) > 0.0);
  CHECK(std::isfinite(profit_D_star(p)));
}
