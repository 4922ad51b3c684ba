#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "disclose/closedform.hpp"
#include "disclose/equilibrium.hpp"
#include "disclose/util.hpp"

using namespace disclose;

namespace {

ModelParams base(double v) {
  ModelParams p;
  p.v = v;
  return p;
}

// Explicit argmax over all strategies of a regime, independent of the
// cutoff-based implementation. Ties resolve NAI > AIAI > AINAI > AI.
Strategy argmax_by_enumeration(const ModelParams& p, double f, Regime regime,
                               double penalty) {
  if (regime == Regime::N) {
    const UtilitiesN u = utilities_N(p, f);
    return u.nai >= u.ai ? Strategy::NAI : Strategy::AI;
  }
  const UtilitiesD u = utilities_D(p, f, penalty);
  Strategy best = Strategy::NAI;
  double val = u.nai;
  if (u.aiai > val) {
    best = Strategy::AIAI;
    val = u.aiai;
  }
  if (u.ainai > val) {
    best = Strategy::AINAI;
    val = u.ainai;
  }
  return best;
}

}  // namespace

TEST_CASE("utility spot values at the reference point") {
  const ModelParams p = base(1.0);
  const UtilitiesN u0 = utilities_N(p, 0.0);
  CHECK(u0.nai == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(u0.ai == doctest::Approx(0.03).epsilon(1e-12));
  const UtilitiesN u1 = utilities_N(p, 1.0);
  CHECK(u1.nai == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(u1.ai == doctest::Approx(0.45).epsilon(1e-12));
  const UtilitiesD d1 = utilities_D(p, 1.0, 0.0);
  CHECK(d1.nai == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(d1.ainai == doctest::Approx(0.366).epsilon(1e-12));
  CHECK(d1.aiai == doctest::Approx(0.45).epsilon(1e-12));
}

TEST_CASE("penalty only hits the concealment strategy") {
  const ModelParams p = base(1.2);
  const UtilitiesD a = utilities_D(p, 0.7, 0.0);
  const UtilitiesD b = utilities_D(p, 0.7, 0.5);
  CHECK(b.nai == a.nai);
  CHECK(b.aiai == a.aiai);
  // Expected fine: detected with prob beta, scaled by the retained share.
  CHECK(a.ainai - b.ainai ==
        doctest::Approx((1.0 - p.r) * p.beta * 0.5).epsilon(1e-12));
}

TEST_CASE("k=1 collapses concealment into open AI use") {
  ModelParams p = base(1.3);
  p.k = 1.0;  // outside the validated domain; utilities are still defined
  for (double f : {0.0, 0.3, 0.8, 1.0}) {
    CHECK(utilities_D(p, f, 0.0).ainai ==
          doctest::Approx(utilities_N(p, f).ai).epsilon(1e-12));
  }
}

TEST_CASE("best response equals enumeration on random draws") {
  util::Rng rng(42);
  for (int i = 0; i < 500; ++i) {
    ModelParams p;
    p.c = rng.uniform(0.05, 0.9);
    p.delta = rng.uniform(0.05, 0.95);
    p.beta = rng.uniform(0.55, 0.95);
    p.r = rng.uniform(0.05, 0.6);
    p.k = rng.uniform(0.05, 0.95);
    p.v = rng.uniform(0.1, 3.0);
    const double f = rng.uniform(0.0, 1.0);
    const double pen = rng.uniform(0.0, 1.0);
    CHECK(best_response(p, f, Regime::N) ==
          argmax_by_enumeration(p, f, Regime::N, 0.0));
    CHECK(best_response(p, f, Regime::D, pen) ==
          argmax_by_enumeration(p, f, Regime::D, pen));
  }
}

TEST_CASE("segmentation tiles [0,1] and matches pointwise best responses") {
  util::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    ModelParams p;
    p.c = rng.uniform(0.05, 0.9);
    p.delta = rng.uniform(0.05, 0.95);
    p.beta = rng.uniform(0.55, 0.95);
    p.r = rng.uniform(0.05, 0.6);
    p.k = rng.uniform(0.05, 0.95);
    p.v = rng.uniform(0.1, 3.0);
    const double pen = rng.uniform(0.0, 0.8);
    for (Regime regime : {Regime::N, Regime::D}) {
      const Segmentation seg = segment(p, regime, pen);
      REQUIRE(!seg.segments.empty());
      CHECK(seg.segments.front().lo == 0.0);
      CHECK(seg.segments.back().hi == 1.0);
      double edge = 0.0;
      double total = 0.0;
      for (const Segment& s : seg.segments) {
        CHECK(s.lo == doctest::Approx(edge).epsilon(1e-15));
        CHECK(s.hi > s.lo);
        edge = s.hi;
        total += s.measure();
        // interior point agrees with the independent argmax
        const double mid = 0.5 * (s.lo + s.hi);
        CHECK(argmax_by_enumeration(p, mid, regime, pen) == s.strategy);
      }
      CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("segment order never inverts within a regime") {
  // N: NAI below AI. D: NAI, then AINAI, then AIAI.
  util::Rng rng(11);
  auto rank = [](Strategy s) {
    switch (s) {
      case Strategy::NAI: return 0;
      case Strategy::AINAI: return 1;
      case Strategy::AI: return 2;
      case Strategy::AIAI: return 2;
    }
    return 3;
  };
  for (int i = 0; i < 200; ++i) {
    ModelParams p;
    p.c = rng.uniform(0.05, 0.9);
    p.delta = rng.uniform(0.05, 0.95);
    p.beta = rng.uniform(0.55, 0.95);
    p.r = rng.uniform(0.05, 0.6);
    p.k = rng.uniform(0.05, 0.95);
    p.v = rng.uniform(0.1, 3.0);
    const double pen = rng.uniform(0.0, 0.8);
    for (Regime regime : {Regime::N, Regime::D}) {
      const Segmentation seg = segment(p, regime, pen);
      for (std::size_t j = 1; j < seg.segments.size(); ++j) {
        CHECK(rank(seg.segments[j - 1].strategy) < rank(seg.segments[j].strategy));
      }
    }
  }
}

TEST_CASE("strategy_at resolves boundaries by tie preference") {
  const ModelParams p = base(1.0);
  const Segmentation seg = segment(p, Regime::D, 0.0);
  REQUIRE(seg.segments.size() == 3);
  const double f1 = seg.segments[0].hi;
  const double f2 = seg.segments[1].hi;
  CHECK(seg.strategy_at(0.0) == Strategy::NAI);
  CHECK(seg.strategy_at(f1) == Strategy::NAI);    // NAI wins its ties
  CHECK(seg.strategy_at(f2) == Strategy::AIAI);   // AIAI beats AINAI on ties
  CHECK(seg.strategy_at(1.0) == Strategy::AIAI);
}

TEST_CASE("concealment band shrinks with the penalty") {
  const ModelParams p = base(1.5);
  const double pbar = compute_thresholds(p).p_bar;
  double prev = 1.0;
  for (int i = 0; i <= 20; ++i) {
    const double pen = pbar * i / 20.0;
    const double m = segment(p, Regime::D, pen).measure_of(Strategy::AINAI);
    CHECK(m <= prev + 1e-12);
    prev = m;
  }
  CHECK(segment(p, Regime::D, pbar).measure_of(Strategy::AINAI) == 0.0);
}

TEST_CASE("strategy sets along the quality axis") {
  auto set_at = [](double v) { return strategy_set(base(v)); };
  CHECK(set_at(0.5).str() == "NAI");
  CHECK(set_at(0.8).str() == "NAI+AIAI");
  CHECK(set_at(1.0).str() == "NAI+AIAI");
  CHECK(set_at(1.5).str() == "NAI+AINAI+AIAI");
  CHECK(set_at(2.0).str() == "AINAI+AIAI");
}

TEST_CASE("declared sets are realized with positive measure") {
  for (double v = 0.35; v < 2.95; v += 0.2) {
    const ModelParams p = base(v);
    const double pstar = optimal_penalty(p).p;
    const StrategySet realized =
        present_strategies(segment(p, Regime::D, pstar), 1e-12);
    CHECK(strategy_set(p) == realized);
  }
}

TEST_CASE("present_strategies honors the measure floor") {
  const ModelParams p = base(1.5);
  const Segmentation seg = segment(p, Regime::D, 0.0);
  const StrategySet all = present_strategies(seg, 0.0);
  CHECK(all.ainai);
  // A floor larger than the band suppresses it.
  const double band = seg.measure_of(Strategy::AINAI);
  const StrategySet floored = present_strategies(seg, band + 1e-9);
  CHECK(!floored.ainai);
}
