#include "disclose/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "disclose/closedform.hpp"
#include "disclose/util.hpp"

namespace disclose {

void validate(const OracleConfig& cfg) {
  if (cfg.f_cells < 1000) throw RangeError("f_cells", "f_cells must be at least 1000");
  if (cfg.p_cells < 100) throw RangeError("p_cells", "p_cells must be at least 100");
  if (cfg.refine_iters < 30)
    throw RangeError("refine_iters", "refine_iters must be at least 30");
  if (!(cfg.p_max_factor > 0.0))
    throw RangeError("p_max_factor", "p_max_factor must be positive");
}

namespace {

double revenue(const ModelParams& p, double f, Strategy s) {
  switch (s) {
    case Strategy::NAI: return p.r * 1.0;
    case Strategy::AI: return p.r * (p.beta * f * p.v + (1.0 - p.beta) * p.v);
    case Strategy::AINAI:
      return p.r * (p.beta * f * p.k * p.v + (1.0 - p.beta) * p.v);
    case Strategy::AIAI: return p.r * f * p.v;
  }
  return 0.0;
}

double penalty_search_cap(const ModelParams& p, const OracleConfig& cfg) {
  // Landmarks are used for box sizing only; past p_bar the profit is flat, so
  // any cap comfortably above it works.
  const Thresholds t = compute_thresholds(p);
  return cfg.p_max_factor * std::max({t.p_bar, t.p_tilde, 0.01});
}

}  // namespace

double oracle_profit(const ModelParams& p, Regime regime, double penalty,
                     const OracleConfig& cfg) {
  const long n = cfg.f_cells;
  double sum = 0.0;
  for (long i = 0; i < n; ++i) {
    const double f = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
    sum += revenue(p, f, best_response(p, f, regime, penalty));
  }
  return sum / static_cast<double>(n);
}

PenaltySearch oracle_p_star(const ModelParams& p, const OracleConfig& cfg) {
  const double cap = penalty_search_cap(p, cfg);
  const auto profit_at = [&](double pen) { return oracle_profit(p, Regime::D, pen, cfg); };

  int best_idx = 0;
  double best_profit = profit_at(0.0);
  for (int i = 1; i <= cfg.p_cells; ++i) {
    const double pen = cap * i / cfg.p_cells;
    const double pi = profit_at(pen);
    if (pi > best_profit) {
      best_profit = pi;
      best_idx = i;
    }
  }
  const double lo = cap * std::max(0, best_idx - 1) / cfg.p_cells;
  const double hi = cap * std::min(cfg.p_cells, best_idx + 1) / cfg.p_cells;
  const double refined = util::golden_section_max(profit_at, lo, hi, cfg.refine_iters);
  const double refined_profit = profit_at(refined);
  if (refined_profit > best_profit) return {refined, refined_profit};
  return {cap * best_idx / cfg.p_cells, best_profit};
}

std::vector<RegionCell> oracle_region_map(const ModelParams& base,
                                          const std::vector<double>& deltas,
                                          const std::vector<double>& vs,
                                          const OracleConfig& cfg) {
  std::vector<RegionCell> cells(deltas.size() * vs.size());
  util::parallel_for(cells.size(), [&](std::size_t idx) {
    ModelParams p = base;
    p.delta = deltas[idx / vs.size()];
    p.v = vs[idx % vs.size()];
    const PenaltySearch star = oracle_p_star(p, cfg);
    const double profit_n = oracle_profit(p, Regime::N, 0.0, cfg);

    // Positive-measure detection at grid resolution: count cell midpoints per
    // strategy at the oracle optimum.
    long counts[4] = {0, 0, 0, 0};
    const long n = cfg.f_cells;
    for (long i = 0; i < n; ++i) {
      const double f = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
      counts[static_cast<int>(best_response(p, f, Regime::D, star.p))]++;
    }
    RegionCell cell;
    cell.present.nai = counts[static_cast<int>(Strategy::NAI)] > 0;
    cell.present.ainai = counts[static_cast<int>(Strategy::AINAI)] > 0;
    cell.present.aiai = counts[static_cast<int>(Strategy::AIAI)] > 0;
    cell.chosen = star.profit > profit_n ? Regime::D : Regime::N;
    cells[idx] = cell;
  });
  return cells;
}

double finite_difference(const std::function<double(double)>& fn, double at, double h) {
  return (fn(at + h) - fn(at - h)) / (2.0 * h);
}

double finite_difference(const std::function<double(double)>& fn, double at, double h,
                         const std::function<bool(double, double)>& same_region) {
  if (!same_region(at - h, at + h))
    throw RegionStraddle("finite-difference stencil straddles a region boundary");
  return finite_difference(fn, at, h);
}

}  // namespace disclose
