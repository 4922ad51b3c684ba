#include "disclose/evaluate.hpp"

#include <cstdio>
#include <ostream>

#include "disclose/util.hpp"

namespace disclose {

namespace {

nlohmann::ordered_json params_json(const ModelParams& p) {
  return {{"v", p.v},     {"c", p.c}, {"delta", p.delta}, {"beta", p.beta},
          {"r", p.r},     {"k", p.k}, {"v_bar", p.v_bar}};
}

nlohmann::ordered_json segments_json(const Segmentation& seg) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Segment& s : seg.segments) {
    arr.push_back(
        {{"lo", s.lo}, {"hi", s.hi}, {"strategy", to_string(s.strategy)}});
  }
  return arr;
}

}  // namespace

PointEval evaluate_point(const ModelParams& p) {
  PointEval e;
  e.params = p;
  e.param_region = validate(p).region;
  e.thresholds = compute_thresholds(p);
  e.decision = regime_choice(p);
  e.welfare = welfare_comparison(p);
  e.seg_n = segment(p, Regime::N);
  e.seg_d = segment(p, Regime::D, e.decision.penalty.p);
  e.set_d = strategy_set(p);
  return e;
}

nlohmann::ordered_json eval_json(const PointEval& e) {
  const Thresholds& t = e.thresholds;
  nlohmann::ordered_json j;
  j["params"] = params_json(e.params);
  j["param_region"] =
      e.param_region == ParamRegion::Active ? "active" : "degenerate";
  j["thresholds"] = {{"v_lo1", t.v_lo1}, {"v_lo2", t.v_lo2},
                     {"v_hat", t.v_hat}, {"tv1", t.tv1},
                     {"tv2", t.tv2},     {"tv3", t.tv3},
                     {"tv4", t.tv4},     {"tv5", t.tv5},
                     {"v_d", t.v_d},     {"v8", t.v8},
                     {"p_hat", t.p_hat}, {"p_bar", t.p_bar},
                     {"p_tilde", t.p_tilde}, {"delta0", t.delta0}};
  j["penalty"] = {{"p_star", e.decision.penalty.p},
                  {"region", to_string(e.decision.penalty.region)}};
  j["profits"] = {{"n", e.decision.profit_n},
                  {"d_star", e.decision.profit_d_star},
                  {"margin", e.decision.margin},
                  {"chosen", to_string(e.decision.chosen)}};
  j["welfare"] = {{"cs_n", e.welfare.cs_n}, {"cs_d", e.welfare.cs_d},
                  {"t_n", e.welfare.t_n},   {"t_d", e.welfare.t_d},
                  {"q_n", e.welfare.q_n},   {"q_d", e.welfare.q_d}};
  j["strategy_set_d"] = e.set_d.str();
  j["segments_n"] = segments_json(e.seg_n);
  j["segments_d"] = segments_json(e.seg_d);
  return j;
}

double ModelParams::* axis_field(const std::string& name) {
  if (name == "v") return &ModelParams::v;
  if (name == "c") return &ModelParams::c;
  if (name == "delta") return &ModelParams::delta;
  if (name == "beta") return &ModelParams::beta;
  if (name == "r") return &ModelParams::r;
  if (name == "k") return &ModelParams::k;
  throw RangeError("axis", "unknown sweep axis: " + name);
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  if (n == 1) {
    out.push_back(0.5 * (lo + hi));
    return out;
  }
  for (int i = 0; i < n; ++i) {
    out.push_back(lo + (hi - lo) * i / (n - 1));
  }
  return out;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  double ModelParams::* f1 = axis_field(spec.axis1.name);
  double ModelParams::* f2 = axis_field(spec.axis2.name);
  const std::size_t n1 = spec.axis1.values.size();
  const std::size_t n2 = spec.axis2.values.size();
  std::vector<SweepRow> rows(n1 * n2);
  // Validate up front: workers must not throw.
  for (std::size_t idx = 0; idx < rows.size(); ++idx) {
    ModelParams p = spec.base;
    p.*f1 = spec.axis1.values[idx / n2];
    p.*f2 = spec.axis2.values[idx % n2];
    validate(p);
  }
  util::parallel_for(rows.size(), [&](std::size_t idx) {
    ModelParams p = spec.base;
    p.*f1 = spec.axis1.values[idx / n2];
    p.*f2 = spec.axis2.values[idx % n2];

    SweepRow& row = rows[idx];
    row.a1 = p.*f1;
    row.a2 = p.*f2;
    const RegimeDecision rd = regime_choice(p);
    row.region = rd.penalty.region;
    row.set = strategy_set(p);
    row.p_star = rd.penalty.p;
    row.profit_n = rd.profit_n;
    row.profit_d_star = rd.profit_d_star;
    row.chosen = rd.chosen;
    const WelfareReport w = welfare_comparison(p);
    row.cs_n = w.cs_n;
    row.cs_d = w.cs_d;
    row.t_n = w.t_n;
    row.t_d = w.t_d;
    row.q_n = w.q_n;
    row.q_d = w.q_d;
  });
  return rows;
}

void write_sweep_csv(std::ostream& os, const SweepSpec& spec,
                     const std::vector<SweepRow>& rows) {
  os << spec.axis1.name << ',' << spec.axis2.name
     << ",region_tag,strategy_set,p_star,profit_N,profit_D_star,chosen,"
        "cs_N,cs_D,t_N,t_D,q_N,q_D\n";
  char buf[32];
  auto num = [&](double x) {
    std::snprintf(buf, sizeof(buf), "%.9g", x);
    os << buf;
  };
  for (const SweepRow& row : rows) {
    num(row.a1);
    os << ',';
    num(row.a2);
    os << ',' << to_string(row.region) << ',' << row.set.str() << ',';
    num(row.p_star);
    os << ',';
    num(row.profit_n);
    os << ',';
    num(row.profit_d_star);
    os << ',' << to_string(row.chosen) << ',';
    for (double x : {row.cs_n, row.cs_d, row.t_n, row.t_d, row.q_n}) {
      num(x);
      os << ',';
    }
    num(row.q_d);
    os << '\n';
  }
}

}  // namespace disclose
