// `disclose` — equilibrium and policy calculator for the AI-content
// disclosure game.
//
// Subcommands:
//   eval   one parameter point -> JSON (thresholds, penalty, profits, welfare)
//   sweep  two-axis grid -> CSV, with the figure presets built in
//   check  randomized verification suites -> JSON report
//
// Exit codes: 0 ok, 2 parse error, 3 parameter out of range, 4 I/O error,
// 5 check suite reported failures.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "disclose/checks.hpp"
#include "disclose/evaluate.hpp"
#include "disclose/welfare.hpp"

namespace {

using namespace disclose;

struct EvalOptions {
  std::string config;
  std::string regime = "choose";
  std::string penalty = "optimal";
  std::string out;
};

struct SweepOptions {
  std::string preset;
  std::string grid;
  std::string config;
  std::string out;
};

struct CheckOptions {
  std::string suite;
  int draws = 200;
  std::uint64_t seed = 1;
  long f_cells = 200'000;
  double tol = 1e-4;
  bool pbar_denominator_r = false;
  std::string out;
};

ModelParams read_config(const std::string& path, int& io_error) {
  std::ifstream in(path);
  if (!in) {
    std::fprintf(stderr, "error: cannot open config file '%s'\n", path.c_str());
    io_error = 4;
    return {};
  }
  return parse_model_params(in);
}

int write_output(const std::string& path, const std::string& body) {
  if (path.empty()) {
    std::cout << body;
    return 0;
  }
  std::ofstream out(path);
  if (!out) {
    std::fprintf(stderr, "error: cannot open output file '%s'\n", path.c_str());
    return 4;
  }
  out << body;
  out.flush();
  if (!out) {
    std::fprintf(stderr, "error: failed writing '%s'\n", path.c_str());
    return 4;
  }
  return 0;
}

int run_eval(const EvalOptions& opt) {
  int io_error = 0;
  const ModelParams params = read_config(opt.config, io_error);
  if (io_error) return io_error;
  validate(params);

  const PointEval e = evaluate_point(params);
  nlohmann::ordered_json j = eval_json(e);

  if (opt.regime != "choose") {
    const Regime regime = opt.regime == "N" ? Regime::N : Regime::D;
    double pen = 0.0;
    if (regime == Regime::D) {
      if (opt.penalty == "optimal") {
        pen = e.decision.penalty.p;
      } else {
        std::size_t used = 0;
        try {
          pen = std::stod(opt.penalty, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != opt.penalty.size()) {
          std::fprintf(stderr,
                       "error: --penalty expects 'optimal' or a number, got '%s'\n",
                       opt.penalty.c_str());
          return 2;
        }
        if (pen < 0.0) throw RangeError("penalty", "penalty must be >= 0");
      }
    }
    const double profit =
        regime == Regime::N ? profit_N(params) : profit_D(params, pen);
    j["requested"] = {
        {"regime", to_string(regime)},
        {"penalty", pen},
        {"profit", profit},
        {"cs", creator_surplus(params, regime, pen)},
        {"t", transparency(params, regime, pen)},
        {"q", average_quality(params, regime, pen)},
        {"strategy_set",
         present_strategies(segment(params, regime, pen), 1e-12).str()}};
  }
  return write_output(opt.out, j.dump(2) + "\n");
}

struct Preset {
  const char* axis1;
  double lo1, hi1;
  int n1;
  const char* axis2;
  double lo2, hi2;
  int n2;
};

int run_sweep(const SweepOptions& opt) {
  Preset preset{};
  if (opt.preset == "fig1" || opt.preset == "fig2" || opt.preset == "fig3") {
    preset = {"v", 0.3, 2.5, 200, "delta", 0.1, 0.9, 5};
  } else if (opt.preset == "fig4") {
    preset = {"delta", 0.02, 0.98, 200, "v", 0.3, 2.5, 200};
  } else {
    std::fprintf(stderr, "error: unknown preset '%s' (use fig1..fig4)\n",
                 opt.preset.c_str());
    return 2;
  }

  int n1 = preset.n1;
  int n2 = preset.n2;
  if (!opt.grid.empty()) {
    char tail = '\0';
    if (std::sscanf(opt.grid.c_str(), "%dx%d%c", &n1, &n2, &tail) != 2 ||
        n1 < 1 || n2 < 1) {
      std::fprintf(stderr, "error: --grid expects N1xN2, got '%s'\n",
                   opt.grid.c_str());
      return 2;
    }
  }

  SweepSpec spec;
  spec.base.k = 0.8;
  spec.base.beta = 0.6;
  spec.base.r = 0.3;
  spec.base.c = 0.5;
  spec.base.delta = 0.5;
  spec.base.v = 1.0;
  spec.base.v_bar = 3.0;
  if (!opt.config.empty()) {
    int io_error = 0;
    spec.base = read_config(opt.config, io_error);
    if (io_error) return io_error;
  }
  spec.axis1 = {preset.axis1, linspace(preset.lo1, preset.hi1, n1)};
  spec.axis2 = {preset.axis2, linspace(preset.lo2, preset.hi2, n2)};

  const std::vector<SweepRow> rows = run_sweep(spec);
  std::ostringstream body;
  write_sweep_csv(body, spec, rows);
  return write_output(opt.out, body.str());
}

int run_check(const CheckOptions& opt) {
  const SuiteId id = parse_suite(opt.suite);
  CheckConfig cfg;
  cfg.draws = opt.draws;
  cfg.seed = opt.seed;
  cfg.numerics.abs_tol = opt.tol;
  cfg.oracle.f_cells = opt.f_cells;
  cfg.pbar_denominator_r = opt.pbar_denominator_r;

  const CheckReport report = run_suite(id, cfg);
  std::fprintf(stderr, "suite %s: %d draws, %lld failures, %lld flagged, %.2fs\n",
               to_string(id).c_str(), report.draws, report.failure_count,
               report.flagged, report.elapsed_seconds);
  const int rc = write_output(opt.out, report_json(report).dump(2) + "\n");
  if (rc != 0) return rc;
  return report.failure_count > 0 ? 5 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equilibrium and policy calculator for the AI-content disclosure game"};
  app.require_subcommand(1);

  EvalOptions eval_opt;
  CLI::App* eval = app.add_subcommand("eval", "evaluate one parameter point");
  eval->add_option("--config", eval_opt.config, "key=value parameter file")
      ->required();
  eval->add_option("--regime", eval_opt.regime, "N, D, or choose")
      ->check(CLI::IsMember({"N", "D", "choose"}));
  eval->add_option("--penalty", eval_opt.penalty,
                   "'optimal' or a number (regime D only)");
  eval->add_option("--out", eval_opt.out, "output path (default stdout)");

  SweepOptions sweep_opt;
  CLI::App* sweep = app.add_subcommand("sweep", "two-axis parameter sweep to CSV");
  sweep->add_option("--preset", sweep_opt.preset, "fig1, fig2, fig3, or fig4")
      ->required();
  sweep->add_option("--grid", sweep_opt.grid, "override grid as N1xN2");
  sweep->add_option("--config", sweep_opt.config,
                    "key=value file overriding the preset base point");
  sweep->add_option("--out", sweep_opt.out, "output path (default stdout)");

  CheckOptions check_opt;
  CLI::App* check = app.add_subcommand("check", "run a verification suite");
  check->add_option("--suite", check_opt.suite,
                    "indifference, oracle-equivalence, penalty-optimality, "
                    "statics, welfare-order, or region-consistency")
      ->required();
  check->add_option("--draws", check_opt.draws, "number of random draws")
      ->check(CLI::PositiveNumber);
  check->add_option("--seed", check_opt.seed, "base RNG seed");
  check->add_option("--f-cells", check_opt.f_cells,
                    "skill-grid cells for the brute-force oracle");
  check->add_option("--tol", check_opt.tol,
                    "closed-form vs oracle comparison tolerance");
  check->add_flag("--pbar-denominator-r", check_opt.pbar_denominator_r,
                  "negative control: misprice the deterrence cap (beta*r "
                  "denominator); indifference checks must then fail");
  check->add_option("--out", check_opt.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (eval->parsed()) return run_eval(eval_opt);
    if (sweep->parsed()) return run_sweep(sweep_opt);
    return run_check(check_opt);
  } catch (const ParseError& e) {
    std::fprintf(stderr, "parse error (line %d): %s\n", e.line(), e.what());
    return 2;
  } catch (const UnknownSuite& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const RangeError& e) {
    std::fprintf(stderr, "range error (%s): %s\n", e.field().c_str(), e.what());
    return 3;
  } catch (const std::ios_base::failure& e) {
    std::fprintf(stderr, "i/o error: %s\n", e.what());
    return 4;
  }
}
