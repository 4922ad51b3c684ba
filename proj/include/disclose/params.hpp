// Model primitives and configuration: the parameter tuple of the disclosure
// game, its admissibility checks, and the flat key=value config loader used
// by the CLI.
#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace disclose {

// One creator economy. Creators are indexed by credibility f ~ U[0,1]; the
// platform takes rake r; producing by hand costs c, with AI assistance delta*c.
struct ModelParams {
  double v = 1.0;       // engagement value of AI-assisted content (quality), 0 < v < v_bar
  double c = 0.5;       // human production cost, c > 0
  double delta = 0.5;   // AI cost discount factor, 0 < delta < 1
  double beta = 0.6;    // detector accuracy, 1/2 < beta < 1
  double r = 0.3;       // platform revenue share, 0 < r < 1
  double k = 0.8;       // credibility discount applied to exposed concealers, 0 < k < 1
  double v_bar = 3.0;   // upper support of the quality domain, v_bar > 1

  // Effective cost gap between human and AI production.
  double cost_gap() const { return c * (1.0 - delta); }
};

enum class ParamRegion {
  Active,      // v > adoption threshold: AI adoption occurs in equilibrium
  Degenerate,  // v <= adoption threshold: nobody adopts, both regimes collapse
};

struct ValidatedParams {
  ModelParams params;
  ParamRegion region = ParamRegion::Active;
};

// Grid sizes and tolerances shared by consistency checks and the CLI.
struct NumericsConfig {
  long f_grid_size = 200'000;  // >= 1000
  int p_grid_size = 200;       // >= 100
  double abs_tol = 1e-4;       // > 0; quadrature-vs-closed-form comparison tolerance
  double boundary_eps = 1e-3;  // > 0; exclusion margin around thresholds in statics checks
};

// A parameter (or config) value violated its admissible range.
class RangeError : public std::runtime_error {
 public:
  RangeError(std::string field, const std::string& what)
      : std::runtime_error(what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// The config file could not be parsed; `line` is 1-based (0 = file-level).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what) : std::runtime_error(what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Quality level below which hand production dominates for every creator.
// Negative when the cost gap exceeds the retained engagement unit 1-r.
double adoption_threshold(const ModelParams& p);

// Throws RangeError naming the first offending field. Idempotent.
ValidatedParams validate(const ModelParams& p);
void validate(const NumericsConfig& cfg);

// Flat key=value format; '#' starts a comment. Keys: v, c, delta, beta, r, k,
// v_bar (optional, default 3.0). Unknown keys and malformed lines throw
// ParseError with the line number; missing required keys throw with line 0.
ModelParams parse_model_params(std::istream& in);
ModelParams load_model_params(const std::string& path);

}  // namespace disclose
