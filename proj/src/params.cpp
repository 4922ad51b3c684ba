#include "disclose/params.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace disclose {

double adoption_threshold(const ModelParams& p) {
  return (1.0 - p.r - p.cost_gap()) / (1.0 - p.r);
}

namespace {

void require(bool ok, const char* field, const std::string& msg) {
  if (!ok) throw RangeError(field, msg);
}

std::string num(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

ValidatedParams validate(const ModelParams& p) {
  require(std::isfinite(p.v_bar) && p.v_bar > 1.0, "v_bar",
          "v_bar must exceed 1 (got " + num(p.v_bar) + ")");
  require(std::isfinite(p.v) && p.v > 0.0 && p.v < p.v_bar, "v",
          "v must lie in (0, v_bar) (got " + num(p.v) + ", v_bar = " + num(p.v_bar) + ")");
  require(std::isfinite(p.c) && p.c > 0.0, "c", "c must be positive (got " + num(p.c) + ")");
  require(std::isfinite(p.delta) && p.delta > 0.0 && p.delta < 1.0, "delta",
          "delta must lie in (0, 1) (got " + num(p.delta) + ")");
  require(std::isfinite(p.beta) && p.beta > 0.5 && p.beta < 1.0, "beta",
          "beta must lie in (1/2, 1) (got " + num(p.beta) + ")");
  require(std::isfinite(p.r) && p.r > 0.0 && p.r < 1.0, "r",
          "r must lie in (0, 1) (got " + num(p.r) + ")");
  require(std::isfinite(p.k) && p.k > 0.0 && p.k < 1.0, "k",
          "k must lie in (0, 1) (got " + num(p.k) + ")");
  ValidatedParams out;
  out.params = p;
  out.region =
      p.v <= adoption_threshold(p) ? ParamRegion::Degenerate : ParamRegion::Active;
  return out;
}

void validate(const NumericsConfig& cfg) {
  require(cfg.f_grid_size >= 1000, "f_grid_size",
          "f_grid_size must be at least 1000 (got " + std::to_string(cfg.f_grid_size) + ")");
  require(cfg.p_grid_size >= 100, "p_grid_size",
          "p_grid_size must be at least 100 (got " + std::to_string(cfg.p_grid_size) + ")");
  require(std::isfinite(cfg.abs_tol) && cfg.abs_tol > 0.0, "abs_tol",
          "abs_tol must be positive");
  require(std::isfinite(cfg.boundary_eps) && cfg.boundary_eps > 0.0, "boundary_eps",
          "boundary_eps must be positive");
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

ModelParams parse_model_params(std::istream& in) {
  ModelParams out;
  std::map<std::string, double*> fields{
      {"v", &out.v},     {"c", &out.c}, {"delta", &out.delta}, {"beta", &out.beta},
      {"r", &out.r},     {"k", &out.k}, {"v_bar", &out.v_bar},
  };
  std::map<std::string, bool> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError(lineno, "expected key=value, got '" + line + "'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    auto it = fields.find(key);
    if (it == fields.end()) throw ParseError(lineno, "unknown key '" + key + "'");
    if (seen[key]) throw ParseError(lineno, "duplicate key '" + key + "'");
    std::size_t used = 0;
    double parsed = 0.0;
    try {
      parsed = std::stod(value, &used);
    } catch (const std::exception&) {
      throw ParseError(lineno, "invalid number '" + value + "' for key '" + key + "'");
    }
    if (used != value.size())
      throw ParseError(lineno, "invalid number '" + value + "' for key '" + key + "'");
    *it->second = parsed;
    seen[key] = true;
  }
  for (const char* required : {"v", "c", "delta", "beta", "r", "k"}) {
    if (!seen[required]) throw ParseError(0, std::string("missing required key '") + required + "'");
  }
  return out;
}

ModelParams load_model_params(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open config file '" + path + "'");
  return parse_model_params(in);
}

}  // namespace disclose
