// Randomized verification suites. Each suite draws parameter points from a
// box that keeps every penalty region reachable, then validates one family
// of claims per draw, always through two independent routes (closed form vs
// brute force, prediction vs measurement, tag vs realized segmentation).
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "disclose/oracle.hpp"
#include "disclose/params.hpp"
#include "disclose/util.hpp"

namespace disclose {

enum class SuiteId {
  Indifference,       // cutoff/threshold identities, penalty-cap reconstruction
  OracleEquivalence,  // closed-form profits vs quadrature oracle
  PenaltyOptimality,  // optimal penalty beats grid + refined search
  Statics,            // finite-difference slopes vs predicted sign intervals
  WelfareOrder,       // surplus/transparency orderings, quality-sign match
  RegionConsistency,  // region tags vs realized strategy sets and tilings
};

class UnknownSuite : public std::runtime_error {
 public:
  explicit UnknownSuite(const std::string& name)
      : std::runtime_error("unknown suite: " + name) {}
};

std::string to_string(SuiteId id);
SuiteId parse_suite(const std::string& name);  // throws UnknownSuite

struct CheckConfig {
  int draws = 200;
  std::uint64_t seed = 1;
  NumericsConfig numerics;
  OracleConfig oracle;
  // Negative control: compute the deterrence penalty cap with denominator
  // beta*r instead of beta*(1-r). The indifference suite must then fail,
  // which is how the suite itself is tested.
  bool pbar_denominator_r = false;
};

struct Failure {
  int draw = 0;
  std::string claim;
  double observed = 0.0;
  double expected = 0.0;
  ModelParams params;
};

struct CheckReport {
  SuiteId suite = SuiteId::Indifference;
  int draws = 0;
  std::uint64_t seed = 0;
  long long failure_count = 0;     // all violations, including uncaptured ones
  long long flagged = 0;           // draws skipped or ambiguous, not violations
  std::vector<Failure> failures;   // first kMaxStoredFailures, in draw order
  double elapsed_seconds = 0.0;    // not serialized; reports stay byte-stable
};

inline constexpr int kMaxStoredFailures = 100;

ModelParams draw_params(util::Rng& rng);

CheckReport run_suite(SuiteId id, const CheckConfig& cfg);

nlohmann::ordered_json report_json(const CheckReport& report);

}  // namespace disclose
