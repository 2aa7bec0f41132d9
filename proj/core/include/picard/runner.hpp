#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "picard/ball.hpp"
#include "picard/cocycle.hpp"
#include "picard/json_io.hpp"
#include "picard/presentation.hpp"

namespace picard {

const char* version();

/// Bad command or configuration; maps to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Tolerances {
  /// Numeric matrix and torus residuals.
  double matrix = 1e-9;
  /// Multiplier identities.
  double functional = 1e-8;
  /// Integer rounding gate for sigma.
  double sigma_round = 1e-6;
};

struct RunConfig {
  std::uint64_t seed = 20240601;
  int samples = 200;
  int max_word_len = 64;
  Tolerances tol;
  /// Evaluation point for the multiplier; suites draw random points when unset.
  std::optional<BallPoint> tau;
  /// Unset means the suites cover both (1 + 2 zeta) and (2).
  std::optional<EisensteinIdeal> ideal;
  std::string output_path;
  SigmaOrientation orientation = SigmaOrientation::swapped;
  double x_log_cut = kPrincipalCut;
  SplitNormalization normalization = SplitNormalization::minimal_norm;
  /// Evaluator inputs: words, or torus elements "t:zeta" / "t:re,im".
  std::string g, h, k, word;

  /// Throws UsageError.
  void validate() const;
  CocycleOptions cocycle_options() const;
  Json to_json() const;
};

struct Check {
  bool pass = false;
  Json detail = Json::object();
};

struct Report {
  std::string suite;
  /// Keyed by check name; std::map keeps the output order stable.
  std::map<std::string, Check> checks;
  Json result = Json::object();

  bool pass() const;
  void add(const std::string& name, bool pass, Json detail = Json::object());
  Json to_json(const RunConfig& config) const;
};

const std::vector<std::string>& commands();

/// Runs one command. Throws UsageError for unknown commands or missing inputs;
/// check failures are recorded in the report.
Report run(const std::string& command, const RunConfig& config);

/// Element syntax shared by the evaluators.
struct Element {
  std::string text;
  std::optional<Word> word;
  NumericMatrix numeric;
};
Element parse_element(const std::string& text);

}  // namespace picard
