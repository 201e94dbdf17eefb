#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "casimir/decomposition.hpp"

namespace casimir {

/// Configuration error carrying the offending key.
struct ConfigError : std::runtime_error {
  std::string key;
  ConfigError(std::string k, const std::string& msg)
      : std::runtime_error("config key '" + k + "': " + msg), key(std::move(k)) {}
};

/// One batch experiment: module data, experiment kind, operator specs,
/// weight selector, output format and budgets.
struct ExperimentConfig {
  std::string experiment;  // verify-centrality | hwv-dims | orbit | cg-table |
                           // anti-diagonal | gelfand-spectrum | t-decompose
  AlgebraKind kind = AlgebraKind::sl2;
  int N = 2;
  std::vector<Weight> factor_weights;
  std::vector<Rational> points;
  std::vector<std::string> operator_specs;
  std::optional<Weight> weight_sel;
  int simple_root = 1;  // 1-based
  std::string format = "table";
  std::string out;
  std::uint64_t max_terms = 100000;
  int d_max = 8;
  int r_max = 0;  // 0 means N
  int m = -1, n = -1, k = -1;
  std::string seed;  // orbit seed: "z(k,l)" | "A(k,l)" | "top"
};

/// Parses the key = value config text (one pair per line, '#' comments).
ExperimentConfig parse_config(const std::string& text);

struct RunResult {
  int exit_code = 0;  // 0 checks pass, 1 violated identity, 2 usage error
  std::string output;
};

/// Runs the experiment; deterministic output bytes for identical configs.
RunResult run_experiment(const ExperimentConfig& cfg);

}  // namespace casimir
