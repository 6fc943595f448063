#pragma once

// Batch verification behind the derlab CLI: model configuration, the
// invariant suites, map-file checks and their JSON reports.

#include <cstdint>
#include <string>
#include <vector>

#include "derlab/serialize.hpp"

namespace derlab {

struct ModelConfig {
  std::vector<int> fibers;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  int frame_size = 1;

  ModuleSpec spec() const { return ModuleSpec(fibers); }
  /// Throws ConfigError on an empty fiber list, tol <= 0 or frame_size < 1.
  void validate() const;
};

ModelConfig config_from_json(const Json& j);
Json to_json(const ModelConfig& c);

enum class CheckStatus { Pass, Fail, RankAmbiguous, Error };
const char* to_string(CheckStatus s);

struct CheckResult {
  std::string suite;
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string metric;  // "residual", "dimension", ...
  double value = 0.0;
  std::string detail;
  double runtime_ms = 0.0;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool passed() const;
  /// Runtimes are omitted unless requested so reports stay byte-identical
  /// across runs with the same configuration.
  Json to_json(bool include_timings = false) const;
};

struct InfoReport {
  int algebra_dim;
  int k;
  int center_dim;
  int expected_derivation_dim;
};
InfoReport model_info(const ModelConfig& config);

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"derivations", "lemmas", "local", "twolocal"};
  return names;
}

/// Runs one suite, or every suite for "all". Suites are merged in name order.
/// Throws ConfigError for an unknown suite name.
VerificationReport run_verify(const ModelConfig& config, const std::string& suite);

enum class MapMode { Derivation, Local, Generalized, TwoLocal };
MapMode map_mode_from_string(const std::string& s);

/// Checks a user-supplied linear map against the model. Throws
/// DimensionMismatch when the map does not act on End_A(M).
VerificationReport check_map(const ModelConfig& config, const LinearMapOnAlgebra& map, MapMode mode);

}  // namespace derlab
