#pragma once

#include "sysid/simulate.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sysid::bench {

struct EstimatorSpec {
  enum class Kind { Ols, Pfls, FixedFilter, SelectL };
  Kind kind = Kind::Ols;
  /// Monic polynomial coefficients f_1..f_d for FixedFilter.
  std::vector<double> poly;

  std::string name() const;
};

struct ExperimentConfig {
  std::string preset = "inline";
  std::optional<StateSpace> system;
  NoiseModel noise = GaussianNoise{};
  std::vector<Index> N_grid;
  Index T = 5;
  Index L = 4;
  Index L_max = 0;  // 0 means "same as L"
  double mu = 1.0;
  double delta = 0.1;
  std::vector<EstimatorSpec> estimators;
  std::vector<std::uint64_t> seeds;
  std::string output;
  /// Upper bound on N_max * (n + m + p).
  double max_cells = 2e8;
  bool record_wall_time = true;
  /// 0 picks the hardware concurrency; SYSID_THREADS caps either way.
  int threads = 0;

  Index effective_L_max() const { return L_max > 0 ? L_max : L; }
  const StateSpace& sys() const;
};

/// Throws ParseError or InvalidArgument.
ExperimentConfig config_from_json(std::string_view text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Parses {"type": "none" | "gaussian" | "adversarial", ...}.
NoiseModel noise_from_json_text(std::string_view text);

/// Checks the invariants: nonempty grid, seeds and estimators, the memory guard.
void validate(const ExperimentConfig& config);

}  // namespace sysid::bench
