#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "json.hpp"

#include "stedit/sampler.hpp"
#include "stedit/text_edit_model.hpp"
#include "stedit/training.hpp"

namespace stedit::app {

inline constexpr int kConfigVersion = 1;

struct TrainSettings {
  int64_t steps = 200;
  int64_t batch_size = 2;
  diffusion::OptimConfig optim;
  double null_prob = 0.1;
  int64_t log_every = 10;
  int64_t checkpoint_every = 100;
  /// Train on the first `fixed_samples` usable regions (0: stream the whole
  /// manifest with seeded random draws).
  int64_t fixed_samples = 8;
  int64_t eval_draws = 8;
  diffusion::VaeTrainConfig vae;
  std::filesystem::path out_dir = "runs/default";
};

struct EvalSettings {
  bool strip_whitespace = true;
  bool case_sensitive = true;
  int64_t crop = 128;
};

struct ServeSettings {
  std::string host = "127.0.0.1";
  int port = 8080;
  int64_t max_pending = 8;
  double timeout_seconds = 300;
};

struct RunConfig {
  int version = kConfigVersion;
  uint64_t seed = 0;
  std::string device = "cpu";
  std::filesystem::path checkpoint;
  std::filesystem::path manifest;
  ModelConfig model;
  diffusion::SamplerConfig sampler;
  TrainSettings train;
  EvalSettings eval;
  ServeSettings serve;
};

enum class Purpose { Any, Train, Serve };

/// Parses a run config. Unknown keys, a missing or unsupported version, and
/// wrong types raise ConfigError naming the offending key. Relative paths are
/// resolved against `base_dir`.
RunConfig parse_run_config(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
/// Reads and parses a config file (relative paths resolved against its directory).
RunConfig load_run_config(const std::filesystem::path& path);
nlohmann::json to_json(const RunConfig& cfg);
/// Config suitable for exposure over the service: paths reduced to file names.
nlohmann::json sanitized_json(const RunConfig& cfg);

/// Checks referenced paths for `purpose`. Throws ConfigError.
void validate(const RunConfig& cfg, Purpose purpose);

nlohmann::json model_config_to_json(const ModelConfig& cfg);
ModelConfig model_config_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir = {});

}  // namespace stedit::app
