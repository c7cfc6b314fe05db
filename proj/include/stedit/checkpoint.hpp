#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include <torch/torch.h>

#include "stedit/text_edit_model.hpp"

namespace stedit {

inline constexpr int64_t kCheckpointFormat = 1;

/// Single-file archive: all module weights and buffers, the model config as
/// JSON, schedule constants, the format version, the training step and
/// (optionally) optimizer state.
void save_checkpoint(const std::filesystem::path& path, TextEditModel& model, int64_t step,
                     torch::optim::Optimizer* optimizer = nullptr);

struct LoadedCheckpoint {
  TextEditModel model{nullptr};
  int64_t step = 0;
  std::string config_json;
};

/// Rebuilds the model from the stored config and loads its weights. Throws
/// CheckpointError on missing or corrupt files.
LoadedCheckpoint load_checkpoint(const std::filesystem::path& path);
/// Restores optimizer state saved alongside the model. Throws CheckpointError
/// if the archive has none.
void load_optimizer_state(const std::filesystem::path& path, torch::optim::Optimizer& optimizer);

}  // namespace stedit
