#pragma once

#include <cstdint>

#include <torch/torch.h>

#include "stedit/text_edit_model.hpp"

namespace stedit::diffusion {

struct SamplerConfig {
  int64_t steps = 20;
  double cfg_scale = 3.0;
  uint64_t seed = 0;
  double eta = 0.0;
  /// Evaluate the null branch even when cfg_scale == 1 (it is skipped by
  /// default because the combination then ignores it).
  bool always_run_null = false;

  /// Throws BadInput unless 1 ≤ steps ≤ T and cfg_scale ≥ 0.
  void validate(int64_t T) const;
};

struct SampleResult {
  torch::Tensor image;    // 1×3×S×S, composited: input pixels outside the mask
  torch::Tensor decoded;  // 1×3×S×S raw decoder output
  torch::Tensor latent;   // final latent
  int64_t conditional_evaluations = 0;
  int64_t null_evaluations = 0;
};

/// Seeded DDIM with classifier-free guidance over a prepared sample whose
/// glyph features describe the target text.
SampleResult ddim_sample(TextEditModel& model, const PreparedSample& sample, const SamplerConfig& cfg);

}  // namespace stedit::diffusion
