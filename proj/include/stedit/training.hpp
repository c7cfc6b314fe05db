#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include <torch/torch.h>

#include "stedit/noise_schedule.hpp"
#include "stedit/text_edit_model.hpp"

namespace stedit::diffusion {

/// Mean over samples of ‖ε − ε_θ(z_t, c, t)‖² / numel, with t ~ U[0, T),
/// ε ~ N(0, I) and the condition replaced by the null condition with
/// probability `null_prob`. All draws come from `gen`. Throws NonFinite.
torch::Tensor training_loss(const std::vector<PreparedSample>& batch, Denoiser& model, const NoiseSchedule& schedule,
                            torch::Generator& gen, double null_prob = 0.1);

/// Loss on `draws` fixed (t, ε) pairs per sample, conditional branch only,
/// without gradients. Used to compare progress on a fixed set.
double evaluation_loss(const std::vector<PreparedSample>& set, Denoiser& model, const NoiseSchedule& schedule,
                       uint64_t seed, int64_t draws);

struct OptimConfig {
  double lr = 1e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double weight_decay = 0.0;
  double grad_clip = 1.0;  // global norm; <= 0 disables
};

/// Adam over the model's trainable parameters.
class Trainer {
 public:
  Trainer(TextEditModel model, const OptimConfig& cfg, double null_prob, uint64_t seed);

  /// One optimizer step on `batch`; returns the loss before the update.
  double step(const std::vector<PreparedSample>& batch);

  int64_t global_step() const { return step_; }
  void set_global_step(int64_t s) { step_ = s; }
  torch::optim::Adam& optimizer() { return *optim_; }
  torch::Generator& generator() { return gen_; }

 private:
  TextEditModel model_;
  OptimConfig cfg_;
  double null_prob_;
  torch::Generator gen_;
  std::unique_ptr<torch::optim::Adam> optim_;
  int64_t step_ = 0;
};

struct VaeTrainConfig {
  int64_t steps = 500;
  int64_t batch_size = 4;
  int64_t crop = 128;
  double lr = 2e-3;
  uint64_t seed = 17;
};

/// Trains the VAE to reconstruct random crops of `images` (each 3×H×W in
/// [-1,1]) and then calibrates the latent scale to unit standard deviation
/// over the full images. Returns the final training-batch MSE.
double train_vae(ToyVae& vae, const std::vector<torch::Tensor>& images, const VaeTrainConfig& cfg);

/// Mean squared reconstruction error over full images.
double vae_reconstruction_mse(ToyVae& vae, const std::vector<torch::Tensor>& images);

}  // namespace stedit::diffusion
