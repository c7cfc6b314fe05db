#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <torch/torch.h>

namespace stedit::diffusion {

struct VaeConfig {
  std::array<int64_t, 3> channels{16, 32, 64};
  int64_t latent_channels = 4;
  uint64_t seed = 3;
};

/// Small convolutional autoencoder with an 8× spatial reduction. Latents are
/// multiplied by `latent_scale` (a buffer) so they have roughly unit spread.
class ToyVaeImpl : public torch::nn::Module {
 public:
  explicit ToyVaeImpl(const VaeConfig& cfg = {});

  /// B×3×H×W in [-1,1] → B×4×H/8×W/8 (scaled). Throws BadShape unless H, W
  /// are multiples of 8.
  torch::Tensor encode(const torch::Tensor& x);
  /// Scaled latent → B×3×8h×8w in [-1,1].
  torch::Tensor decode(const torch::Tensor& z);

  double latent_scale() const { return scale_.item<double>(); }
  void set_latent_scale(double s);

  torch::nn::Sequential encoder{nullptr}, decoder{nullptr};

 private:
  torch::Tensor scale_;
};
TORCH_MODULE(ToyVae);

struct UnetConfig {
  int64_t in_channels = 320;
  std::array<int64_t, 3> widths{32, 64, 64};
  int64_t out_channels = 4;
  int64_t context_dim = 1024;
  int64_t time_dim = 128;
  int64_t groups = 8;
  uint64_t seed = 5;
};

/// Sinusoidal embedding of integer timesteps, B → B×dim.
torch::Tensor timestep_embedding(const torch::Tensor& t, int64_t dim);

class ResBlockImpl : public torch::nn::Module {
 public:
  ResBlockImpl(int64_t in, int64_t out, int64_t time_dim, int64_t groups);
  torch::Tensor forward(const torch::Tensor& x, const torch::Tensor& temb);

  torch::nn::GroupNorm norm1{nullptr}, norm2{nullptr};
  torch::nn::Conv2d conv1{nullptr}, conv2{nullptr}, skip{nullptr};
  torch::nn::Linear time{nullptr};
};
TORCH_MODULE(ResBlock);

/// Single-head cross-attention from feature-map positions to condition rows.
class CrossAttentionImpl : public torch::nn::Module {
 public:
  CrossAttentionImpl(int64_t channels, int64_t context_dim, int64_t groups);
  /// x: 1×C×h×w, context: N×context_dim.
  torch::Tensor forward(const torch::Tensor& x, const torch::Tensor& context);

  torch::nn::GroupNorm norm{nullptr};
  torch::nn::Linear q{nullptr}, k{nullptr}, v{nullptr}, out{nullptr};
};
TORCH_MODULE(CrossAttention);

/// Three-level UNet: 1×1 projection from the 320-channel guided latent,
/// residual blocks with time embedding and cross-attention at every level,
/// zero-initialized output convolution.
class ToyUnetImpl : public torch::nn::Module {
 public:
  explicit ToyUnetImpl(const UnetConfig& cfg = {});

  /// z: 1×320×h×w (h, w divisible by 4), t: timestep, context: N×1024.
  torch::Tensor forward(const torch::Tensor& z, int64_t t, const torch::Tensor& context);

  const UnetConfig& config() const { return cfg_; }

  torch::nn::Conv2d proj_in{nullptr};
  torch::nn::Sequential time_mlp{nullptr};
  std::vector<ResBlock> down_blocks;
  std::vector<CrossAttention> down_attn;
  std::vector<torch::nn::Conv2d> downsample;
  ResBlock mid_block{nullptr};
  CrossAttention mid_attn{nullptr};
  std::vector<ResBlock> up_blocks;
  std::vector<CrossAttention> up_attn;
  torch::nn::GroupNorm norm_out{nullptr};
  torch::nn::Conv2d conv_out{nullptr};

 private:
  UnetConfig cfg_;
};
TORCH_MODULE(ToyUnet);

}  // namespace stedit::diffusion
