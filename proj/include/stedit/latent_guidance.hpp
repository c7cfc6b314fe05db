#pragma once

#include <cstdint>

#include <torch/torch.h>

namespace stedit::latent {

struct LatentConfig {
  int64_t latent_channels = 4;
  int64_t unet_width = 320;     // channels of y_inpaint and z_t
  int64_t style_hidden = 64;
  int64_t style_channels = 128;
  bool style_encoder = true;    // false: plain 9-channel inpainting path
  uint64_t seed = 11;
};

/// Denoiser input triple at latent resolution. Tensors are B×C×h×w.
struct InpaintInput {
  torch::Tensor latent;         // B×4×h×w, diffusion state z_t
  torch::Tensor mask;           // B×1×h×w, binary
  torch::Tensor masked_latent;  // B×4×h×w, encoding of the erased image

  /// Channel stack in the fixed order latent, mask, masked_latent.
  torch::Tensor stacked() const;
};

/// Nearest-neighbor reduction of a B×1×H×W mask to h×w; stays binary.
torch::Tensor mask_to_latent(const torch::Tensor& mask, int64_t height, int64_t width);

/// Two 3×3 convolutions (the first with stride 2) followed by a
/// zero-initialized 1×1 convolution. 3×2h×2w → 128×h×w.
class StyleEncoderImpl : public torch::nn::Module {
 public:
  explicit StyleEncoderImpl(const LatentConfig& cfg);
  torch::Tensor forward(const torch::Tensor& crop);

  torch::nn::Conv2d conv1{nullptr}, conv2{nullptr}, zero_out{nullptr};
};
TORCH_MODULE(StyleEncoder);

class LatentGuidanceImpl : public torch::nn::Module {
 public:
  explicit LatentGuidanceImpl(const LatentConfig& cfg = {});

  /// B×3×2h×2w style crops → B×128×h×w. Exactly zero at initialization.
  torch::Tensor encode_style(const torch::Tensor& crop);
  /// 9-channel stack → B×320×h×w through the widened input convolution.
  torch::Tensor form_inpaint_features(const InpaintInput& inp);
  /// Concat(y_inpaint, y_style) → 1×1 conv → z_t. Identity on y_inpaint at
  /// initialization.
  torch::Tensor fuse_latents(const torch::Tensor& y_inpaint, const torch::Tensor& y_style);

  /// Full module: z_t for the denoiser. `style` may be a precomputed
  /// encode_style result; it is ignored when the style encoder is disabled.
  torch::Tensor forward(const InpaintInput& inp, const torch::Tensor& style_crop);
  torch::Tensor forward_with_style(const InpaintInput& inp, const torch::Tensor& y_style);

  const LatentConfig& config() const { return cfg_; }

  torch::nn::Conv2d input_conv{nullptr};  // 9 → 320, 3×3
  StyleEncoder style{nullptr};
  torch::nn::Conv2d fusion{nullptr};      // 448 → 320, 1×1

 private:
  LatentConfig cfg_;
};
TORCH_MODULE(LatentGuidance);

}  // namespace stedit::latent
