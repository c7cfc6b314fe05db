#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <torch/torch.h>

#include "stedit/ocr_encoder.hpp"

namespace stedit::cond {

/// Nearest-neighbor upsampling of a B×C×h×w map to `height`×`width`.
/// Throws SpatialMismatch when the target is smaller than the source.
torch::Tensor upsample_nearest(const torch::Tensor& x, int64_t height, int64_t width);

/// FPN-style top-down fusion of the five OCR backbone levels into one
/// D-dimensional vector per image:
///   c_i = f_i(x_i)                   1×1 lateral projections
///   p_5 = c_5, p_i = g_i(u(p_{i+1}) + c_i)   3×3 smoothing, nearest upsampling
///   y   = h(d(k(p_1)))               1×1 projection, stride-2 average
///                                    downsampling, global average pooling
class BackboneFusionImpl : public torch::nn::Module {
 public:
  BackboneFusionImpl(const std::array<int64_t, ocr::kLevels>& in_channels, int64_t dim);

  /// `levels` are B×C_i×H_i×W_i; returns B×D.
  torch::Tensor forward(const std::vector<torch::Tensor>& levels);

  int64_t dim() const { return dim_; }

  std::vector<torch::nn::Conv2d> lateral;  // f_1..f_5
  std::vector<torch::nn::Conv2d> smooth;   // g_1..g_4
  torch::nn::Conv2d project{nullptr};      // k

 private:
  int64_t dim_;
};
TORCH_MODULE(BackboneFusion);

/// Ablation stand-in for the fusion module: global average of the last level.
torch::Tensor last_level_pool(const std::vector<torch::Tensor>& levels);

}  // namespace stedit::cond
