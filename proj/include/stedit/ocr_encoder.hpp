#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <torch/torch.h>

namespace stedit::ocr {

inline constexpr int kLevels = 5;
inline constexpr int64_t kNeckDim = 720;

/// Five backbone feature maps, level i shaped C_i×H_i×W_i, with spatial
/// extents non-increasing from level 1 to 5.
struct MultiScaleFeatures {
  std::vector<torch::Tensor> levels;
};

struct OcrFeatures {
  MultiScaleFeatures backbone;
  torch::Tensor neck;  // d_neck
};

/// Features of a batch of same-sized images: levels are B×C_i×H_i×W_i and the
/// neck is B×d_neck.
struct StackedFeatures {
  std::vector<torch::Tensor> levels;
  torch::Tensor neck;
};

struct EncoderConfig {
  std::string kind = "stub";
  uint64_t seed = 1234;
  std::array<int64_t, kLevels> channels{16, 32, 64, 128, 256};
  int64_t neck_dim = kNeckDim;
  /// Optional torch archive whose tensors replace the stub's by name.
  std::optional<std::filesystem::path> weights;
};

/// Text-recognizer feature extractor. Implementations are read-only after
/// construction and never trained.
class OcrEncoder {
 public:
  virtual ~OcrEncoder() = default;

  virtual std::array<int64_t, kLevels> level_channels() const = 0;
  virtual int64_t neck_dim() const = 0;
  /// `images` is B×h×w grayscale in [0,1]; B may be zero.
  virtual StackedFeatures encode_stacked(const torch::Tensor& images) const = 0;
  virtual uint64_t weights_checksum() const = 0;

  /// Accepts 36×48 local or 48×320 global glyph images; throws BadShape otherwise.
  OcrFeatures encode(const torch::Tensor& image) const;
  std::vector<OcrFeatures> encode_batch(const torch::Tensor& images) const;

  static bool supported_size(int64_t height, int64_t width);
};

/// Spatial extents of the stub's five levels for an h×w input: full
/// resolution, then a stride-2 (ceil) reduction per stage.
std::array<std::pair<int64_t, int64_t>, kLevels> stub_level_dims(int64_t height, int64_t width);

class StubOcrEncoder final : public OcrEncoder {
 public:
  explicit StubOcrEncoder(const EncoderConfig& cfg = {});
  ~StubOcrEncoder() override;

  std::array<int64_t, kLevels> level_channels() const override { return channels_; }
  int64_t neck_dim() const override { return neck_dim_; }
  StackedFeatures encode_stacked(const torch::Tensor& images) const override;
  uint64_t weights_checksum() const override;

  /// Raw backbone + neck pass for any h×w (used by metric embedders after
  /// their own resizing).
  StackedFeatures forward_any(const torch::Tensor& images) const;

 private:
  struct Net;
  std::array<int64_t, kLevels> channels_;
  int64_t neck_dim_;
  std::shared_ptr<Net> net_;
};

/// Throws ConfigError for an unknown encoder kind.
std::shared_ptr<const OcrEncoder> make_encoder(const EncoderConfig& cfg);

}  // namespace stedit::ocr
