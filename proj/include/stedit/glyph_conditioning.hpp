#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include <torch/torch.h>

#include "stedit/backbone_fusion.hpp"
#include "stedit/glyph_render.hpp"
#include "stedit/glyph_transformer.hpp"
#include "stedit/ocr_encoder.hpp"

namespace stedit::cond {

struct ConditioningConfig {
  int64_t fusion_dim = 64;  // D
  int64_t d_model = 512;
  int64_t d_output = 1024;
  int64_t layers = 4;
  int64_t heads = 2;
  double rope_base = 10000.0;
  bool rope = true;
  // Ablation switches, applied in order: fusion → backbone path → transformers.
  bool multi_level_fusion = true;
  bool backbone_path = true;
  bool glyph_transformers = true;
  uint64_t seed = 7;
};

/// Cross-attention condition e_final, one row per character.
struct ConditionEmbedding {
  torch::Tensor e_final;  // N×d_output
  int64_t rows() const { return e_final.size(0); }
};

/// Frozen OCR features of one text line's glyph images.
struct GlyphFeatures {
  std::vector<torch::Tensor> local_levels;   // N×C_i×H_i×W_i
  torch::Tensor local_neck;                  // N×d_neck
  std::vector<torch::Tensor> global_levels;  // 1×C_i×H_i×W_i
  torch::Tensor global_neck;                 // 1×d_neck
  int64_t rows() const { return local_neck.size(0); }
};

/// Glyph rendering → OCR → (fusion, two glyph transformers, aggregator) → e_final.
class GlyphConditionerImpl : public torch::nn::Module {
 public:
  GlyphConditionerImpl(const ConditioningConfig& cfg, std::shared_ptr<const glyph::Font> font,
                       std::shared_ptr<const ocr::OcrEncoder> encoder);

  ConditionEmbedding build_condition(const glyph::TextLine& line);
  /// Trainable part of the pipeline, starting from frozen OCR features.
  ConditionEmbedding forward(const GlyphFeatures& features);
  /// Learned null embedding repeated `n_rows` times. Throws BadInput for n_rows < 1.
  ConditionEmbedding null_condition(int64_t n_rows);

  /// Render + OCR encode; results are cached per text (the encoder is frozen).
  GlyphFeatures extract_features(const glyph::TextLine& line) const;

  /// Backbone fusion (or last-level pooling when multi-level fusion is off), B×D.
  torch::Tensor fuse_backbone(const std::vector<torch::Tensor>& levels);
  /// Concatenate along features, then project: (N×d, N×d) → N×d_output.
  ConditionEmbedding aggregate(const torch::Tensor& e_backbone, const torch::Tensor& e_neck);

  const ConditioningConfig& config() const { return cfg_; }
  const ocr::OcrEncoder& encoder() const { return *encoder_; }
  const glyph::Font& font() const { return *font_; }

  BackboneFusion fusion{nullptr};
  GlyphTransformer backbone_transformer{nullptr};
  GlyphTransformer neck_transformer{nullptr};
  torch::nn::Linear aggregator{nullptr};
  // Used when both glyph transformers are ablated.
  torch::Tensor position_embedding;
  torch::nn::Linear vanilla_projection{nullptr};
  torch::Tensor null_embedding;

 private:
  ConditioningConfig cfg_;
  std::shared_ptr<const glyph::Font> font_;
  std::shared_ptr<const ocr::OcrEncoder> encoder_;
  mutable std::mutex cache_mu_;
  mutable std::map<std::string, GlyphFeatures> cache_;
};
TORCH_MODULE(GlyphConditioner);

}  // namespace stedit::cond
