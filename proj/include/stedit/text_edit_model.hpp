#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include <torch/torch.h>

#include "stedit/data_pipeline.hpp"
#include "stedit/glyph_conditioning.hpp"
#include "stedit/glyph_render.hpp"
#include "stedit/latent_guidance.hpp"
#include "stedit/noise_schedule.hpp"
#include "stedit/ocr_encoder.hpp"
#include "stedit/toy_models.hpp"

namespace stedit {

struct ModelConfig {
  int64_t canvas = 512;
  glyph::FontSpec font;
  ocr::EncoderConfig ocr;
  cond::ConditioningConfig conditioning;
  latent::LatentConfig latent;
  diffusion::VaeConfig vae;
  diffusion::UnetConfig unet;
  diffusion::ScheduleConfig schedule;

  /// Throws ConfigError on inconsistent sizes.
  void validate() const;
  int64_t latent_size() const { return canvas / 8; }
};

/// Everything about one editing instance that does not depend on the
/// diffusion state. Tensors carry a leading batch dimension of 1.
struct PreparedSample {
  torch::Tensor image;          // 1×3×S×S in [-1,1]
  torch::Tensor pixel_mask;     // 1×1×S×S
  torch::Tensor z0;             // 1×4×S/8×S/8, encoding of the image
  torch::Tensor mask;           // 1×1×S/8×S/8
  torch::Tensor masked_latent;  // 1×4×S/8×S/8, encoding of the erased image
  torch::Tensor style_crop;     // 1×3×S/4×S/4
  cond::GlyphFeatures glyph;    // frozen OCR features of the target text
};

/// ε-prediction interface used by the training objective.
class Denoiser {
 public:
  virtual ~Denoiser() = default;
  virtual torch::Tensor predict(const PreparedSample& sample, const torch::Tensor& z_t, int64_t t,
                                bool null_condition) = 0;
};

/// Glyph conditioning + latent guidance + UNet + VAE around a frozen OCR
/// encoder.
class TextEditModelImpl : public torch::nn::Module, public Denoiser {
 public:
  explicit TextEditModelImpl(const ModelConfig& cfg);

  /// Encodes image, erased image and mask; extracts glyph features. No grad.
  PreparedSample prepare(const data::TextRegionSample& sample);

  /// e_final for the sample's text, or the null condition with the same rows.
  torch::Tensor condition(const PreparedSample& sample, bool null_condition);
  /// Guided latent z_t → ε prediction. `y_style` may be passed to reuse a
  /// precomputed style encoding.
  torch::Tensor predict_with(const PreparedSample& sample, const torch::Tensor& z_t, int64_t t,
                             const torch::Tensor& context, const torch::Tensor& y_style = {});
  torch::Tensor predict(const PreparedSample& sample, const torch::Tensor& z_t, int64_t t,
                        bool null_condition) override;

  /// Conditioner, latent guidance and UNet parameters (the VAE is trained
  /// separately; the OCR encoder never).
  std::vector<torch::Tensor> trainable_parameters();

  const ModelConfig& config() const { return cfg_; }
  const diffusion::NoiseSchedule& schedule() const { return schedule_; }
  const ocr::OcrEncoder& encoder() const { return *encoder_; }
  std::shared_ptr<const glyph::Font> font() const { return font_; }

  cond::GlyphConditioner conditioner{nullptr};
  latent::LatentGuidance guidance{nullptr};
  diffusion::ToyUnet unet{nullptr};
  diffusion::ToyVae vae{nullptr};

 private:
  ModelConfig cfg_;
  std::shared_ptr<const glyph::Font> font_;
  std::shared_ptr<const ocr::OcrEncoder> encoder_;
  diffusion::NoiseSchedule schedule_;
};
TORCH_MODULE(TextEditModel);

}  // namespace stedit
