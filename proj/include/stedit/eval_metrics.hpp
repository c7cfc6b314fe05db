#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include <torch/torch.h>

#include "stedit/data_pipeline.hpp"
#include "stedit/ocr_encoder.hpp"

namespace stedit::eval {

struct NormalizeOptions {
  bool strip_whitespace = true;
  bool case_sensitive = true;
};

std::string normalize_text(std::string_view text, const NormalizeOptions& opts = {});

struct TextPair {
  std::string predicted;
  std::string target;
};

/// Fraction of exact matches after normalization. Throws EmptyInput.
double sentence_accuracy(const std::vector<TextPair>& pairs, const NormalizeOptions& opts = {});

/// Unit-cost insert/delete/substitute distance over Unicode codepoints.
int64_t levenshtein(std::u32string_view a, std::u32string_view b);
/// levenshtein(pred, gt) / len(gt) over codepoints. Throws EmptyGroundTruth.
double cer(std::string_view predicted, std::string_view target, const NormalizeOptions& opts = {});
double mean_cer(const std::vector<TextPair>& pairs, const NormalizeOptions& opts = {});

/// Fréchet distance between Gaussian fits of two feature sets (rows are
/// samples): ‖μa−μb‖² + Tr(Σa + Σb − 2(ΣaΣb)^½), with 1e-6·I added to both
/// covariances. Throws TooFewSamples (fewer than 2 rows) and NonPSD.
double frechet_distance(const torch::Tensor& features_a, const torch::Tensor& features_b);

/// Maps B×3×h×w crops in [-1,1] to B×d feature vectors.
class FeatureEmbedder {
 public:
  virtual ~FeatureEmbedder() = default;
  virtual torch::Tensor embed(const torch::Tensor& crops) const = 0;
};

/// Per-sample perceptual distance between two B×3×h×w crop batches.
class PerceptualDistance {
 public:
  virtual ~PerceptualDistance() = default;
  virtual torch::Tensor distance(const torch::Tensor& a, const torch::Tensor& b) const = 0;
};

/// Default FID embedder: grayscale crop resized to 48×320, global average of
/// every OCR-stub backbone level, concatenated.
class StubFeatureEmbedder final : public FeatureEmbedder {
 public:
  explicit StubFeatureEmbedder(std::shared_ptr<const ocr::StubOcrEncoder> encoder);
  torch::Tensor embed(const torch::Tensor& crops) const override;

 private:
  std::shared_ptr<const ocr::StubOcrEncoder> encoder_;
};

/// Default perceptual distance: channel-normalized squared differences of the
/// OCR-stub backbone levels, averaged over positions and levels.
class StubPerceptualDistance final : public PerceptualDistance {
 public:
  explicit StubPerceptualDistance(std::shared_ptr<const ocr::StubOcrEncoder> encoder);
  torch::Tensor distance(const torch::Tensor& a, const torch::Tensor& b) const override;

 private:
  std::shared_ptr<const ocr::StubOcrEncoder> encoder_;
};

double fid(const torch::Tensor& crops_a, const torch::Tensor& crops_b, const FeatureEmbedder& embedder);
/// Mean per-pair distance. Throws EmptyInput.
double avg_lpips(const torch::Tensor& generated, const torch::Tensor& reference, const PerceptualDistance& metric);

/// Bounding-box crop of a 3×H×W image resized to size×size. Throws
/// DegeneratePolygon.
torch::Tensor crop_regions(const torch::Tensor& image, const data::Polygon& polygon, int64_t size = 128);

struct MetricsReport {
  double sen_acc = 0;
  double cer = 0;
  double fid = 0;
  double avg_lpips = 0;
  int64_t n_pairs = 0;

  nlohmann::json to_json() const;
  /// Plain-text table: Sen.Acc, CER, FID, Avg.LPIPS columns.
  std::string table(const std::string& row_label = "ours") const;
};

struct EvalOptions {
  NormalizeOptions normalize;
  int64_t crop = 128;
};

/// Pairs two sidecar directories (each with manifest.jsonl) by record order
/// and region index. The prediction sidecar's `text` holds recognized text.
MetricsReport evaluate_directories(const std::filesystem::path& pred_dir, const std::filesystem::path& gt_dir,
                                   const FeatureEmbedder& embedder, const PerceptualDistance& perceptual,
                                   const EvalOptions& opts = {});

}  // namespace stedit::eval
