#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include <opencv2/core.hpp>
#include <torch/torch.h>

#include "stedit/data_pipeline.hpp"
#include "stedit/run_config.hpp"
#include "stedit/sampler.hpp"
#include "stedit/text_edit_model.hpp"

namespace stedit::app {

// ---- train -----------------------------------------------------------------

struct TrainOptions {
  bool resume = false;
  std::optional<int64_t> steps;  // overrides train.steps
};

struct TrainSummary {
  std::filesystem::path checkpoint;
  std::filesystem::path log_csv;
  int64_t start_step = 0;
  int64_t end_step = 0;
  double first_logged_loss = 0;
  double last_logged_loss = 0;
  double eval_loss_start = 0;  // fixed-draw loss on the fixed set before training
  double eval_loss_end = 0;
  double vae_mse = -1;  // reconstruction MSE after VAE training (-1: not trained in this run)
};

/// Trains VAE (fresh runs only) and the editing model; writes periodic
/// checkpoints and a step,loss CSV. Throws ConfigError before any compute
/// when referenced paths are missing.
TrainSummary cmd_train(const RunConfig& cfg, const TrainOptions& opts = {});

// ---- edit ------------------------------------------------------------------

struct EditInputs {
  cv::Mat rgb;                          // CV_8UC3, RGB
  std::optional<data::Polygon> polygon; // exactly one of polygon / mask
  std::optional<cv::Mat> mask;          // CV_8UC1, nonzero = edit
  std::string text;
  diffusion::SamplerConfig sampler;
};

struct EditOutput {
  cv::Mat rgb;  // same size as the input
  std::map<std::string, double> timings_ms;
  std::vector<std::string> warnings;
};

/// Validates inputs (BadInput), samples, maps the result back to the input
/// resolution and composites: pixels outside the mask are the input's.
EditOutput run_edit(TextEditModel& model, const EditInputs& inputs);

struct EditOptions {
  std::filesystem::path checkpoint;
  std::filesystem::path image;
  std::optional<std::string> polygon_json;  // [[x,y],...]
  std::optional<std::filesystem::path> mask;
  std::string text;
  double cfg_scale = 3.0;
  int64_t steps = 20;
  uint64_t seed = 0;
  double eta = 0.0;
  std::filesystem::path out;
};

data::Polygon parse_polygon_json(const std::string& text);
EditOutput cmd_edit(const EditOptions& opts);

// ---- eval / debug ------------------------------------------------------------

struct EvalCommandOptions {
  std::filesystem::path pred_dir, gt_dir, out;
  EvalSettings settings;
  ocr::EncoderConfig ocr;
};

/// Writes the metrics report JSON and returns the formatted table.
std::string cmd_eval(const EvalCommandOptions& opts);

/// Writes global.png and local_XX.png (8-bit grayscale) into `out_dir`.
std::vector<std::filesystem::path> cmd_render_glyphs(const std::string& text, const std::filesystem::path& out_dir,
                                                     const glyph::FontSpec& font = {});

/// Dumps mask, style crop and latent statistics for one region; writes
/// mask.png and style_crop.png into `out_dir`.
nlohmann::json cmd_latent_stats(const RunConfig& cfg, const std::filesystem::path& image,
                                const std::string& polygon_json, const std::string& text,
                                const std::filesystem::path& out_dir);

}  // namespace stedit::app
