#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <opencv2/core.hpp>
#include <torch/torch.h>

#include "stedit/glyph_render.hpp"

namespace stedit::data {

struct Point {
  double x = 0, y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

/// Integer pixel box, half-open: [x0, x1) × [y0, y1).
struct Box {
  int64_t x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  int64_t width() const { return x1 - x0; }
  int64_t height() const { return y1 - y0; }
  friend bool operator==(const Box&, const Box&) = default;
};

struct Polygon {
  std::vector<Point> points;

  double area() const;  // shoelace, unsigned
  bool is_simple() const;
  bool within(int64_t width, int64_t height) const;
  /// Smallest pixel box containing the polygon, clipped to the image.
  Box bbox(int64_t width, int64_t height) const;
  Polygon transformed(double sx, double sy, double dx, double dy) const;

  static Polygon rect(double x0, double y0, double x1, double y1);
  friend bool operator==(const Polygon&, const Polygon&) = default;
};

/// Rasterizes by pixel-center sampling (even-odd rule), inside = 1.
/// Returns 1×h×w float. Throws DegeneratePolygon for fewer than 3 points or
/// zero area.
torch::Tensor polygon_to_mask(const Polygon& polygon, int64_t height, int64_t width);

struct Region {
  std::string text;
  Polygon polygon;
  friend bool operator==(const Region&, const Region&) = default;
};

struct AnnotatedImage {
  std::string image;                  // as written in the manifest
  std::filesystem::path resolved;     // image relative to the manifest directory
  std::vector<Region> regions;
  friend bool operator==(const AnnotatedImage& a, const AnnotatedImage& b) {
    return a.image == b.image && a.regions == b.regions;
  }
};

/// Lazy JSONL reader. Each non-blank line is
///   {"image": str, "regions": [{"text": str, "polygon": [[x, y], ...]}, ...]}
/// Throws MissingFile on open and SchemaError (line number + field) on read.
class ManifestReader {
 public:
  explicit ManifestReader(const std::filesystem::path& path);
  std::optional<AnnotatedImage> next();
  int64_t line_number() const { return line_no_; }

 private:
  std::filesystem::path dir_;
  std::ifstream in_;
  int64_t line_no_ = 0;
};

std::vector<AnnotatedImage> read_manifest(const std::filesystem::path& path);
void write_manifest(const std::filesystem::path& path, const std::vector<AnnotatedImage>& records);
/// Parses one manifest line; `where` is used in error messages.
AnnotatedImage parse_record(const std::string& json_line, const std::string& where);
std::string format_record(const AnnotatedImage& record);

/// Aspect-preserving fit of a w×h image into a square canvas, centered.
struct Letterbox {
  double sx = 1, sy = 1;         // per-axis scale (the resized extent is rounded)
  int64_t dx = 0, dy = 0;        // offset of the resized image in the canvas
  int64_t width = 0, height = 0; // resized image extent
  int64_t canvas = 0;

  static Letterbox fit(int64_t src_width, int64_t src_height, int64_t canvas);
  Polygon apply(const Polygon& p) const { return p.transformed(sx, sy, double(dx), double(dy)); }
};

/// Letterboxes an 8-bit RGB image into a canvas×canvas 3×S×S tensor in
/// [-1,1]; padding is mid-gray (0).
torch::Tensor letterbox_image(const cv::Mat& rgb, const Letterbox& lb);
/// Letterboxes a 1×H×W binary mask (nearest neighbor; padding 0).
torch::Tensor letterbox_mask(const torch::Tensor& mask, const Letterbox& lb);

/// Axis-aligned crop of a C×H×W image, bilinearly resized to size×size.
torch::Tensor crop_box(const torch::Tensor& chw, const Box& box, int64_t size);
/// Style crop edge for a given canvas.
inline int64_t style_size(int64_t canvas) { return canvas / 4; }

struct TextRegionSample {
  torch::Tensor image;       // 3×S×S in [-1,1]
  Polygon polygon;           // canvas coordinates
  glyph::TextLine text;
  torch::Tensor mask;        // 1×S×S binary
  torch::Tensor style_crop;  // 3×S/4×S/4 in [-1,1]
  int64_t region_index = 0;
};

/// Builds a sample for region `index` of an already-decoded record image.
TextRegionSample make_sample(const cv::Mat& rgb, const Region& region, int64_t index, int64_t canvas);
/// Builds a sample from an image-space mask instead of a polygon (editing
/// with a user-supplied mask). The style crop uses the mask's bounding box.
TextRegionSample make_sample_from_mask(const cv::Mat& rgb, const torch::Tensor& mask, const glyph::TextLine& text,
                                       int64_t canvas);

/// Uniform index in [0, n).
int64_t draw_index(std::mt19937_64& rng, int64_t n);

/// Uniformly picks one region of `record`, loads its image and builds the
/// sample at `canvas` resolution.
TextRegionSample sample_pair(const AnnotatedImage& record, std::mt19937_64& rng, int64_t canvas = 512);

/// Checks polygon simplicity and image bounds. Throws DataError.
void validate_record(const AnnotatedImage& record, int64_t width, int64_t height);

/// Training-time view of a manifest: records whose texts cannot be rendered
/// (too long, invalid, missing glyphs) are dropped with a warning.
class RegionDataset {
 public:
  RegionDataset(const std::filesystem::path& manifest, const glyph::Font& font, int64_t canvas);

  int64_t size() const { return static_cast<int64_t>(entries_.size()); }
  int64_t skipped() const { return skipped_; }
  /// Sample for usable region `i` (fixed order: record, then region).
  TextRegionSample get(int64_t i) const;
  /// Uniform record, then uniform usable region inside it.
  TextRegionSample draw(std::mt19937_64& rng) const;
  /// Letterboxed 3×S×S image of every record with a usable region.
  std::vector<torch::Tensor> canvas_images() const;

 private:
  struct Entry {
    int64_t record;
    int64_t region;
  };
  std::vector<AnnotatedImage> records_;
  std::vector<Entry> entries_;
  std::vector<std::vector<int64_t>> by_record_;
  int64_t canvas_;
  int64_t skipped_ = 0;
};

}  // namespace stedit::data
