#pragma once

#include <filesystem>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>

#include <opencv2/core.hpp>
#include <torch/torch.h>

#include "stedit/ttf_cmap.hpp"

namespace cv::freetype {
class FreeType2;
}

namespace stedit::glyph {

inline constexpr int kMaxChars = 20;
inline constexpr int64_t kLocalHeight = 36;
inline constexpr int64_t kLocalWidth = 48;
inline constexpr int64_t kGlobalHeight = 48;
inline constexpr int64_t kGlobalWidth = 320;

enum class Language { Latin, Cjk, Mixed };

std::string_view to_string(Language lang);

/// Target text after whitespace normalization: leading/trailing whitespace is
/// stripped, interior spaces are kept and count as characters.
class TextLine {
 public:
  /// Throws EmptyText, TextTooLong (more than kMaxChars) or InvalidText
  /// (malformed UTF-8, control characters).
  static TextLine parse(std::string_view utf8);

  const std::u32string& codepoints() const { return codepoints_; }
  const std::string& utf8() const { return utf8_; }
  int64_t size() const { return static_cast<int64_t>(codepoints_.size()); }
  /// Informational script tag derived from the codepoints.
  Language language() const { return language_; }

  friend bool operator==(const TextLine&, const TextLine&) = default;

 private:
  std::u32string codepoints_;
  std::string utf8_;
  Language language_ = Language::Latin;
};

std::u32string decode_utf8(std::string_view utf8);
std::string encode_utf8(std::u32string_view text);
bool is_blank(char32_t cp);

struct FontSpec {
  std::filesystem::path path = STEDIT_DEFAULT_FONT;
  int local_px = 30;   // nominal glyph height for the 36×48 slices
  int global_px = 36;  // nominal line height for the 48×320 line image
};

/// Loaded font. Immutable after construction; rendering is serialized
/// internally so one instance can be shared across threads.
class Font {
 public:
  explicit Font(FontSpec spec = {});
  ~Font();
  Font(const Font&) = delete;
  Font& operator=(const Font&) = delete;

  const FontSpec& spec() const { return spec_; }
  bool covers(char32_t cp) const;
  /// Throws MissingGlyph naming the first uncovered codepoint.
  void require_coverage(const TextLine& line) const;

  /// Renders `utf8` black-on-white (CV_8UC1) on a scratch canvas large enough
  /// that nothing is clipped.
  cv::Mat draw(std::string_view utf8, int px) const;

 private:
  FontSpec spec_;
  CmapCoverage coverage_;
  cv::Ptr<cv::freetype::FreeType2> face_;
  mutable std::mutex mu_;
};

struct GlyphImages {
  torch::Tensor local;   // N×36×48, float, [0,1], background 1
  torch::Tensor global;  // 48×320
};

/// One centered glyph per character; blank characters give all-ones slices.
torch::Tensor render_local(const TextLine& line, const Font& font);
/// Whole line at height-fitting scale, left-aligned, right-padded; downscaled
/// uniformly when wider than the canvas.
torch::Tensor render_global(const TextLine& line, const Font& font);
GlyphImages render(const TextLine& line, const Font& font);

/// Fraction of pixels darker than 0.5.
double ink_coverage(const torch::Tensor& image);

}  // namespace stedit::glyph
