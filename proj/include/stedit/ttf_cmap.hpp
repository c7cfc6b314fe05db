#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace stedit::glyph {

/// Set of codepoints mapped to a real glyph by a TrueType/OpenType font's
/// `cmap` table (formats 4 and 12; the first face of a collection).
class CmapCoverage {
 public:
  static CmapCoverage from_file(const std::filesystem::path& path);
  static CmapCoverage from_bytes(std::span<const uint8_t> font);

  bool contains(char32_t cp) const;
  size_t size() const { return codepoints_.size(); }

 private:
  std::vector<char32_t> codepoints_;  // sorted, unique
};

}  // namespace stedit::glyph
