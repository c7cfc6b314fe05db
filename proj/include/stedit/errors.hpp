#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stedit {

enum class ErrorCode {
  // glyph_render
  EmptyText,
  TextTooLong,
  InvalidText,
  MissingGlyph,
  FontError,
  // shapes and numerics
  BadShape,
  LevelCountMismatch,
  SpatialMismatch,
  DimMismatch,
  RowCountMismatch,
  NonFinite,
  BadTimestep,
  // data
  MissingFile,
  SchemaError,
  DegeneratePolygon,
  DataError,
  // metrics
  EmptyInput,
  EmptyGroundTruth,
  TooFewSamples,
  NonPSD,
  // application
  ConfigError,
  CheckpointError,
  BadInput,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; `code()` identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace stedit
