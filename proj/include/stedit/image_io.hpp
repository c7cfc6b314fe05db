#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <opencv2/core.hpp>
#include <torch/torch.h>

namespace stedit::io {

/// 8-bit RGB image (CV_8UC3, RGB channel order). Throws MissingFile / DataError.
cv::Mat read_rgb(const std::filesystem::path& path);
/// 8-bit single-channel image. Throws MissingFile / DataError.
cv::Mat read_gray(const std::filesystem::path& path);

void write_png(const std::filesystem::path& path, const cv::Mat& image_rgb_or_gray);

std::vector<uint8_t> encode_png(const cv::Mat& image_rgb_or_gray);
/// Decodes PNG (or any OpenCV-supported format) bytes. `gray` selects single-channel output.
cv::Mat decode_image(const std::vector<uint8_t>& bytes, bool gray = false);

/// CV_8UC3 RGB → float tensor 3×H×W in [-1,1].
torch::Tensor rgb_to_tensor(const cv::Mat& rgb);
/// Float tensor 3×H×W in [-1,1] → CV_8UC3 RGB (clamped, rounded).
cv::Mat tensor_to_rgb(const torch::Tensor& chw);
/// Float tensor H×W in [0,1] → CV_8UC1.
cv::Mat unit_gray_to_mat(const torch::Tensor& hw);

/// Bilinear resize of a C×H×W tensor (antialiased when shrinking).
torch::Tensor resize_chw(const torch::Tensor& chw, int64_t height, int64_t width);

std::string base64_encode(const std::vector<uint8_t>& bytes);
/// Throws BadInput on malformed input.
std::vector<uint8_t> base64_decode(std::string_view text);

std::vector<uint8_t> read_file_bytes(const std::filesystem::path& path);

}  // namespace stedit::io
