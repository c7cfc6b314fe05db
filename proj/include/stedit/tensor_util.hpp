#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>

#include <torch/torch.h>

namespace stedit {

/// Throws NonFinite naming `where`, the tensor shape and NaN/Inf counts.
void ensure_finite(const torch::Tensor& t, std::string_view where);

/// Throws BadShape unless `t` has exactly `expected` sizes (-1 matches any extent).
void require_shape(const torch::Tensor& t, std::initializer_list<int64_t> expected, std::string_view what);

std::string shape_string(const torch::Tensor& t);

torch::Generator make_generator(uint64_t seed);

/// Re-initializes every Linear/Conv2d weight of `module` from `gen`
/// (uniform, variance 1/fan_in) and sets biases to zero. Norm layers get
/// unit scale and zero shift.
void seeded_init(torch::nn::Module& module, torch::Generator& gen);

void zero_parameters(torch::nn::Module& module);

/// Order-sensitive hash over every parameter and buffer value of `module`.
uint64_t weights_checksum(const torch::nn::Module& module);

}  // namespace stedit
