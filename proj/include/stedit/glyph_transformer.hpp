#pragma once

#include <cstdint>

#include <torch/torch.h>

namespace stedit::cond {

struct GlyphTransformerConfig {
  int64_t d_local = 512;
  int64_t d_global = 512;
  int64_t d_model = 512;
  int64_t d_output = 1024;
  int64_t layers = 4;
  int64_t heads = 2;
  double rope_base = 10000.0;
  int64_t ffn_mult = 4;

  /// Throws DimMismatch unless d_model is divisible by 2·heads and all dims are positive.
  void validate() const;
};

/// Rotates consecutive dimension pairs (2m, 2m+1) of each row by
/// position·base^(-2m/d). `x` is ...×N×d with the position on dim -2.
torch::Tensor apply_rope(const torch::Tensor& x, double base);

/// One pre-norm cross-attention block. The state stream (initialized from the
/// repeated global feature) supplies keys and carries the residual; the local
/// stream supplies queries and values.
class GlyphAttentionLayerImpl : public torch::nn::Module {
 public:
  GlyphAttentionLayerImpl(int64_t d_model, int64_t heads, int64_t ffn_mult);

  torch::Tensor forward(const torch::Tensor& state, const torch::Tensor& local, bool rope, double rope_base);
  /// heads×N×N attention logits (after ROPE, before softmax).
  torch::Tensor logits(const torch::Tensor& state, const torch::Tensor& local, bool rope, double rope_base);

  torch::nn::LayerNorm norm_local{nullptr}, norm_state{nullptr}, norm_ffn{nullptr};
  torch::nn::Linear query{nullptr}, key{nullptr}, value{nullptr}, out{nullptr};
  torch::nn::Linear ffn_in{nullptr}, ffn_out{nullptr};

 private:
  torch::Tensor split_heads(const torch::Tensor& x) const;
  int64_t heads_;
};
TORCH_MODULE(GlyphAttentionLayer);

/// Cross-attention between per-character local features (N×d_local) and a
/// line-level global feature (1×d_global), producing N×d_output.
class GlyphTransformerImpl : public torch::nn::Module {
 public:
  explicit GlyphTransformerImpl(const GlyphTransformerConfig& cfg);

  torch::Tensor forward(const torch::Tensor& local, const torch::Tensor& global, bool rope = true);
  /// Raw attention logits of the first layer, heads×N×N.
  torch::Tensor first_layer_logits(const torch::Tensor& local, const torch::Tensor& global, bool rope = true);

  const GlyphTransformerConfig& config() const { return cfg_; }

  torch::nn::Linear local_in{nullptr}, global_in{nullptr}, head{nullptr};
  torch::nn::ModuleList layers;

 private:
  std::pair<torch::Tensor, torch::Tensor> project_inputs(const torch::Tensor& local, const torch::Tensor& global);
  GlyphTransformerConfig cfg_;
};
TORCH_MODULE(GlyphTransformer);

}  // namespace stedit::cond
