#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <torch/torch.h>

namespace stedit::diffusion {

struct ScheduleConfig {
  int64_t steps = 1000;  // T
  double beta_start = 1e-4;
  double beta_end = 2e-2;
};

/// Linear beta schedule with cumulative products, held in double precision.
class NoiseSchedule {
 public:
  explicit NoiseSchedule(const ScheduleConfig& cfg = {});

  int64_t T() const { return cfg_.steps; }
  const ScheduleConfig& config() const { return cfg_; }
  const torch::Tensor& betas() const { return betas_; }
  const torch::Tensor& alpha_bars() const { return alpha_bars_; }
  /// alpha_bar at step t; t == -1 means the clean end point (1.0).
  double alpha_bar(int64_t t) const;

  /// sqrt(ab_t)·z0 + sqrt(1-ab_t)·eps. Throws BadTimestep, BadShape.
  torch::Tensor add_noise(const torch::Tensor& z0, int64_t t, const torch::Tensor& eps) const;

  void check_timestep(int64_t t) const;

 private:
  ScheduleConfig cfg_;
  torch::Tensor betas_;
  torch::Tensor alpha_bars_;
  std::vector<double> ab_;
};

/// eps_uncond + scale·(eps_cond − eps_uncond). Scales 1 and 0 return the
/// corresponding branch exactly.
torch::Tensor cfg_combine(const torch::Tensor& eps_cond, const torch::Tensor& eps_uncond, double scale);

/// `steps` uniformly spaced timesteps in descending order,
/// t_i = floor(i·T/steps) for i = steps-1 … 0.
std::vector<int64_t> ddim_timesteps(int64_t T, int64_t steps);

/// One DDIM update from step t to t_prev (t_prev == -1: clean end point).
/// `noise` is required when eta > 0.
torch::Tensor ddim_step(const NoiseSchedule& schedule, const torch::Tensor& x_t, const torch::Tensor& eps, int64_t t,
                        int64_t t_prev, double eta, const std::optional<torch::Tensor>& noise = std::nullopt);

using EpsFn = std::function<torch::Tensor(const torch::Tensor& x_t, int64_t t)>;

/// Runs the DDIM chain from x_T over ddim_timesteps(T, steps).
torch::Tensor ddim_loop(const NoiseSchedule& schedule, torch::Tensor x, int64_t steps, double eta, const EpsFn& eps_fn,
                        torch::Generator* gen = nullptr);

}  // namespace stedit::diffusion
