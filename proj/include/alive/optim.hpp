#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "alive/config.hpp"

namespace alive::optim {

struct OptimError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Group rewards standardized to zero mean / unit population std.
// A group whose spread falls below the sigma floor is degenerate and carries
// all-zero advantages (no learning signal from an undifferentiated group).
struct AdvantageGroup {
  std::vector<double> rewards;
  std::vector<double> advantages;
  bool degenerate = false;
};

// Two-pass standardization with population (uncorrected) standard deviation.
// Throws on an empty group or non-finite rewards.
AdvantageGroup normalize_group(std::vector<double> rewards, double sigma_floor = 1e-8);

// min(rho * A, clip(rho, 1 - eps_low, 1 + eps_high) * A).
double clipped_term(double rho, double advantage, double eps_low, double eps_high);

struct RatioAdvantage {
  double rho;
  double advantage;
};

// Mean clipped surrogate over the group minus kl_coeff * kl_value.
double grpo_objective(std::span<const RatioAdvantage> group, double eps_low, double eps_high,
                      double kl_coeff, double kl_value);

// Mean negative log-likelihood over the sample set (list length = M*N).
// Throws on an empty set or on a positive log-probability.
double fcp_loss(std::span<const double> logprobs);

// Mean NLL of teacher critiques under the policy; same contract as fcp_loss.
double distill_loss(std::span<const double> logprobs);

// Warm-up distillation weight: 1.0 through the warm-up boundary (inclusive),
// 0.0 afterwards.
double lambda3_schedule(int64_t step, int64_t warmup_steps);

struct ObjectiveBreakdown {
  double j_const = 0.0;
  double j_solver = 0.0;
  double l_fcp = 0.0;
  double l_distill = 0.0;
  double total = 0.0;
  int64_t step = 0;
  double lambda2 = 0.0;
  double lambda3 = 0.0;
};

// total = j_const + j_solver - lambda2 * l_fcp - lambda3(step) * l_distill.
ObjectiveBreakdown total_objective(double j_const, double j_solver, double l_fcp,
                                   double l_distill, int64_t step, const LoopConfig& cfg);

}  // namespace alive::optim
