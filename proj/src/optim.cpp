#include "alive/optim.hpp"

#include <algorithm>
#include <cmath>

namespace alive::optim {

AdvantageGroup normalize_group(std::vector<double> rewards, double sigma_floor) {
  if (rewards.empty()) throw OptimError("normalize_group: empty group");
  for (double r : rewards)
    if (!std::isfinite(r)) throw OptimError("normalize_group: non-finite reward");

  const double n = static_cast<double>(rewards.size());
  double mean = 0.0;
  for (double r : rewards) mean += r;
  mean /= n;
  double var = 0.0;
  for (double r : rewards) {
    double d = r - mean;
    var += d * d;
  }
  var /= n;  // population variance, no Bessel correction
  const double sigma = std::sqrt(var);

  AdvantageGroup g;
  g.rewards = std::move(rewards);
  g.advantages.resize(g.rewards.size());
  if (sigma < sigma_floor) {
    g.degenerate = true;
    std::fill(g.advantages.begin(), g.advantages.end(), 0.0);
  } else {
    for (size_t i = 0; i < g.rewards.size(); ++i) g.advantages[i] = (g.rewards[i] - mean) / sigma;
  }
  return g;
}

double clipped_term(double rho, double advantage, double eps_low, double eps_high) {
  const double clipped_rho = std::clamp(rho, 1.0 - eps_low, 1.0 + eps_high);
  return std::min(rho * advantage, clipped_rho * advantage);
}

double grpo_objective(std::span<const RatioAdvantage> group, double eps_low, double eps_high,
                      double kl_coeff, double kl_value) {
  double sum = 0.0;
  for (const auto& item : group) sum += clipped_term(item.rho, item.advantage, eps_low, eps_high);
  const double mean = group.empty() ? 0.0 : sum / static_cast<double>(group.size());
  return mean - kl_coeff * kl_value;
}

namespace {
double mean_nll(std::span<const double> logprobs, const char* what) {
  if (logprobs.empty()) throw OptimError(std::string(what) + ": empty sample set");
  double sum = 0.0;
  for (double lp : logprobs) {
    if (!(lp <= 0.0))
      throw OptimError(std::string(what) + ": positive log-probability (improper distribution)");
    sum += lp;
  }
  return -sum / static_cast<double>(logprobs.size());
}
}  // namespace

double fcp_loss(std::span<const double> logprobs) { return mean_nll(logprobs, "fcp_loss"); }

double distill_loss(std::span<const double> logprobs) {
  return mean_nll(logprobs, "distill_loss");
}

double lambda3_schedule(int64_t step, int64_t warmup_steps) {
  return step <= warmup_steps ? 1.0 : 0.0;
}

ObjectiveBreakdown total_objective(double j_const, double j_solver, double l_fcp,
                                   double l_distill, int64_t step, const LoopConfig& cfg) {
  ObjectiveBreakdown b;
  b.j_const = j_const;
  b.j_solver = j_solver;
  b.l_fcp = l_fcp;
  b.l_distill = l_distill;
  b.step = step;
  b.lambda2 = cfg.lambda2;
  b.lambda3 = lambda3_schedule(step, cfg.warmup_steps);
  b.total = j_const + j_solver - b.lambda2 * l_fcp - b.lambda3 * l_distill;
  return b;
}

}  // namespace alive::optim
