#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace alive {

// Normalization applied to answers before exact-match comparison.
struct MatchPolicy {
  bool trim_outer = true;
  bool collapse_inner_whitespace = true;
  bool case_sensitive = true;
};

// Parameters of one self-play loop. Defaults follow the reference setup:
// 8 task variants per document, 16 solutions per task, temperature 1.0,
// clip band [0.2, 0.28], KL penalties off, 256 warm-up steps out of 2048.
struct LoopConfig {
  int M = 8;
  int N = 16;
  double temperature = 1.0;
  double eps_clip_low = 0.2;
  double eps_clip_high = 0.28;
  double alpha_kl = 0.0;
  double beta_kl = 0.0;
  double lambda1_long = 1.0;
  double lambda1_short = 0.6;
  int lambda1_threshold_tokens = 16;
  double lambda2 = 0.5;
  int64_t warmup_steps = 256;
  int64_t total_steps = 2048;
  double gate_epsilon = 0.0;
  uint64_t seed = 0;
};

// Synthetic corpus shape: chained modular equations over digit tokens.
struct ToyCorpusSpec {
  int vocab_size = 10;
  int chain_length = 4;
  int modulus = 10;
  uint64_t seed = 0;
};

// Remote generation endpoint settings (OpenAI-compatible chat completions).
struct BackendConfig {
  std::string base_url = "http://127.0.0.1:8000";
  std::string model_name = "policy";
  std::string api_key_env_var;  // empty: no Authorization header
  int max_in_flight = 4;
  double timeout_seconds = 60.0;
  int retry_max = 3;
  double retry_backoff_base_seconds = 0.5;
  int max_tokens_constructor = 1024;
  int max_tokens_solver = 1024;
  int max_tokens_reviewer = 1024;
  bool request_logprobs = false;
  bool native_n = true;  // use the provider's n parameter; else n sequential calls
};

// Gradient step sizes for the tabular toy policy (plain ascent/descent).
struct ToyLearnConfig {
  double lr_constructor = 0.40;
  double lr_solver = 0.80;
  double lr_fcp = 0.50;
  double lr_distill = 0.50;
};

// Full engine configuration: loop parameters plus the per-module knobs that
// are not part of the loop contract itself.
struct EngineConfig {
  LoopConfig loop;
  MatchPolicy match;
  ToyCorpusSpec toy;
  ToyLearnConfig toy_learn;
  double sigma_floor = 1e-8;
  int review_samples = 1;          // reviewer samples averaged per rollout
  double fcp_negative_weight = 1.0;  // upweight for critiques of failed rollouts
  bool gate_enabled = true;        // validity gate on the constructor reward
  std::optional<std::string> templates_dir;  // unset: compiled-in defaults
};

// Returns the list of invariant violations (empty when the config is valid).
// Violations are data, not faults: each entry names the offending field.
std::vector<std::string> validate_config(const LoopConfig& cfg);

// Flat `key = value` config file ('#' comments, blank lines ignored).
// Unknown keys are reported as errors so typos cannot silently revert a
// field to its default. Module-style aliases (clip.eps_low, kl.alpha,
// lambda1.long, ...) are accepted alongside the plain field names.
EngineConfig load_engine_config(const std::filesystem::path& path);
void save_engine_config(const EngineConfig& cfg, const std::filesystem::path& path);
std::string engine_config_to_text(const EngineConfig& cfg);
EngineConfig parse_engine_config_text(const std::string& text);

BackendConfig load_backend_config(const std::filesystem::path& path);

}  // namespace alive
