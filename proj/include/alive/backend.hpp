#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "alive/config.hpp"
#include "alive/prompt.hpp"

namespace alive::backend {

using prompt::Role;

struct GenRequest {
  Role role = Role::solver;
  std::string prompt;
  int n = 1;
  double temperature = 1.0;
  int max_tokens = 1024;
  std::string tag;  // correlation id, echoed back on the result
};

struct GenResult {
  std::string tag;
  std::vector<std::string> completions;  // length n, provider index order
  std::optional<std::vector<double>> logprobs;  // summed per completion
};

// Transport/contract failure. message carries the per-attempt log.
struct BackendError : std::runtime_error {
  explicit BackendError(const std::string& msg, int attempts_ = 1)
      : std::runtime_error(msg), attempts(attempts_) {}
  int attempts;
};

// Per-request outcome inside a group: a fault on one request never poisons
// its siblings.
struct GenOutcome {
  std::optional<GenResult> result;
  std::string error;
  int attempts = 1;
  bool ok() const { return result.has_value(); }
};

struct HealthReport {
  bool ok = false;
  std::string message;
};

// Uniform generation interface for the three roles. Implementations must be
// shareable across concurrent callers.
class Backend {
 public:
  virtual ~Backend() = default;

  // Exactly n completions in a deterministic order; throws BackendError on
  // transport failure (after retries) or a short completion set.
  virtual GenResult generate(const GenRequest& req) = 0;

  // Results in request order regardless of completion order, with at most
  // max_in_flight requests outstanding at any moment. Faults are per item.
  virtual std::vector<GenOutcome> generate_group(const std::vector<GenRequest>& reqs) = 0;

  // Ok iff a minimal generation round-trip succeeds.
  virtual HealthReport health() = 0;
};

// OpenAI-compatible chat-completion client:
// POST {base_url}/v1/chat/completions with a single user message.
// Retries 429/5xx with exponential backoff and jitter; other 4xx are terminal.
std::shared_ptr<Backend> make_http_backend(const BackendConfig& cfg);

// max_tokens for a role, from the backend config.
int max_tokens_for(const BackendConfig& cfg, Role role);

}  // namespace alive::backend
