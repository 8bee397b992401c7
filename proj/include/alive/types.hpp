#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "alive/config.hpp"

namespace alive {

inline constexpr int kSchemaVersion = 1;

// A raw text unit entering the loop; the constructor's sole input.
struct Document {
  std::string id;
  std::string text;
  std::string source;  // corpus name or "toy"
  std::optional<int64_t> seed;  // set when the document was synthesized
};

// One masked-span task: query with the gap, plus the hidden answer.
struct ConstructedTask {
  std::string task_id;
  std::string document_id;
  std::string query;         // task text with the masked gap
  std::string hidden_truth;  // the removed span, withheld from the solver
  std::string thought;       // constructor rationale
  int rollout_index = 0;     // in [0, M)
  bool valid = false;        // set after parsing / construction checks
};

// One solver sample: reasoning trace plus the parsed final answer.
struct SolverRollout {
  std::string rollout_id;
  std::string task_id;
  std::string reasoning;
  std::string answer;    // parsed answer section, never the full completion
  int sample_index = 0;  // in [0, N), unique per task
  std::optional<double> logprob_old;  // summed sampling-time log-probability
};

enum class ReviewerKind { self_review, teacher };

// Structured feedback for one rollout: analysis, critique, soft score.
struct Review {
  std::string rollout_id;
  std::string analysis;
  std::string critique;
  double soft_score = 0.0;  // in [0, 1]
  ReviewerKind reviewer_kind = ReviewerKind::self_review;
};

enum class RewardKind { constructor, solver_hard, solver_soft, solver_total };

struct RewardRecord {
  std::string subject;  // task_id or rollout_id
  RewardKind kind = RewardKind::constructor;
  double value = 0.0;
  std::optional<double> lambda1_used;  // solver_total only
};

enum class BatchItemKind { document, constructor_task, fcp_sample, distill_sample };

// One exported training record. Per self-play step the persisted multiset is
// 1 document + M constructor_task + (realized) fcp_sample, plus distill_sample
// during warm-up.
struct TrainingBatchItem {
  BatchItemKind kind = BatchItemKind::document;
  nlohmann::json payload;  // serialized prompt/target pair
  std::optional<double> advantage;  // constructor_task / fcp_sample
  int64_t step = 0;
};

struct StepMetrics {
  int64_t step = 0;
  double constructor_reward_mean = 0.0;
  double solver_acc_mean = 0.0;
  std::optional<double> fcp_loss;          // absent when no policy NLL is available
  std::optional<double> entropy_estimate;  // toy mode only
  double valid_task_fraction = 0.0;
};

const char* to_string(ReviewerKind k);
const char* to_string(RewardKind k);
const char* to_string(BatchItemKind k);
ReviewerKind reviewer_kind_from_string(const std::string& s);
RewardKind reward_kind_from_string(const std::string& s);
BatchItemKind batch_item_kind_from_string(const std::string& s);

// Effective number of batch records one loop step contributes:
// 1 + M + M*N, plus another M*N teacher-distillation records during warm-up.
int64_t count_batch_items(int M, int N, bool warmup);

// Per-type invariant checks. Empty result means the record may be persisted.
std::vector<std::string> validate(const Document& d);
std::vector<std::string> validate(const ConstructedTask& t);
std::vector<std::string> validate(const SolverRollout& r);
std::vector<std::string> validate(const Review& r);
std::vector<std::string> validate(const RewardRecord& r);
std::vector<std::string> validate(const TrainingBatchItem& b);
std::vector<std::string> validate(const StepMetrics& m);

// JSONL encoding. Every record carries `kind` and `schema_version`; field
// names match the struct members verbatim, optional fields are omitted when
// absent, and doubles round-trip exactly.
void to_json(nlohmann::json& j, const Document& d);
void from_json(const nlohmann::json& j, Document& d);
void to_json(nlohmann::json& j, const ConstructedTask& t);
void from_json(const nlohmann::json& j, ConstructedTask& t);
void to_json(nlohmann::json& j, const SolverRollout& r);
void from_json(const nlohmann::json& j, SolverRollout& r);
void to_json(nlohmann::json& j, const Review& r);
void from_json(const nlohmann::json& j, Review& r);
void to_json(nlohmann::json& j, const RewardRecord& r);
void from_json(const nlohmann::json& j, RewardRecord& r);
void to_json(nlohmann::json& j, const TrainingBatchItem& b);
void from_json(const nlohmann::json& j, TrainingBatchItem& b);
void to_json(nlohmann::json& j, const StepMetrics& m);
void from_json(const nlohmann::json& j, StepMetrics& m);

}  // namespace alive
