#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "alive/backend.hpp"
#include "alive/config.hpp"
#include "alive/optim.hpp"
#include "alive/toy.hpp"
#include "alive/types.hpp"

namespace alive::engine {

struct EngineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Mode { toy, remote };
enum class ReviewerSource { self_review, oracle };

struct RunMode {
  Mode mode = Mode::toy;
  ReviewerSource reviewer_source = ReviewerSource::self_review;
  std::optional<BackendConfig> oracle_backend;  // required when reviewer_source==oracle
};

std::vector<std::string> validate(const RunMode& mode);

// Everything one loop step produced, before/while being persisted.
struct StepPlan {
  int64_t step = 0;
  Document document;
  std::vector<ConstructedTask> tasks;                 // exactly M
  std::vector<SolverRollout> rollouts;                // realized (valid tasks only)
  std::vector<Review> reviews;                        // one per rollout
  optim::AdvantageGroup constructor_group;            // M members
  std::vector<optim::AdvantageGroup> solver_groups;   // M entries; empty for invalid tasks
  std::vector<TrainingBatchItem> batch_items;
  int skipped_rollout_slots = 0;  // N slots per invalid task, not generated

  uint64_t digest() const;  // order-sensitive content hash
};

struct StepOutcome {
  StepPlan plan;
  StepMetrics metrics;
  optim::ObjectiveBreakdown breakdown;
};

struct RunSummary {
  int64_t steps_completed = 0;
  int64_t steps_resumed_from = 0;  // 0 when the run started fresh
  std::vector<StepMetrics> metrics;  // newly executed steps only
};

// Orchestrates the loop: task construction, solving, review, rewards and
// advantages, then either tabular updates (toy) or batch-item emission
// (remote). Step persistence is atomic: a step directory appears only
// complete, so an interrupted run resumes from the last finished step.
class Engine {
 public:
  Engine(EngineConfig cfg, RunMode mode, std::filesystem::path run_dir,
         std::shared_ptr<backend::Backend> primary = nullptr,
         std::shared_ptr<backend::Backend> oracle = nullptr);

  // One self-play step over one document. Persists the step directory and,
  // in toy mode, applies the parameter updates.
  StepOutcome run_step(const Document& doc, int64_t step);

  // Warm-up variant: additionally collects one teacher critique per rollout
  // for distillation. Refuses steps past the warm-up boundary.
  StepOutcome run_warmup_step(const Document& doc, int64_t step);

  // Warm-up steps then self-play steps up to total_steps, one document per
  // step (cycling through the corpus). Resumes from persisted state when the
  // run directory already contains completed steps.
  RunSummary run(const std::vector<Document>& corpus);

  const EngineConfig& config() const { return cfg_; }
  const RunMode& mode() const { return mode_; }
  const std::filesystem::path& run_dir() const { return run_dir_; }
  const toy::ToyParams& toy_params() const { return params_; }

 private:
  struct TaskEval;

  StepOutcome execute_step(const Document& doc, int64_t step, bool warmup);
  void persist_step(const StepPlan& plan, const StepMetrics& metrics, int64_t step);
  void write_state(const std::filesystem::path& dir, int64_t step) const;
  int64_t find_last_completed_step() const;
  void load_state(int64_t step);
  std::string config_digest() const;

  // Phase helpers (mode-dispatched).
  std::vector<ConstructedTask> construct_tasks(const Document& doc, int64_t step,
                                               std::vector<toy::ToyDecision>* decisions);
  void solve_and_review(const Document& doc, int64_t step, bool warmup,
                        std::vector<ConstructedTask>& tasks, StepPlan& plan,
                        std::vector<TaskEval>& evals);

  EngineConfig cfg_;
  RunMode mode_;
  std::filesystem::path run_dir_;
  std::shared_ptr<backend::Backend> primary_;
  std::shared_ptr<backend::Backend> oracle_;

  toy::ToyParams params_;      // toy mode only
  toy::ToyParams ref_params_;  // step-0 snapshot, reference for the KL hooks
};

// One raw-text document per line (plain files) or per file (directories).
// Lines that parse as JSON objects with question/answer style fields are
// ingested by template concatenation of the two fields.
std::vector<Document> load_corpus(const std::filesystem::path& path);

// Bundles every step's batch records into one archive, grouped by training
// signal family, and verifies counts against the accounting formula.
// Refuses (naming the byte offset) when a persisted record is malformed.
void export_batches(const std::filesystem::path& run_dir, const std::filesystem::path& out_file,
                    int format_version = 1);

struct StatsWindow {
  int64_t first_step = 0;
  int64_t last_step = 0;
  double constructor_reward_mean = 0.0;
  double solver_acc_mean = 0.0;
  std::optional<double> fcp_loss;
  std::optional<double> entropy_estimate;
  double valid_task_fraction = 0.0;
  int64_t steps = 0;
};

struct StatsTable {
  std::vector<StatsWindow> windows;
};

// Per-window means over the persisted metrics stream. Throws "no data" when
// the run has no metrics.
StatsTable stats(const std::filesystem::path& run_dir, int window_size);
std::string stats_to_text(const StatsTable& table);
nlohmann::json stats_to_json(const StatsTable& table);

// All step metrics of a run, in step order.
std::vector<StepMetrics> read_metrics(const std::filesystem::path& run_dir);

// Step directory naming (step_000001, ...).
std::string step_dir_name(int64_t step);

}  // namespace alive::engine
