#include "alive/types.hpp"

#include <cmath>

namespace alive {

namespace {

bool finite(double v) { return std::isfinite(v); }

void put_schema(nlohmann::json& j, const char* kind) {
  j["kind"] = kind;
  j["schema_version"] = kSchemaVersion;
}

}  // namespace

const char* to_string(ReviewerKind k) {
  return k == ReviewerKind::self_review ? "self" : "teacher";
}

const char* to_string(RewardKind k) {
  switch (k) {
    case RewardKind::constructor: return "constructor";
    case RewardKind::solver_hard: return "solver_hard";
    case RewardKind::solver_soft: return "solver_soft";
    case RewardKind::solver_total: return "solver_total";
  }
  return "constructor";
}

const char* to_string(BatchItemKind k) {
  switch (k) {
    case BatchItemKind::document: return "document";
    case BatchItemKind::constructor_task: return "constructor_task";
    case BatchItemKind::fcp_sample: return "fcp_sample";
    case BatchItemKind::distill_sample: return "distill_sample";
  }
  return "document";
}

ReviewerKind reviewer_kind_from_string(const std::string& s) {
  if (s == "self") return ReviewerKind::self_review;
  if (s == "teacher") return ReviewerKind::teacher;
  throw std::invalid_argument("unknown reviewer_kind: " + s);
}

RewardKind reward_kind_from_string(const std::string& s) {
  if (s == "constructor") return RewardKind::constructor;
  if (s == "solver_hard") return RewardKind::solver_hard;
  if (s == "solver_soft") return RewardKind::solver_soft;
  if (s == "solver_total") return RewardKind::solver_total;
  throw std::invalid_argument("unknown reward kind: " + s);
}

BatchItemKind batch_item_kind_from_string(const std::string& s) {
  if (s == "document") return BatchItemKind::document;
  if (s == "constructor_task") return BatchItemKind::constructor_task;
  if (s == "fcp_sample") return BatchItemKind::fcp_sample;
  if (s == "distill_sample") return BatchItemKind::distill_sample;
  throw std::invalid_argument("unknown batch item kind: " + s);
}

int64_t count_batch_items(int M, int N, bool warmup) {
  int64_t per_task = static_cast<int64_t>(M) * N;
  return 1 + M + per_task + (warmup ? per_task : 0);
}

std::vector<std::string> validate_config(const LoopConfig& cfg) {
  std::vector<std::string> v;
  if (cfg.M < 1) v.push_back("M must be >= 1");
  if (cfg.N < 1) v.push_back("N must be >= 1");
  if (!(cfg.temperature >= 0.0)) v.push_back("temperature must be >= 0");
  if (!(cfg.eps_clip_low > 0.0)) v.push_back("eps_clip_low must be > 0");
  if (!(cfg.eps_clip_low <= cfg.eps_clip_high))
    v.push_back("eps_clip_low must be <= eps_clip_high");
  if (cfg.lambda1_threshold_tokens < 0) v.push_back("lambda1_threshold_tokens must be >= 0");
  if (cfg.warmup_steps > cfg.total_steps) v.push_back("warmup_steps must be <= total_steps");
  if (cfg.warmup_steps < 0) v.push_back("warmup_steps must be >= 0");
  if (cfg.total_steps < 0) v.push_back("total_steps must be >= 0");
  if (!(cfg.gate_epsilon >= 0.0 && cfg.gate_epsilon < 1.0))
    v.push_back("gate_epsilon must be in [0, 1)");
  if (!finite(cfg.lambda1_long) || !finite(cfg.lambda1_short))
    v.push_back("lambda1 values must be finite");
  if (!finite(cfg.lambda2)) v.push_back("lambda2 must be finite");
  if (!finite(cfg.alpha_kl) || !finite(cfg.beta_kl)) v.push_back("KL coefficients must be finite");
  return v;
}

std::vector<std::string> validate(const Document& d) {
  std::vector<std::string> v;
  if (d.id.empty()) v.push_back("id must be non-empty");
  if (d.text.empty()) v.push_back("text must be non-empty");
  return v;
}

std::vector<std::string> validate(const ConstructedTask& t) {
  std::vector<std::string> v;
  if (t.task_id.empty()) v.push_back("task_id must be non-empty");
  if (t.document_id.empty()) v.push_back("document_id must be non-empty");
  if (t.rollout_index < 0) v.push_back("rollout_index must be >= 0");
  if (t.valid && t.hidden_truth.empty()) v.push_back("hidden_truth must be non-empty when valid");
  return v;
}

std::vector<std::string> validate(const SolverRollout& r) {
  std::vector<std::string> v;
  if (r.rollout_id.empty()) v.push_back("rollout_id must be non-empty");
  if (r.task_id.empty()) v.push_back("task_id must be non-empty");
  if (r.sample_index < 0) v.push_back("sample_index must be >= 0");
  if (r.logprob_old && !finite(*r.logprob_old)) v.push_back("logprob_old must be finite");
  return v;
}

std::vector<std::string> validate(const Review& r) {
  std::vector<std::string> v;
  if (r.rollout_id.empty()) v.push_back("rollout_id must be non-empty");
  if (r.critique.empty()) v.push_back("critique must be non-empty");
  if (!(r.soft_score >= 0.0 && r.soft_score <= 1.0))
    v.push_back("soft_score must be in [0, 1]");
  return v;
}

std::vector<std::string> validate(const RewardRecord& r) {
  std::vector<std::string> v;
  if (r.subject.empty()) v.push_back("subject must be non-empty");
  if (!finite(r.value)) v.push_back("value must be finite");
  switch (r.kind) {
    case RewardKind::constructor:
      if (!(r.value >= 0.0 && r.value <= 1.0)) v.push_back("constructor value must be in [0, 1]");
      break;
    case RewardKind::solver_hard:
      if (!(r.value == 0.0 || r.value == 1.0)) v.push_back("solver_hard value must be 0 or 1");
      break;
    case RewardKind::solver_soft:
      if (!(r.value >= 0.0 && r.value <= 1.0)) v.push_back("solver_soft value must be in [0, 1]");
      break;
    case RewardKind::solver_total: {
      if (!r.lambda1_used) {
        v.push_back("lambda1_used required for solver_total");
      } else if (!(r.value >= 0.0 && r.value <= 1.0 + *r.lambda1_used)) {
        v.push_back("solver_total value must be in [0, 1 + lambda1_used]");
      }
      break;
    }
  }
  return v;
}

std::vector<std::string> validate(const TrainingBatchItem& b) {
  std::vector<std::string> v;
  if (b.step < 0) v.push_back("step must be >= 0");
  if (b.advantage && !finite(*b.advantage)) v.push_back("advantage must be finite");
  if (b.payload.is_null()) v.push_back("payload must be non-null");
  return v;
}

std::vector<std::string> validate(const StepMetrics& m) {
  std::vector<std::string> v;
  if (m.step < 0) v.push_back("step must be >= 0");
  if (!(m.valid_task_fraction >= 0.0 && m.valid_task_fraction <= 1.0))
    v.push_back("valid_task_fraction must be in [0, 1]");
  if (!finite(m.constructor_reward_mean)) v.push_back("constructor_reward_mean must be finite");
  if (!finite(m.solver_acc_mean)) v.push_back("solver_acc_mean must be finite");
  if (m.fcp_loss && !finite(*m.fcp_loss)) v.push_back("fcp_loss must be finite when present");
  if (m.entropy_estimate && !finite(*m.entropy_estimate))
    v.push_back("entropy_estimate must be finite when present");
  return v;
}

void to_json(nlohmann::json& j, const Document& d) {
  j = nlohmann::json{{"id", d.id}, {"text", d.text}, {"source", d.source}};
  if (d.seed) j["seed"] = *d.seed;
  put_schema(j, "document");
}

void from_json(const nlohmann::json& j, Document& d) {
  j.at("id").get_to(d.id);
  j.at("text").get_to(d.text);
  j.at("source").get_to(d.source);
  d.seed.reset();
  if (j.contains("seed")) d.seed = j.at("seed").get<int64_t>();
}

void to_json(nlohmann::json& j, const ConstructedTask& t) {
  j = nlohmann::json{{"task_id", t.task_id},   {"document_id", t.document_id},
                     {"query", t.query},       {"hidden_truth", t.hidden_truth},
                     {"thought", t.thought},   {"rollout_index", t.rollout_index},
                     {"valid", t.valid}};
  put_schema(j, "constructed_task");
}

void from_json(const nlohmann::json& j, ConstructedTask& t) {
  j.at("task_id").get_to(t.task_id);
  j.at("document_id").get_to(t.document_id);
  j.at("query").get_to(t.query);
  j.at("hidden_truth").get_to(t.hidden_truth);
  j.at("thought").get_to(t.thought);
  j.at("rollout_index").get_to(t.rollout_index);
  j.at("valid").get_to(t.valid);
}

void to_json(nlohmann::json& j, const SolverRollout& r) {
  j = nlohmann::json{{"rollout_id", r.rollout_id},
                     {"task_id", r.task_id},
                     {"reasoning", r.reasoning},
                     {"answer", r.answer},
                     {"sample_index", r.sample_index}};
  if (r.logprob_old) j["logprob_old"] = *r.logprob_old;
  put_schema(j, "solver_rollout");
}

void from_json(const nlohmann::json& j, SolverRollout& r) {
  j.at("rollout_id").get_to(r.rollout_id);
  j.at("task_id").get_to(r.task_id);
  j.at("reasoning").get_to(r.reasoning);
  j.at("answer").get_to(r.answer);
  j.at("sample_index").get_to(r.sample_index);
  r.logprob_old.reset();
  if (j.contains("logprob_old")) r.logprob_old = j.at("logprob_old").get<double>();
}

void to_json(nlohmann::json& j, const Review& r) {
  j = nlohmann::json{{"rollout_id", r.rollout_id},
                     {"analysis", r.analysis},
                     {"critique", r.critique},
                     {"soft_score", r.soft_score},
                     {"reviewer_kind", to_string(r.reviewer_kind)}};
  put_schema(j, "review");
}

void from_json(const nlohmann::json& j, Review& r) {
  j.at("rollout_id").get_to(r.rollout_id);
  j.at("analysis").get_to(r.analysis);
  j.at("critique").get_to(r.critique);
  j.at("soft_score").get_to(r.soft_score);
  r.reviewer_kind = reviewer_kind_from_string(j.at("reviewer_kind").get<std::string>());
}

void to_json(nlohmann::json& j, const RewardRecord& r) {
  j = nlohmann::json{{"subject", r.subject}, {"value", r.value}};
  if (r.lambda1_used) j["lambda1_used"] = *r.lambda1_used;
  j["kind"] = to_string(r.kind);
  j["schema_version"] = kSchemaVersion;
}

void from_json(const nlohmann::json& j, RewardRecord& r) {
  j.at("subject").get_to(r.subject);
  j.at("value").get_to(r.value);
  r.kind = reward_kind_from_string(j.at("kind").get<std::string>());
  r.lambda1_used.reset();
  if (j.contains("lambda1_used")) r.lambda1_used = j.at("lambda1_used").get<double>();
}

void to_json(nlohmann::json& j, const TrainingBatchItem& b) {
  j = nlohmann::json{{"payload", b.payload}, {"step", b.step}};
  if (b.advantage) j["advantage"] = *b.advantage;
  j["kind"] = to_string(b.kind);
  j["schema_version"] = kSchemaVersion;
}

void from_json(const nlohmann::json& j, TrainingBatchItem& b) {
  b.payload = j.at("payload");
  j.at("step").get_to(b.step);
  b.kind = batch_item_kind_from_string(j.at("kind").get<std::string>());
  b.advantage.reset();
  if (j.contains("advantage")) b.advantage = j.at("advantage").get<double>();
}

void to_json(nlohmann::json& j, const StepMetrics& m) {
  j = nlohmann::json{{"step", m.step},
                     {"constructor_reward_mean", m.constructor_reward_mean},
                     {"solver_acc_mean", m.solver_acc_mean},
                     {"valid_task_fraction", m.valid_task_fraction}};
  if (m.fcp_loss) j["fcp_loss"] = *m.fcp_loss;
  if (m.entropy_estimate) j["entropy_estimate"] = *m.entropy_estimate;
  put_schema(j, "step_metrics");
}

void from_json(const nlohmann::json& j, StepMetrics& m) {
  j.at("step").get_to(m.step);
  j.at("constructor_reward_mean").get_to(m.constructor_reward_mean);
  j.at("solver_acc_mean").get_to(m.solver_acc_mean);
  j.at("valid_task_fraction").get_to(m.valid_task_fraction);
  m.fcp_loss.reset();
  m.entropy_estimate.reset();
  if (j.contains("fcp_loss")) m.fcp_loss = j.at("fcp_loss").get<double>();
  if (j.contains("entropy_estimate")) m.entropy_estimate = j.at("entropy_estimate").get<double>();
}

}  // namespace alive
