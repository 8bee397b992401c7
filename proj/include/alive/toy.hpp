#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "alive/config.hpp"
#include "alive/rng.hpp"
#include "alive/types.hpp"

namespace alive::toy {

struct ToyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Token alphabet: values >= 0 are residues, negatives are structure tokens.
inline constexpr int kTokPlus = -1;
inline constexpr int kTokMinus = -2;
inline constexpr int kTokEquals = -3;
inline constexpr int kTokSep = -4;
inline constexpr int kTokMask = -5;

// A chained sequence of modular equations  a op b = c ; ...  where each
// equation's left operand repeats the previous result. Every operand/result
// position is maskable: the removed residue is the unique value consistent
// with the rest of the document.
struct ToyDocument {
  std::vector<int> tokens;
  std::vector<int> maskable_positions;
};

struct Equation {
  int a, b, c;
  int op;  // 0: addition, 1: subtraction (mod m)
};

std::vector<ToyDocument> gen_corpus(const ToyCorpusSpec& spec, int count);

std::string render_document(const ToyDocument& doc);

// Inverse of render_document; also accepts a single masked gap token "_".
ToyDocument parse_document(std::string_view text);

int equation_count(const ToyDocument& doc);
Equation equation_at(const ToyDocument& doc, int k);

enum class HeadKind { constructor_head, solver_head, fcp_head };

// One categorical choice: candidate k's logit lives at param_index[k] of the
// head's table. Tied candidates (constructor positions sharing a feature)
// simply repeat an index.
struct ToyDecision {
  HeadKind head = HeadKind::solver_head;
  std::vector<int> param_index;
  int chosen = 0;
  double logprob_old = 0.0;
};

enum class CritiqueCategory { exact = 0, near_miss = 1, far_miss = 2 };

const char* to_string(CritiqueCategory c);
CritiqueCategory critique_category_from_string(const std::string& s);

// Fixed critique wording per category; the category is the conditioning
// channel the feedback-conditional head learns from.
const char* critique_text(CritiqueCategory c);

// Tabular softmax policy shared by the three roles.
//   constructor: score per position feature (op x masked slot)
//   solver:      score per (context, candidate residue)
//   fcp:         score per (context, critique category, candidate residue)
// The solver context (op, masked slot, visible pair) determines the hidden
// value uniquely, so accuracy 1.0 is attainable.
struct ToyParams {
  int modulus = 10;
  int vocab = 10;
  std::vector<double> constructor_logits;
  std::vector<double> solver_logits;
  std::vector<double> fcp_logits;

  static ToyParams zeros(const ToyCorpusSpec& spec);

  int n_position_features() const { return 6; }
  int n_contexts() const { return 6 * modulus * modulus; }
  int context_index(int op, int slot, int left, int right) const {
    return ((op * 3 + slot) * modulus + left) * modulus + right;
  }
  int solver_index(int ctx, int cand) const { return ctx * vocab + cand; }
  int fcp_index(int ctx, int category, int cand) const {
    return (ctx * 3 + category) * vocab + cand;
  }

  bool all_finite() const;
};

nlohmann::json params_to_json(const ToyParams& p);
ToyParams params_from_json(const nlohmann::json& j);

// Feature of a maskable position: which slot of which operator it fills.
int position_feature(const ToyDocument& doc, int position);

// Local view of a masked position: the equation's operator, the masked slot,
// and the two visible residues in reading order.
struct MaskContext {
  int equation_index = 0;
  int slot = 0;  // 0: a, 1: b, 2: c
  int op = 0;
  int left = 0;
  int right = 0;
};

MaskContext mask_context(const ToyDocument& doc, int position);

struct ParsedQuery {
  ToyDocument doc;  // mask position holds kTokMask
  int mask_position = -1;
};

// Recovers structure from a rendered query containing one "_" gap.
ParsedQuery parse_masked_query(std::string_view query);

struct ConstructResult {
  std::vector<ConstructedTask> tasks;   // ids left empty; caller assigns
  std::vector<ToyDecision> decisions;   // one per task
  std::vector<int> positions;           // masked token index per task
};

// Samples M mask positions (categorical over maskable positions scored by
// the position-feature table) and materializes the query / hidden truth /
// rationale for each. Sampling log-probs are recorded as logprob_old.
ConstructResult toy_construct(const ToyParams& params, const ToyDocument& doc, int M,
                              RandomStream& rng);

struct SolveResult {
  std::vector<SolverRollout> rollouts;  // ids left empty; caller assigns
  std::vector<ToyDecision> decisions;
  MaskContext context;
  int ctx_index = 0;
};

// Parses the query's gap, then samples N candidate residues from the solver
// head conditioned on the mask context.
SolveResult toy_solve(const ToyParams& params, const ConstructedTask& task, int N,
                      RandomStream& rng);

struct ToyReviewOutcome {
  Review review;  // rollout_id left empty; caller assigns
  CritiqueCategory category = CritiqueCategory::far_miss;
};

// Deterministic reviewer: v = 1 - d_circ(answer, truth) / floor(V/2) with
// circular distance modulo V. Distance 0 is exact, 1-2 near_miss, else
// far_miss. An unparseable answer scores 0 (far_miss).
ToyReviewOutcome toy_review(const ConstructedTask& task, const SolverRollout& rollout, int vocab);

// log softmax at the chosen candidate, under the current table.
double logprob(const ToyParams& params, const ToyDecision& decision);

// Sparse d logprob / d logits: (one-hot - softmax) accumulated per backing
// parameter index.
std::vector<std::pair<int, double>> grad_logprob(const ToyParams& params,
                                                 const ToyDecision& decision);

struct GrpoItem {
  ToyDecision decision;
  double advantage = 0.0;
};

// Mean over the group of min(rho*A, clip(rho, 1-eps_low, 1+eps_high)*A)
// with rho = exp(logprob_now - logprob_old).
double grpo_objective_value(const ToyParams& params, std::span<const GrpoItem> group,
                            double eps_low, double eps_high);

// One plain gradient-ascent step on the clipped surrogate. Entries not backing
// any decision are untouched. Throws (leaving params unchanged) on a
// non-finite gradient.
void apply_grpo_update(ToyParams& params, std::span<const GrpoItem> group, double eps_low,
                       double eps_high, double learning_rate);

struct FcpSample {
  int ctx_index = 0;
  CritiqueCategory category = CritiqueCategory::far_miss;
  int answer = 0;
  double weight = 1.0;
};

ToyDecision fcp_decision(const ToyParams& params, const FcpSample& s);
double fcp_nll(const ToyParams& params, std::span<const FcpSample> samples);

// One NLL descent step on the feedback-conditional head; returns the NLL
// after the update.
double apply_fcp_update(ToyParams& params, std::span<const FcpSample> samples,
                        double learning_rate);

// Teacher-critique alignment: the category head is read off the fcp table by
// scoring the three categories at the fixed (context, answer) column.
struct DistillSample {
  int ctx_index = 0;
  int answer = 0;
  CritiqueCategory teacher_category = CritiqueCategory::far_miss;
};

ToyDecision distill_decision(const ToyParams& params, const DistillSample& s);
double distill_nll(const ToyParams& params, std::span<const DistillSample> samples);
double apply_distill_update(ToyParams& params, std::span<const DistillSample> samples,
                            double learning_rate);

// Mean Shannon entropy (nats) of the solver's conditionals over the contexts.
double entropy_estimate(const ToyParams& params, std::span<const int> ctx_indices);

// softmax of a logit row (sums to 1 within 1e-12 for finite inputs).
std::vector<double> softmax(std::span<const double> logits);

// KL(softmax(p) || softmax(q)) plus its gradient with respect to p.
double categorical_kl(std::span<const double> logits_p, std::span<const double> logits_q,
                      std::vector<double>* grad_p = nullptr);

std::string render_answer(int value);
bool parse_answer(std::string_view text, int vocab, int* value);

}  // namespace alive::toy
