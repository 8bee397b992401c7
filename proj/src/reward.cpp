#include "alive/reward.hpp"

#include <cctype>
#include <stdexcept>

namespace alive::reward {

namespace {
bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
}  // namespace

std::string normalize_answer(std::string_view text, const MatchPolicy& policy) {
  size_t begin = 0;
  size_t end = text.size();
  if (policy.trim_outer) {
    while (begin < end && is_space(text[begin])) ++begin;
    while (end > begin && is_space(text[end - 1])) --end;
  }
  std::string out;
  out.reserve(end - begin);
  bool in_run = false;
  for (size_t i = begin; i < end; ++i) {
    char c = text[i];
    if (policy.collapse_inner_whitespace && is_space(c)) {
      if (!in_run) out.push_back(' ');
      in_run = true;
      continue;
    }
    in_run = false;
    if (!policy.case_sensitive) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    out.push_back(c);
  }
  return out;
}

bool exact_match(std::string_view answer, std::string_view y_star, const MatchPolicy& policy) {
  return normalize_answer(answer, policy) == normalize_answer(y_star, policy);
}

double group_accuracy(std::span<const std::string> answers, std::string_view y_star,
                      const MatchPolicy& policy) {
  if (answers.empty()) throw std::invalid_argument("empty group");
  int hits = 0;
  for (const auto& a : answers)
    if (exact_match(a, y_star, policy)) ++hits;
  return static_cast<double>(hits) / static_cast<double>(answers.size());
}

double constructor_reward(double acc, double gate_epsilon) {
  return acc > gate_epsilon ? 1.0 - acc : 0.0;
}

double lambda1(int y_star_token_length, const LoopConfig& cfg) {
  return y_star_token_length >= cfg.lambda1_threshold_tokens ? cfg.lambda1_long
                                                             : cfg.lambda1_short;
}

double solver_reward(int hard, double soft, double lambda1_value) {
  return static_cast<double>(hard) + lambda1_value * soft;
}

int token_length(std::string_view y_star) {
  int count = 0;
  bool in_token = false;
  for (char c : y_star) {
    if (is_space(c)) {
      in_token = false;
    } else if (!in_token) {
      in_token = true;
      ++count;
    }
  }
  return count;
}

}  // namespace alive::reward
