#pragma once

#include <span>
#include <string>
#include <string_view>

#include "alive/config.hpp"

namespace alive::reward {

// Answer normalization: outer trim, inner whitespace runs collapsed to one
// space, optional case folding. Defaults keep symbolic answers case-sensitive.
std::string normalize_answer(std::string_view text, const MatchPolicy& policy);

// True iff the normalized forms are identical strings.
bool exact_match(std::string_view answer, std::string_view y_star, const MatchPolicy& policy);

// Fraction of answers that exact-match the hidden truth. Throws on an empty
// group ("empty group").
double group_accuracy(std::span<const std::string> answers, std::string_view y_star,
                      const MatchPolicy& policy);

// Validity-gated difficulty reward: 1(acc > gate_epsilon) * (1 - acc).
// The KL penalty on the constructor objective is applied by the optimizer,
// not folded into this reward.
double constructor_reward(double acc, double gate_epsilon);

// Soft-reward coefficient from the hidden truth's token length:
// above the threshold the long value applies, below it the short one.
// Exactly at the threshold the long value applies.
double lambda1(int y_star_token_length, const LoopConfig& cfg);

// Hybrid solver reward: hard + lambda1 * soft.
double solver_reward(int hard, double soft, double lambda1_value);

// Whitespace-token count after outer trim (tokenizer-free length surrogate).
int token_length(std::string_view y_star);

}  // namespace alive::reward
