#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace alive::prompt {

enum class Role { constructor, solver, reviewer };

const char* to_string(Role r);

struct PromptTemplate {
  Role role;
  std::string body;  // text with {{NAME}} placeholders
};

// Tag names each role must emit, in template order. Matching is exact and
// case-sensitive (note the underscore in Hidden_Truth).
struct TagSpec {
  Role role;
  std::vector<std::string> required_tags;
};

const TagSpec& tag_spec(Role role);

// Placeholder names a role's template must declare.
const std::vector<std::string>& placeholders_for(Role role);

struct RenderError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Compiled-in copies of the shipped template files.
const PromptTemplate& default_template(Role role);

// Loads <dir>/{constructor,solver,reviewer}.txt. Throws when missing.
PromptTemplate load_template(Role role, const std::filesystem::path& dir);

// Writes the default templates as editable files.
void write_default_templates(const std::filesystem::path& dir);

// Single-pass placeholder substitution. Every placeholder in the template
// must have a binding, every placeholder must be one the role declares, and
// no placeholder survives in the output. Inserted text is never rescanned.
std::string render(const PromptTemplate& tmpl, const std::map<std::string, std::string>& bindings);

// Content strictly between the first <tag> and the first subsequent </tag>,
// trimmed of outer whitespace. Absent when either delimiter is missing.
// When a tag appears multiple times the first complete pair wins.
std::optional<std::string> extract_section(std::string_view text, std::string_view tag);

struct ConstructorParse {
  std::string thought;
  std::string query;
  std::string hidden_truth;
  // False when the hidden truth appears verbatim inside the query: the mask
  // did not actually remove it, so the task is treated as gate-failed rather
  // than rejected outright.
  bool valid = false;
};

struct SolverParse {
  std::string reasoning;
  std::string answer;
};

struct ReviewerParse {
  std::string analysis;
  std::string critique;
  double soft_score = 0.0;
  bool clamped = false;  // score was pulled back into [0, 1]
};

template <typename T>
struct ParseResult {
  std::optional<T> value;
  std::string error;  // names the missing/offending tag when !value
  explicit operator bool() const { return value.has_value(); }
  const T& operator*() const { return *value; }
  const T* operator->() const { return &*value; }
};

ParseResult<ConstructorParse> parse_constructor(std::string_view text);
ParseResult<SolverParse> parse_solver(std::string_view text);

// Scores in (1, 2] and [-1, 0) are clamped into [0, 1] with the clamp flag
// set; values beyond that band, or non-numeric ones, fail the parse.
ParseResult<ReviewerParse> parse_reviewer(std::string_view text);

// Canonical tag layout used when serializing role outputs (and by the toy
// policy when it materializes completions). format_* followed by the matching
// parse_* recovers the fields exactly for values free of tag delimiters.
std::string format_constructor_output(std::string_view thought, std::string_view task,
                                      std::string_view hidden_truth);
std::string format_solver_output(std::string_view reasoning, std::string_view answer);
std::string format_reviewer_output(std::string_view analysis, std::string_view critique,
                                   double score);

}  // namespace alive::prompt
