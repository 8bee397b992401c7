#include "alive/prompt.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace alive::prompt {

namespace {

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

const char* template_filename(Role role) {
  switch (role) {
    case Role::constructor: return "constructor.txt";
    case Role::solver: return "solver.txt";
    case Role::reviewer: return "reviewer.txt";
  }
  return "solver.txt";
}

}  // namespace

const char* to_string(Role r) {
  switch (r) {
    case Role::constructor: return "constructor";
    case Role::solver: return "solver";
    case Role::reviewer: return "reviewer";
  }
  return "solver";
}

const TagSpec& tag_spec(Role role) {
  static const TagSpec constructor_spec{Role::constructor, {"Thought", "Task", "Hidden_Truth"}};
  static const TagSpec solver_spec{Role::solver, {"Reasoning", "Answer"}};
  static const TagSpec reviewer_spec{Role::reviewer, {"Analysis", "Critique", "Score"}};
  switch (role) {
    case Role::constructor: return constructor_spec;
    case Role::solver: return solver_spec;
    case Role::reviewer: return reviewer_spec;
  }
  return solver_spec;
}

const std::vector<std::string>& placeholders_for(Role role) {
  static const std::vector<std::string> constructor_ph{"RAW_DOCUMENT"};
  static const std::vector<std::string> solver_ph{"CONSTRUCTED_TASK"};
  static const std::vector<std::string> reviewer_ph{"CONSTRUCTED_TASK", "SOLVER_OUTPUT",
                                                    "HIDDEN_TRUTH"};
  switch (role) {
    case Role::constructor: return constructor_ph;
    case Role::solver: return solver_ph;
    case Role::reviewer: return reviewer_ph;
  }
  return solver_ph;
}

PromptTemplate load_template(Role role, const std::filesystem::path& dir) {
  const auto path = dir / template_filename(role);
  std::ifstream in(path, std::ios::in | std::ios::binary);
  if (!in) throw RenderError("template file not found: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return PromptTemplate{role, buf.str()};
}

void write_default_templates(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (Role role : {Role::constructor, Role::solver, Role::reviewer}) {
    std::ofstream out(dir / template_filename(role), std::ios::out | std::ios::binary);
    if (!out) throw RenderError("cannot write template file in " + dir.string());
    out << default_template(role).body;
  }
}

std::string render(const PromptTemplate& tmpl, const std::map<std::string, std::string>& bindings) {
  const auto& declared = placeholders_for(tmpl.role);
  std::string out;
  out.reserve(tmpl.body.size());
  size_t pos = 0;
  while (pos < tmpl.body.size()) {
    size_t open = tmpl.body.find("{{", pos);
    if (open == std::string::npos) {
      out.append(tmpl.body, pos, std::string::npos);
      break;
    }
    out.append(tmpl.body, pos, open - pos);
    size_t close = tmpl.body.find("}}", open + 2);
    if (close == std::string::npos)
      throw RenderError("unterminated placeholder in " + std::string(to_string(tmpl.role)) +
                        " template");
    std::string name = tmpl.body.substr(open + 2, close - open - 2);
    bool known = false;
    for (const auto& d : declared) known = known || d == name;
    if (!known)
      throw RenderError("unknown placeholder in template: " + name);
    auto it = bindings.find(name);
    if (it == bindings.end()) throw RenderError(name + " missing");
    out.append(it->second);  // inserted text is not rescanned
    pos = close + 2;
  }
  return out;
}

std::optional<std::string> extract_section(std::string_view text, std::string_view tag) {
  std::string open = "<" + std::string(tag) + ">";
  std::string close = "</" + std::string(tag) + ">";
  size_t begin = text.find(open);
  if (begin == std::string_view::npos) return std::nullopt;
  begin += open.size();
  size_t end = text.find(close, begin);
  if (end == std::string_view::npos) return std::nullopt;
  return trim(text.substr(begin, end - begin));
}

ParseResult<ConstructorParse> parse_constructor(std::string_view text) {
  auto thought = extract_section(text, "Thought");
  if (!thought) return {std::nullopt, "Thought"};
  auto task = extract_section(text, "Task");
  if (!task) return {std::nullopt, "Task"};
  auto truth = extract_section(text, "Hidden_Truth");
  if (!truth) return {std::nullopt, "Hidden_Truth"};
  if (task->empty()) return {std::nullopt, "Task: empty"};
  if (truth->empty()) return {std::nullopt, "Hidden_Truth: empty"};
  ConstructorParse p;
  p.thought = *thought;
  p.query = *task;
  p.hidden_truth = *truth;
  p.valid = task->find(*truth) == std::string::npos;
  return {p, ""};
}

ParseResult<SolverParse> parse_solver(std::string_view text) {
  auto reasoning = extract_section(text, "Reasoning");
  if (!reasoning) return {std::nullopt, "Reasoning"};
  auto answer = extract_section(text, "Answer");
  if (!answer) return {std::nullopt, "Answer"};
  return {SolverParse{*reasoning, *answer}, ""};
}

ParseResult<ReviewerParse> parse_reviewer(std::string_view text) {
  auto analysis = extract_section(text, "Analysis");
  if (!analysis) return {std::nullopt, "Analysis"};
  auto critique = extract_section(text, "Critique");
  if (!critique) return {std::nullopt, "Critique"};
  auto score = extract_section(text, "Score");
  if (!score) return {std::nullopt, "Score"};
  if (critique->empty()) return {std::nullopt, "Critique: empty"};

  const char* begin = score->c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  while (end && *end != '\0' && std::isspace(static_cast<unsigned char>(*end))) ++end;
  if (end == begin || (end && *end != '\0') || !std::isfinite(v))
    return {std::nullopt, "Score: non-numeric"};

  ReviewerParse p;
  p.analysis = *analysis;
  p.critique = *critique;
  p.clamped = false;
  // Mild overshoot is clamped back into range; anything further is garbage.
  if (v >= 0.0 && v <= 1.0) {
    p.soft_score = v;
  } else if (v > 1.0 && v <= 2.0) {
    p.soft_score = 1.0;
    p.clamped = true;
  } else if (v < 0.0 && v >= -1.0) {
    p.soft_score = 0.0;
    p.clamped = true;
  } else {
    return {std::nullopt, "Score: out of range"};
  }
  return {p, ""};
}

std::string format_constructor_output(std::string_view thought, std::string_view task,
                                      std::string_view hidden_truth) {
  std::string out;
  out += "<Thought>\n";
  out += thought;
  out += "\n</Thought>\n<Task>\n";
  out += task;
  out += "\n</Task>\n<Hidden_Truth>\n";
  out += hidden_truth;
  out += "\n</Hidden_Truth>";
  return out;
}

std::string format_solver_output(std::string_view reasoning, std::string_view answer) {
  std::string out;
  out += "<Reasoning>\n";
  out += reasoning;
  out += "\n</Reasoning>\n<Answer>\n";
  out += answer;
  out += "\n</Answer>";
  return out;
}

std::string format_reviewer_output(std::string_view analysis, std::string_view critique,
                                   double score) {
  std::ostringstream out;
  out << "<Analysis>\n" << analysis << "\n</Analysis>\n<Critique>\n" << critique
      << "\n</Critique>\n<Score>\n" << score << "\n</Score>";
  return out.str();
}

}  // namespace alive::prompt
