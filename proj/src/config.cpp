#include "alive/config.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace alive {

namespace {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Shortest exact decimal form (round-trips through strtod).
std::string num(double v) { return nlohmann::json(v).dump(); }

std::vector<std::pair<std::string, std::string>> parse_kv(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
    out.emplace_back(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
  }
  return out;
}

double parse_double(const std::string& key, const std::string& value) {
  const char* begin = value.c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0')
    throw ConfigError("config key " + key + ": not a number: " + value);
  return v;
}

int64_t parse_int(const std::string& key, const std::string& value) {
  const char* begin = value.c_str();
  char* end = nullptr;
  long long v = std::strtoll(begin, &end, 10);
  if (end == begin || *end != '\0')
    throw ConfigError("config key " + key + ": not an integer: " + value);
  return v;
}

uint64_t parse_uint(const std::string& key, const std::string& value) {
  const char* begin = value.c_str();
  char* end = nullptr;
  unsigned long long v = std::strtoull(begin, &end, 10);
  if (end == begin || *end != '\0')
    throw ConfigError("config key " + key + ": not an unsigned integer: " + value);
  return v;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw ConfigError("config key " + key + ": not a boolean: " + value);
}

using Setter = std::function<void(EngineConfig&, const std::string&, const std::string&)>;

const std::map<std::string, Setter>& engine_setters() {
  static const std::map<std::string, Setter> table = [] {
    std::map<std::string, Setter> t;
    auto d = [](double EngineConfig::*) {};
    (void)d;
    auto add = [&t](std::initializer_list<const char*> names, Setter s) {
      for (const char* n : names) t[n] = s;
    };
    add({"M"}, [](EngineConfig& c, auto& k, auto& v) { c.loop.M = (int)parse_int(k, v); });
    add({"N"}, [](EngineConfig& c, auto& k, auto& v) { c.loop.N = (int)parse_int(k, v); });
    add({"temperature"},
        [](EngineConfig& c, auto& k, auto& v) { c.loop.temperature = parse_double(k, v); });
    add({"eps_clip_low", "clip.eps_low"},
        [](EngineConfig& c, auto& k, auto& v) { c.loop.eps_clip_low = parse_double(k, v); });
    add({"eps_clip_high", "clip.eps_high"},
        [](EngineConfig& c, auto& k, auto& v) { c.loop.eps_clip_high = parse_double(k, v); });
    add({"alpha_kl", "kl.alpha"},
        [](EngineConfig& c, auto& k, auto& v) { c.loop.alpha_kl = parse_double(k, v); });
    add({"beta_kl", "kl.beta"},
        [](EngineConfig& c, auto& k, auto& v) { c.loop.beta_kl = parse_double(k, v); });
    add({"lambda1_long", "lambda1.long"},
        [](EngineConfig& c, auto& k, auto& v) { c.loop.lambda1_long = parse_double(k, v); });
    add({"lambda1_short", "lambda1.short"},
        [](EngineConfig& c, auto& k, auto& v) { c.loop.lambda1_short = parse_double(k, v); });
    add({"lambda1_threshold_tokens", "lambda1.threshold_tokens"},
        [](EngineConfig& c, auto& k, auto& v) {
          c.loop.lambda1_threshold_tokens = (int)parse_int(k, v);
        });
    add({"lambda2"}, [](EngineConfig& c, auto& k, auto& v) { c.loop.lambda2 = parse_double(k, v); });
    add({"warmup_steps"},
        [](EngineConfig& c, auto& k, auto& v) { c.loop.warmup_steps = parse_int(k, v); });
    add({"total_steps"},
        [](EngineConfig& c, auto& k, auto& v) { c.loop.total_steps = parse_int(k, v); });
    add({"gate_epsilon"},
        [](EngineConfig& c, auto& k, auto& v) { c.loop.gate_epsilon = parse_double(k, v); });
    add({"seed"}, [](EngineConfig& c, auto& k, auto& v) { c.loop.seed = parse_uint(k, v); });
    add({"sigma_floor"},
        [](EngineConfig& c, auto& k, auto& v) { c.sigma_floor = parse_double(k, v); });
    add({"match.trim_outer"},
        [](EngineConfig& c, auto& k, auto& v) { c.match.trim_outer = parse_bool(k, v); });
    add({"match.collapse_inner_whitespace"}, [](EngineConfig& c, auto& k, auto& v) {
      c.match.collapse_inner_whitespace = parse_bool(k, v);
    });
    add({"match.case_sensitive"},
        [](EngineConfig& c, auto& k, auto& v) { c.match.case_sensitive = parse_bool(k, v); });
    add({"toy.vocab_size"},
        [](EngineConfig& c, auto& k, auto& v) { c.toy.vocab_size = (int)parse_int(k, v); });
    add({"toy.chain_length"},
        [](EngineConfig& c, auto& k, auto& v) { c.toy.chain_length = (int)parse_int(k, v); });
    add({"toy.modulus"},
        [](EngineConfig& c, auto& k, auto& v) { c.toy.modulus = (int)parse_int(k, v); });
    add({"toy.seed"}, [](EngineConfig& c, auto& k, auto& v) { c.toy.seed = parse_uint(k, v); });
    add({"toy.lr_constructor"},
        [](EngineConfig& c, auto& k, auto& v) { c.toy_learn.lr_constructor = parse_double(k, v); });
    add({"toy.lr_solver"},
        [](EngineConfig& c, auto& k, auto& v) { c.toy_learn.lr_solver = parse_double(k, v); });
    add({"toy.lr_fcp"},
        [](EngineConfig& c, auto& k, auto& v) { c.toy_learn.lr_fcp = parse_double(k, v); });
    add({"toy.lr_distill"},
        [](EngineConfig& c, auto& k, auto& v) { c.toy_learn.lr_distill = parse_double(k, v); });
    add({"review.samples"},
        [](EngineConfig& c, auto& k, auto& v) { c.review_samples = (int)parse_int(k, v); });
    add({"fcp.negative_weight"},
        [](EngineConfig& c, auto& k, auto& v) { c.fcp_negative_weight = parse_double(k, v); });
    add({"gate.enabled"},
        [](EngineConfig& c, auto& k, auto& v) { c.gate_enabled = parse_bool(k, v); });
    add({"templates_dir"},
        [](EngineConfig& c, auto&, auto& v) { c.templates_dir = v; });
    return t;
  }();
  return table;
}

}  // namespace

EngineConfig parse_engine_config_text(const std::string& text) {
  EngineConfig cfg;
  const auto& setters = engine_setters();
  for (auto& [key, value] : parse_kv(text)) {
    auto it = setters.find(key);
    if (it == setters.end()) throw ConfigError("unknown config key: " + key);
    it->second(cfg, key, value);
  }
  return cfg;
}

EngineConfig load_engine_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::in | std::ios::binary);
  if (!in) throw ConfigError("cannot open config file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_engine_config_text(buf.str());
}

std::string engine_config_to_text(const EngineConfig& c) {
  std::ostringstream out;
  out << "# self-play loop\n";
  out << "M = " << c.loop.M << "\n";
  out << "N = " << c.loop.N << "\n";
  out << "temperature = " << num(c.loop.temperature) << "\n";
  out << "eps_clip_low = " << num(c.loop.eps_clip_low) << "\n";
  out << "eps_clip_high = " << num(c.loop.eps_clip_high) << "\n";
  out << "alpha_kl = " << num(c.loop.alpha_kl) << "\n";
  out << "beta_kl = " << num(c.loop.beta_kl) << "\n";
  out << "lambda1_long = " << num(c.loop.lambda1_long) << "\n";
  out << "lambda1_short = " << num(c.loop.lambda1_short) << "\n";
  out << "lambda1_threshold_tokens = " << c.loop.lambda1_threshold_tokens << "\n";
  out << "lambda2 = " << num(c.loop.lambda2) << "\n";
  out << "warmup_steps = " << c.loop.warmup_steps << "\n";
  out << "total_steps = " << c.loop.total_steps << "\n";
  out << "gate_epsilon = " << num(c.loop.gate_epsilon) << "\n";
  out << "seed = " << c.loop.seed << "\n";
  out << "sigma_floor = " << num(c.sigma_floor) << "\n";
  out << "# answer matching\n";
  out << "match.trim_outer = " << (c.match.trim_outer ? "true" : "false") << "\n";
  out << "match.collapse_inner_whitespace = "
      << (c.match.collapse_inner_whitespace ? "true" : "false") << "\n";
  out << "match.case_sensitive = " << (c.match.case_sensitive ? "true" : "false") << "\n";
  out << "# toy corpus and learning rates\n";
  out << "toy.vocab_size = " << c.toy.vocab_size << "\n";
  out << "toy.chain_length = " << c.toy.chain_length << "\n";
  out << "toy.modulus = " << c.toy.modulus << "\n";
  out << "toy.seed = " << c.toy.seed << "\n";
  out << "toy.lr_constructor = " << num(c.toy_learn.lr_constructor) << "\n";
  out << "toy.lr_solver = " << num(c.toy_learn.lr_solver) << "\n";
  out << "toy.lr_fcp = " << num(c.toy_learn.lr_fcp) << "\n";
  out << "toy.lr_distill = " << num(c.toy_learn.lr_distill) << "\n";
  out << "# review and feedback knobs\n";
  out << "review.samples = " << c.review_samples << "\n";
  out << "fcp.negative_weight = " << num(c.fcp_negative_weight) << "\n";
  out << "gate.enabled = " << (c.gate_enabled ? "true" : "false") << "\n";
  if (c.templates_dir) out << "templates_dir = " << *c.templates_dir << "\n";
  return out.str();
}

void save_engine_config(const EngineConfig& cfg, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::out | std::ios::binary);
  if (!out) throw ConfigError("cannot write config file: " + path.string());
  out << engine_config_to_text(cfg);
}

BackendConfig load_backend_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::in | std::ios::binary);
  if (!in) throw ConfigError("cannot open backend config file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();

  BackendConfig cfg;
  for (auto& [key, value] : parse_kv(buf.str())) {
    if (key == "base_url") cfg.base_url = value;
    else if (key == "model_name") cfg.model_name = value;
    else if (key == "api_key_env_var") cfg.api_key_env_var = value;
    else if (key == "max_in_flight") cfg.max_in_flight = (int)parse_int(key, value);
    else if (key == "timeout_seconds") cfg.timeout_seconds = parse_double(key, value);
    else if (key == "retry_max") cfg.retry_max = (int)parse_int(key, value);
    else if (key == "retry_backoff_base_seconds")
      cfg.retry_backoff_base_seconds = parse_double(key, value);
    else if (key == "max_tokens.constructor")
      cfg.max_tokens_constructor = (int)parse_int(key, value);
    else if (key == "max_tokens.solver") cfg.max_tokens_solver = (int)parse_int(key, value);
    else if (key == "max_tokens.reviewer") cfg.max_tokens_reviewer = (int)parse_int(key, value);
    else if (key == "request_logprobs") cfg.request_logprobs = parse_bool(key, value);
    else if (key == "native_n") cfg.native_n = parse_bool(key, value);
    else throw ConfigError("unknown backend config key: " + key);
  }
  return cfg;
}

}  // namespace alive
