#include "cgflow/config.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace cgflow {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
}

struct CommandSpec {
  RunConfig::Command command;
  std::set<std::string> required;
  std::set<std::string> optional;
};

const CommandSpec& spec_for(const std::string& name) {
  static const std::map<std::string, CommandSpec> specs = {
      {"evolve",
       {RunConfig::Command::Evolve,
        {"A", "d", "p1", "p2", "grid", "T"},
        {"out", "checkpoint_every", "eps"}}},
      {"hbar",
       {RunConfig::Command::Hbar,
        {"A", "d", "p1", "p2"},
        {"out", "grid", "T", "burn_in", "lambda", "tau", "game_grid",
         "game_steps", "n_angles", "n_radii", "methods"}}},
      {"game",
       {RunConfig::Command::Game,
        {"A", "d", "p1", "p2", "grid", "tau", "steps"},
        {"out", "n_angles", "n_radii"}}},
      {"trajectory",
       {RunConfig::Command::Trajectory,
        {"A", "d", "tau", "steps", "x1", "x2", "strategy", "adversary"},
        {"out", "target_level"}}},
      {"sweep",
       {RunConfig::Command::Sweep,
        {"A_list", "d", "p1", "p2"},
        {"out", "grid", "T", "burn_in", "lambda"}}},
      {"appendix-check",
       {RunConfig::Command::AppendixCheck,
        {"A", "d", "delta", "grid"},
        {"out"}}},
  };
  auto it = specs.find(name);
  if (it == specs.end()) throw ConfigError("unknown command '" + name + "'");
  return it->second;
}

// Keys that must parse as numbers, with their sign rule.
enum class Sign { Positive, NonNegative, Any };

const std::map<std::string, Sign>& numeric_rules() {
  static const std::map<std::string, Sign> rules = {
      {"A", Sign::NonNegative},   {"d", Sign::NonNegative},
      {"p1", Sign::Any},          {"p2", Sign::Any},
      {"grid", Sign::Positive},   {"T", Sign::Positive},
      {"burn_in", Sign::NonNegative}, {"tau", Sign::Positive},
      {"game_grid", Sign::Positive}, {"game_steps", Sign::Positive},
      {"n_angles", Sign::Positive}, {"n_radii", Sign::Positive},
      {"steps", Sign::Positive},  {"x1", Sign::Any},
      {"x2", Sign::Any},          {"delta", Sign::Positive},
      {"checkpoint_every", Sign::Positive}, {"eps", Sign::Positive},
      {"target_level", Sign::Any},
  };
  return rules;
}

double parse_number(const std::string& key, const std::string& value, int line) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &pos);
  } catch (const std::exception&) {
    throw ConfigError("value of '" + key + "' is not a number: '" + value + "'",
                      line);
  }
  if (pos != value.size())
    throw ConfigError("trailing characters in value of '" + key + "'", line);
  return v;
}

}  // namespace

double RunConfig::number(const std::string& key) const {
  auto it = raw.find(key);
  if (it == raw.end()) throw ConfigError("missing required key '" + key + "'");
  return parse_number(key, it->second, 0);
}

double RunConfig::number_or(const std::string& key, double fallback) const {
  return has(key) ? number(key) : fallback;
}

int RunConfig::integer(const std::string& key) const {
  const double v = number(key);
  const int i = static_cast<int>(v);
  if (static_cast<double>(i) != v)
    throw ConfigError("'" + key + "' must be an integer");
  return i;
}

int RunConfig::integer_or(const std::string& key, int fallback) const {
  return has(key) ? integer(key) : fallback;
}

std::string RunConfig::text(const std::string& key) const {
  auto it = raw.find(key);
  if (it == raw.end()) throw ConfigError("missing required key '" + key + "'");
  return it->second;
}

std::string RunConfig::text_or(const std::string& key,
                               const std::string& fallback) const {
  return has(key) ? text(key) : fallback;
}

std::vector<double> RunConfig::number_list(const std::string& key) const {
  const std::string v = text(key);
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    out.push_back(parse_number(key, item, 0));
  }
  if (out.empty()) throw ConfigError("'" + key + "' must list numbers");
  return out;
}

const char* RunConfig::command_name(Command c) {
  switch (c) {
    case Command::Evolve: return "evolve";
    case Command::Hbar: return "hbar";
    case Command::Game: return "game";
    case Command::Trajectory: return "trajectory";
    case Command::Sweep: return "sweep";
    case Command::AppendixCheck: return "appendix-check";
  }
  return "?";
}

std::string RunConfig::canonical() const {
  std::string out = "command=" + std::string(command_name(command)) + "\n";
  for (const auto& [k, v] : raw)
    if (k != "command") out += k + "=" + v + "\n";
  return out;
}

RunConfig parse_config(const std::string& text) {
  RunConfig config;
  std::map<std::string, int> line_of;
  std::stringstream ss(text);
  std::string line;
  int line_no = 0;
  while (std::getline(ss, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("expected key=value, got '" + line + "'", line_no);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("empty key", line_no);
    if (config.raw.count(key))
      throw ConfigError("duplicate key '" + key + "'", line_no);
    config.raw[key] = value;
    line_of[key] = line_no;
  }

  if (!config.raw.count("command")) throw ConfigError("missing command");
  const CommandSpec& cmd = spec_for(config.raw.at("command"));
  config.command = cmd.command;

  for (const auto& [key, value] : config.raw) {
    if (key == "command") continue;
    if (!cmd.required.count(key) && !cmd.optional.count(key))
      throw ConfigError("unknown key '" + key + "' for command '" +
                            config.raw.at("command") + "'",
                        line_of[key]);
    // A_list / lambda are comma lists; validate elementwise below.
    if (key == "A_list" || key == "lambda" || key == "methods" || key == "out" ||
        key == "strategy" || key == "adversary")
      continue;
    auto rule = numeric_rules().find(key);
    if (rule != numeric_rules().end()) {
      const double v = parse_number(key, value, line_of[key]);
      if (rule->second == Sign::Positive && !(v > 0.0))
        throw ConfigError("'" + key + "' must be positive", line_of[key]);
      if (rule->second == Sign::NonNegative && !(v >= 0.0))
        throw ConfigError("'" + key + "' must be non-negative", line_of[key]);
    }
  }
  for (const std::string& key : cmd.required)
    if (!config.raw.count(key))
      throw ConfigError("missing required key '" + key + "' for command '" +
                        config.raw.at("command") + "'");
  if (config.raw.count("A_list"))
    for (double a : config.number_list("A_list"))
      if (!(a >= 0.0)) throw ConfigError("'A_list' entries must be non-negative");
  if (config.raw.count("lambda"))
    for (double l : config.number_list("lambda"))
      if (!(l > 0.0)) throw ConfigError("'lambda' entries must be positive");
  return config;
}

}  // namespace cgflow
