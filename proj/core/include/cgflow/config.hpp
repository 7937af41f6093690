#pragma once

#include <map>
#include <string>
#include <vector>

#include "cgflow/errors.hpp"

namespace cgflow {

// Flat key=value run configuration. One assignment per line, '#' starts a
// comment, keys are validated against the chosen command and unknown keys
// are rejected with their line number.
struct RunConfig {
  enum class Command { Evolve, Hbar, Game, Trajectory, Sweep, AppendixCheck };

  Command command;
  std::map<std::string, std::string> raw;

  bool has(const std::string& key) const { return raw.count(key) != 0; }
  double number(const std::string& key) const;
  double number_or(const std::string& key, double fallback) const;
  int integer(const std::string& key) const;
  int integer_or(const std::string& key, int fallback) const;
  std::string text(const std::string& key) const;
  std::string text_or(const std::string& key, const std::string& fallback) const;
  std::vector<double> number_list(const std::string& key) const;

  static const char* command_name(Command c);
  // Normalized key=value form (sorted keys), as echoed by --print-config.
  std::string canonical() const;
};

RunConfig parse_config(const std::string& text);

}  // namespace cgflow
