#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cgflow {

// Time step rejected by the stability bound; carries the admissible step.
class CflError : public std::runtime_error {
 public:
  CflError(double requested, double admissible)
      : std::runtime_error("time step " + std::to_string(requested) +
                           " exceeds admissible " + std::to_string(admissible)),
        admissible_dt(admissible) {}
  double admissible_dt;
};

// NaN/Inf detected in a state that must stay finite.
class NonFiniteError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Fixed-point iteration exhausted its budget; carries the residual history.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::vector<double> history)
      : std::runtime_error(what), residual_history(std::move(history)) {}
  std::vector<double> residual_history;
};

// Config file rejected; carries the offending line (0 = whole file).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& what, int line_no = 0)
      : std::runtime_error(line_no > 0
                               ? "line " + std::to_string(line_no) + ": " + what
                               : what),
        line(line_no) {}
  int line;
};

}  // namespace cgflow
