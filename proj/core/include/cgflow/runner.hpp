#pragma once

#include <iosfwd>

#include "cgflow/config.hpp"

namespace cgflow {

// Exit codes of the batch runner.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitNumericalError = 3;
inline constexpr int kExitCheckFailed = 4;

// Runs a validated config, writing CSV/GFLM artifacts to the declared output
// prefix. Identical configs produce identical output bytes. Diagnostic and
// error lines go to `log`.
int execute(const RunConfig& config, std::ostream& log);

}  // namespace cgflow
