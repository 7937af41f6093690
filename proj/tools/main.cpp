// Batch front-propagation experiments driven by a key=value config file.
//
//   cgflow <config-path>            run the configured experiment
//   cgflow <config-path> --print-config   echo the validated config and exit
//
// Exit codes: 0 success, 2 config error, 3 numerical failure,
// 4 acceptance-check failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "cgflow/runner.hpp"

namespace {

int usage() {
  std::cerr << "usage: cgflow <config-path> [--print-config]\n";
  return cgflow::kExitConfigError;
}

}  // namespace

int main(int argc, char** argv) {
  std::string path;
  bool print_only = false;
  for (int k = 1; k < argc; ++k) {
    const std::string arg = argv[k];
    if (arg == "--print-config") print_only = true;
    else if (!arg.empty() && arg[0] == '-') return usage();
    else if (path.empty()) path = arg;
    else return usage();
  }
  if (path.empty()) return usage();

  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: config: cannot open '" << path << "'\n";
    return cgflow::kExitConfigError;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();

  cgflow::RunConfig config;
  try {
    config = cgflow::parse_config(buffer.str());
  } catch (const cgflow::ConfigError& e) {
    std::cerr << "error: config: " << e.what() << "\n";
    return cgflow::kExitConfigError;
  }

  if (print_only) {
    std::cout << config.canonical();
    return cgflow::kExitOk;
  }
  return cgflow::execute(config, std::cerr);
}
