#include "cgflow/runner.hpp"

#include <cmath>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include "cgflow/contour.hpp"
#include "cgflow/ellipse.hpp"
#include "cgflow/hbar.hpp"
#include "cgflow/io.hpp"
#include "cgflow/strategy.hpp"

namespace cgflow {

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  return out;
}

void provenance(CsvWriter& csv, const RunConfig& config) {
  std::stringstream ss(config.canonical());
  std::string line;
  while (std::getline(ss, line)) csv.comment(line);
}

std::vector<double> hbar_row(const HbarEstimate& e) {
  return {e.p.x,
          e.p.y,
          e.A,
          e.d,
          static_cast<double>(e.method),
          e.value,
          e.error_indicator,
          static_cast<double>(e.grid),
          e.T,
          e.tau,
          e.lambda,
          static_cast<double>(e.n_angles),
          static_cast<double>(e.n_radii)};
}

const std::vector<std::string> kHbarColumns = {
    "p1", "p2",  "A",   "d",      "method", "hbar",    "err",
    "grid", "T", "tau", "lambda", "n_angles", "n_radii"};

int run_evolve(const RunConfig& config, std::ostream&) {
  CorrectorState state;
  state.w = Grid2(config.integer("grid"), config.integer("grid"), 0.0);
  state.p = {config.number("p1"), config.number("p2")};
  state.d = config.number("d");
  state.flow = CellularFlow(config.number("A"));
  if (config.has("eps")) state.eps = config.number("eps");
  const double T = config.number("T");
  const double every = config.number_or("checkpoint_every", T / 20.0);

  auto result = evolve(std::move(state), T, every);

  const std::string out = config.text_or("out", "run");
  auto cp_file = open_out(out + "_checkpoints.csv");
  CsvWriter csv(cp_file, {"t", "mean_w", "min_w", "max_w", "osc"});
  provenance(csv, config);
  for (const auto& cp : result.checkpoints)
    csv.row({cp.t, cp.mean_w, cp.min_w, cp.max_w, cp.osc()});
  save_gflm(result.state.w, out + "_final.gflm");
  return kExitOk;
}

int run_hbar(const RunConfig& config, std::ostream&) {
  const Vec2 p{config.number("p1"), config.number("p2")};
  const double A = config.number("A");
  const double d = config.number("d");
  const int grid = config.integer_or("grid", 128);
  const double T = config.number_or("T", 40.0);
  const double burn_in = config.number_or("burn_in", 10.0);
  const std::vector<double> lambdas =
      config.has("lambda") ? config.number_list("lambda")
                           : std::vector<double>{0.2, 0.1, 0.05};
  const std::string methods = config.text_or("methods", "front,discounted,game");

  const std::string out = config.text_or("out", "run");
  auto file = open_out(out + "_hbar.csv");
  CsvWriter csv(file, kHbarColumns);
  provenance(csv, config);

  if (methods.find("front") != std::string::npos)
    csv.row(hbar_row(hbar_front_speed(p, A, d, grid, T, burn_in)));
  if (methods.find("discounted") != std::string::npos)
    csv.row(hbar_row(hbar_discounted(p, A, d, lambdas, grid)));
  if (methods.find("game") != std::string::npos) {
    // The kick tau*sqrt(2d) has to span a few cells of the value grid, so
    // the game runs with a coarse tau rather than a coarse grid.
    GameParams params;
    params.tau = config.number_or("tau", 0.25);
    params.d = d;
    params.n_angles = config.integer_or("n_angles", 64);
    params.n_radii = config.integer_or("n_radii", 3);
    const int game_grid = config.integer_or("game_grid", 128);
    const double game_T = std::min(T / 4.0, 10.0);
    params.n_steps = config.integer_or(
        "game_steps",
        static_cast<int>(std::ceil(game_T / (params.tau * params.tau))));
    csv.row(hbar_row(hbar_game(p, A, d, params, game_grid)));
  }
  return kExitOk;
}

int run_game(const RunConfig& config, std::ostream&) {
  GameParams params;
  params.tau = config.number("tau");
  params.d = config.number("d");
  params.n_steps = config.integer("steps");
  params.n_angles = config.integer_or("n_angles", 64);
  params.n_radii = config.integer_or("n_radii", 3);
  params.flow = CellularFlow(config.number("A"));
  const Vec2 p{config.number("p1"), config.number("p2")};
  const int grid = config.integer("grid");

  const ValueGrid value = dp_backward(p, params, grid, grid);
  const double speed = speed_from_value(value, params);

  const std::string out = config.text_or("out", "run");
  save_gflm(value.base, out + "_value.gflm");
  auto file = open_out(out + "_value_meta.csv");
  CsvWriter csv(file, {"p1", "p2", "k", "tau", "n_angles", "n_radii", "speed"});
  provenance(csv, config);
  csv.row({p.x, p.y, static_cast<double>(value.k), params.tau,
           static_cast<double>(params.n_angles),
           static_cast<double>(params.n_radii), speed});
  return kExitOk;
}

int run_trajectory(const RunConfig& config, std::ostream&) {
  GameParams params;
  params.tau = config.number("tau");
  params.d = config.number("d");
  params.n_steps = config.integer("steps");
  params.flow = CellularFlow(config.number("A"));
  const Vec2 x0{config.number("x1"), config.number("x2")};

  std::unique_ptr<PlayerOne> s1;
  const std::string strategy = config.text("strategy");
  if (strategy == "descent") s1 = std::make_unique<DescentStrategy>(params);
  else if (strategy == "follow-flow") s1 = std::make_unique<FollowFlowStrategy>();
  else if (strategy == "exit") s1 = std::make_unique<ExitStrategy>(x0);
  else if (strategy == "axis-push")
    s1 = std::make_unique<AxisPushStrategy>(Vec2{-1.0, 0.0});
  else throw ConfigError("unknown strategy '" + strategy + "'");

  std::unique_ptr<PlayerTwo> s2;
  const std::string adversary = config.text("adversary");
  if (adversary == "max-sign")
    s2 = std::make_unique<SignSeekingLevel>(params, true);
  else if (adversary == "min-sign")
    s2 = std::make_unique<SignSeekingLevel>(params, false);
  else if (adversary == "fixed+") s2 = std::make_unique<FixedSign>(+1);
  else if (adversary == "fixed-") s2 = std::make_unique<FixedSign>(-1);
  else if (adversary == "oppose-x")
    s2 = std::make_unique<OpposeAxis>(Vec2{1.0, 0.0});
  else if (adversary == "oppose-y")
    s2 = std::make_unique<OpposeAxis>(Vec2{0.0, 1.0});
  else throw ConfigError("unknown adversary '" + adversary + "'");

  StopCondition stop;
  if (config.has("target_level")) {
    const double mu = config.number("target_level");
    stop = [mu](Vec2 x, int) { return stream(x) <= mu; };
  }
  const auto traj = run(x0, *s1, *s2, params, stop, params.n_steps);

  const std::string out = config.text_or("out", "run");
  auto file = open_out(out + "_trajectory.csv");
  CsvWriter csv(file, {"step", "x1", "x2", "eta1", "eta2", "b", "H"});
  provenance(csv, config);
  csv.comment(traj.meta);
  for (int n = 0; n <= traj.steps(); ++n) {
    const Vec2 x = traj.points[n];
    const Vec2 eta = n < traj.steps() ? traj.controls[n].first : Vec2{};
    const double b = n < traj.steps() ? traj.controls[n].second : 0.0;
    csv.row({static_cast<double>(n), x.x, x.y, eta.x, eta.y, b, stream(x)});
  }
  return kExitOk;
}

int run_sweep(const RunConfig& config, std::ostream&) {
  const Vec2 p{config.number("p1"), config.number("p2")};
  const auto rows = sweep(
      p, config.number("d"), config.number_list("A_list"),
      config.integer_or("grid", 128), config.number_or("T", 40.0),
      config.number_or("burn_in", 10.0),
      config.has("lambda") ? config.number_list("lambda") : std::vector<double>{});

  const std::string out = config.text_or("out", "run");
  auto file = open_out(out + "_sweep.csv");
  std::vector<std::string> cols = kHbarColumns;
  cols.push_back("trend");
  cols.push_back("fitted_c");
  CsvWriter csv(file, cols);
  provenance(csv, config);
  for (const auto& row : rows) {
    auto cells = hbar_row(row.estimate);
    cells.push_back(row.trend);
    cells.push_back(row.fitted_c);
    csv.row(cells);
  }
  return kExitOk;
}

int run_appendix_check(const RunConfig& config, std::ostream& log) {
  const auto report = containment_check(
      CellularFlow(config.number("A")), config.number("d"),
      config.number("delta"), config.integer("grid"), {0.25, 0.5, 1.0},
      {0.4, 0.5, 0.6});

  const std::string out = config.text_or("out", "run");
  auto file = open_out(out + "_appendix.csv");
  CsvWriter csv(file, {"t", "min_margin", "violations"});
  provenance(csv, config);
  csv.comment("t_delta=" + CsvWriter::format(report.t_delta));
  for (std::size_t k = 0; k < report.edge_probe_values.size(); ++k)
    csv.comment("edge_probe_" + std::to_string(k) + "=" +
                CsvWriter::format(report.edge_probe_values[k]));
  for (const auto& row : report.rows)
    csv.row({row.t, row.min_margin, static_cast<double>(row.violations)});
  if (!report.passed) {
    log << "appendix-check: containment or edge probe failed\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

}  // namespace

int execute(const RunConfig& config, std::ostream& log) {
  try {
    switch (config.command) {
      case RunConfig::Command::Evolve: return run_evolve(config, log);
      case RunConfig::Command::Hbar: return run_hbar(config, log);
      case RunConfig::Command::Game: return run_game(config, log);
      case RunConfig::Command::Trajectory: return run_trajectory(config, log);
      case RunConfig::Command::Sweep: return run_sweep(config, log);
      case RunConfig::Command::AppendixCheck: return run_appendix_check(config, log);
    }
  } catch (const ConfigError& e) {
    log << "error: config: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const CflError& e) {
    log << "error: numerical: " << e.what() << "\n";
    return kExitNumericalError;
  } catch (const NonFiniteError& e) {
    log << "error: numerical: " << e.what() << "\n";
    return kExitNumericalError;
  } catch (const ConvergenceError& e) {
    log << "error: numerical: " << e.what() << "\n";
    return kExitNumericalError;
  } catch (const std::invalid_argument& e) {
    log << "error: config: " << e.what() << "\n";
    return kExitConfigError;
  }
  return kExitConfigError;
}

}  // namespace cgflow
