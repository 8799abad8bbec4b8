// Command-line front end: `run` executes one configured experiment, `sweep`
// emits one CSV per named grid, `oracle` prints coverage bounds for a fixed
// scenario. Exit codes: 0 success, 2 configuration error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "laml/csv.hpp"
#include "laml/deployment.hpp"
#include "laml/errors.hpp"
#include "laml/experiment.hpp"
#include "laml/set_cover.hpp"

namespace {

namespace fs = std::filesystem;

laml::Algorithm parse_algorithm(const std::string& name) {
  if (name == "laml") return laml::Algorithm::Laml;
  if (name == "greedy") return laml::Algorithm::GreedyMsc;
  throw laml::ConfigError("--algorithm must be laml or greedy; got \"" + name + "\"");
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

struct RunOptions {
  std::string config_path;
  std::string out_path;
  std::string algorithm;
  std::uint64_t seed = 0;
  bool seed_given = false;
  int jobs = 1;
};

int cmd_run(const RunOptions& opt) {
  laml::ExperimentConfig config = laml::load_config(opt.config_path);
  if (opt.seed_given) config.master_seed = opt.seed;
  if (!opt.algorithm.empty()) config.algorithm = parse_algorithm(opt.algorithm);

  const laml::TrialSummary summary = laml::run_trials(config, opt.jobs);
  const laml::SweepRow row = laml::summarize_row("run", summary);
  const std::string csv = laml::to_csv(std::vector<laml::SweepRow>{row});
  if (opt.out_path.empty()) {
    std::cout << csv;
  } else {
    write_text(opt.out_path, csv);
  }
  return 0;
}

struct SweepOptions {
  std::string preset;
  std::string config_path;
  std::string out_dir = ".";
  std::string vary;
  int jobs = 1;
  int trials_override = 0;
  std::uint64_t seed = 0;
  bool seed_given = false;
};

// "field=v1,v2,..." over one numeric config field.
std::vector<laml::SweepPoint> custom_points(const laml::ExperimentConfig& base,
                                            const std::string& vary) {
  std::vector<laml::SweepPoint> points;
  if (vary.empty()) {
    points.push_back({"custom", base});
    return points;
  }
  const auto eq = vary.find('=');
  if (eq == std::string::npos) {
    throw laml::ConfigError("--vary expects field=v1,v2,...; got \"" + vary + "\"");
  }
  const std::string field = vary.substr(0, eq);
  std::vector<double> values;
  std::string rest = vary.substr(eq + 1);
  std::size_t start = 0;
  while (start <= rest.size()) {
    const auto comma = rest.find(',', start);
    const std::string item = rest.substr(start, comma == std::string::npos ? comma : comma - start);
    try {
      values.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw laml::ConfigError("--vary: bad numeric value \"" + item + "\"");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  for (double v : values) {
    laml::ExperimentConfig c = base;
    if (field == "n_sensors") {
      c.n_sensors = static_cast<int>(v);
    } else if (field == "n_targets") {
      c.n_targets = static_cast<int>(v);
    } else if (field == "sensing_range") {
      c.sensing_range = v;
    } else if (field == "learning_rate") {
      c.learning = laml::reward_penalty(v);
    } else {
      throw laml::ConfigError(
          "--vary supports n_sensors, n_targets, sensing_range, learning_rate; got \"" + field +
          "\"");
    }
    points.push_back({"custom", std::move(c)});
  }
  return points;
}

int cmd_sweep(const SweepOptions& opt) {
  std::vector<laml::SweepPoint> points;
  if (opt.preset == "custom") {
    if (opt.config_path.empty()) {
      throw laml::ConfigError("sweep --preset custom requires --config");
    }
    points = custom_points(laml::load_config(opt.config_path), opt.vary);
  } else {
    points = laml::preset_grid(opt.preset);
  }
  for (auto& point : points) {
    if (opt.trials_override > 0) point.config.trials = opt.trials_override;
    if (opt.seed_given) point.config.master_seed = opt.seed;
    laml::validate(point.config);
  }

  const std::vector<laml::SweepRow> rows = laml::sweep_points(points, opt.jobs);
  fs::create_directories(opt.out_dir);
  const fs::path out = fs::path(opt.out_dir) / (opt.preset + ".csv");
  write_text(out, laml::to_csv(rows));
  std::cerr << "wrote " << rows.size() << " rows to " << out.string() << "\n";
  return 0;
}

struct OracleOptions {
  std::string scenario_path;
  double battery = 1.0;
  double sense_rate = 1.0;
};

int cmd_oracle(const OracleOptions& opt) {
  const laml::Deployment d = laml::load_scenario(opt.scenario_path);
  const std::vector<double> batteries(static_cast<std::size_t>(d.n_sensors()), opt.battery);

  std::cout << "sensors " << d.n_sensors() << "\n";
  std::cout << "targets " << d.n_targets() << "\n";
  std::cout << "lifetime_upper_bound "
            << laml::format_double(laml::lifetime_upper_bound(d, batteries, opt.sense_rate))
            << "\n";
  if (d.n_sensors() <= 15 && d.n_targets() <= 64) {
    std::cout << "max_disjoint_covers " << laml::exhaustive_max_disjoint_covers(d) << "\n";
  } else {
    std::cout << "max_disjoint_covers skipped (instance too large for exact search)\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"laml: learning-automata sleep/active scheduling of target-covering sensors"};
  app.require_subcommand(1);

  RunOptions run_opt;
  CLI::App* run = app.add_subcommand("run", "run one experiment and emit a CSV summary row");
  run->add_option("--config", run_opt.config_path, "experiment config (JSON)")->required();
  run->add_option("--seed", run_opt.seed, "override master_seed")
      ->each([&run_opt](const std::string&) { run_opt.seed_given = true; });
  run->add_option("--algorithm", run_opt.algorithm, "laml or greedy (overrides config)");
  run->add_option("--out", run_opt.out_path, "output CSV path (default: stdout)");
  run->add_option("--jobs", run_opt.jobs, "parallel trial workers")->check(CLI::PositiveNumber);

  SweepOptions sweep_opt;
  CLI::App* sweep = app.add_subcommand("sweep", "run a named experiment grid");
  sweep->add_option("--preset", sweep_opt.preset,
                    "fig3a|fig3b|fig4a|fig4b|fig5a|fig5b|fig6|custom")
      ->required();
  sweep->add_option("--config", sweep_opt.config_path, "base config for --preset custom");
  sweep->add_option("--vary", sweep_opt.vary, "custom grid: field=v1,v2,...");
  sweep->add_option("--out", sweep_opt.out_dir, "output directory (default: .)");
  sweep->add_option("--jobs", sweep_opt.jobs, "parallel trial workers")->check(CLI::PositiveNumber);
  sweep->add_option("--trials", sweep_opt.trials_override, "override trials per grid point");
  sweep->add_option("--seed", sweep_opt.seed, "override master_seed")
      ->each([&sweep_opt](const std::string&) { sweep_opt.seed_given = true; });

  OracleOptions oracle_opt;
  CLI::App* oracle = app.add_subcommand("oracle", "print coverage bounds for a fixed scenario");
  oracle->add_option("--scenario", oracle_opt.scenario_path, "scenario geometry (JSON)")->required();
  oracle->add_option("--battery", oracle_opt.battery, "per-sensor battery (default 1.0)");
  oracle->add_option("--sense-rate", oracle_opt.sense_rate, "battery drain per time unit (default 1.0)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(run_opt);
    if (sweep->parsed()) return cmd_sweep(sweep_opt);
    if (oracle->parsed()) return cmd_oracle(oracle_opt);
  } catch (const laml::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const laml::UnknownPreset& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
