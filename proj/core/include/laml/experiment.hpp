#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "laml/automaton.hpp"
#include "laml/csv.hpp"
#include "laml/energy.hpp"

// Experiment orchestration: the round loop that turns one configuration and
// one seed into a lifetime, multi-trial aggregation with derived per-trial
// seeds, and the named sweep grids. Everything here is deterministic given
// (config, master_seed), including under parallel trial execution.

namespace laml {

enum class Algorithm { Laml, GreedyMsc };

struct EnergyConfig {
  double initial_battery = 1.0;  // one unit funds 1/psi monitoring phases at sense_rate 1
  double sense_rate = 1.0;
  double e_elec = 50e-9;
  double eps_amp = 100e-12;
  int packet_bits = 2000;
  double comm_scale = 0.0;  // idealized by default; set 1 to charge radio traffic
};

struct ExperimentConfig {
  double area_side = 500.0;
  int n_sensors = 0;
  int n_targets = 0;
  double sensing_range = 0.0;
  double comm_radius = 0.0;  // 0 means "derive as 2 * sensing_range"
  double psi = 0.2;
  double theta = 0.85;
  LearningParams learning{0.1, 0.1, Scheme::RewardPenalty};
  EnergyConfig energy;
  int max_learning_iters_factor = 100;  // per round: factor * n_sensors exchanges
  bool reset_automata_each_round = true;
  int trials = 50;
  std::uint64_t master_seed = 1;
  Algorithm algorithm = Algorithm::Laml;
};

double effective_comm_radius(const ExperimentConfig& c);

// Throws ConfigError listing every invalid field.
void validate(const ExperimentConfig& c);

// JSON config files mirror the field names above ("learning" and "energy"
// are nested objects; "learning" uses keys a, b, scheme). n_sensors,
// n_targets and sensing_range are required, everything else defaults.
// Unknown fields are rejected.
ExperimentConfig parse_config(std::string_view json_text);
ExperimentConfig load_config(const std::filesystem::path& path);
std::string config_to_json(const ExperimentConfig& c);

std::string to_string(Algorithm a);  // "laml" / "greedy"

struct RoundRecord {
  int round_index = 0;
  long learning_iterations = 0;
  std::vector<int> active_set;
  std::vector<int> patched;
  double duration = 0.0;
  double energy_spent = 0.0;
};

struct SimulationResult {
  double lifetime = 0.0;  // rounds.size() * psi, by construction
  std::vector<RoundRecord> rounds;
  std::vector<double> final_residuals;
  long total_learning_iterations = 0;
  std::uint64_t seed = 0;
  double upper_bound = 0.0;  // per-target energy bound of this run's deployment
  int coverage_violations = 0;  // rounds whose active set missed a coverable target
  int simplex_violations = 0;   // automata found off the probability simplex
};

// One full run: deploy, initial phase, then rounds of learning + monitoring
// while every target is still coverable by alive nodes.
SimulationResult run_simulation(const ExperimentConfig& c, std::uint64_t seed);

struct TrialStats {
  std::uint64_t seed = 0;
  double lifetime = 0.0;
  int rounds = 0;
  long learning_iterations = 0;
  double upper_bound = 0.0;
  int coverage_violations = 0;
  int simplex_violations = 0;
};

struct TrialSummary {
  double mean_lifetime = 0.0;
  double std_lifetime = 0.0;  // sample standard deviation; 0 for a single trial
  double min_lifetime = 0.0;
  double max_lifetime = 0.0;
  double mean_rounds = 0.0;
  double mean_learning_iters = 0.0;
  std::vector<TrialStats> per_trial;  // in trial order
  ExperimentConfig config;
};

// Runs config.trials simulations with seeds derive_seed(master_seed, i) and
// aggregates them in trial order. `jobs` only controls execution
// parallelism; the summary is identical for any value.
TrialSummary run_trials(const ExperimentConfig& c, int jobs = 1);

struct SweepPoint {
  std::string preset;
  ExperimentConfig config;
};

// The named experiment grids. Throws UnknownPreset for anything else
// ("custom" grids are assembled by the caller from a config file).
std::vector<SweepPoint> preset_grid(const std::string& name);
std::vector<std::string> preset_names();

SweepRow summarize_row(const std::string& preset, const TrialSummary& summary);
std::vector<SweepRow> sweep_points(const std::vector<SweepPoint>& points, int jobs = 1);
std::vector<SweepRow> sweep(const std::string& preset, int jobs = 1);

}  // namespace laml
