#include "laml/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>

#include "laml/deployment.hpp"
#include "laml/engine.hpp"
#include "laml/errors.hpp"
#include "laml/rng.hpp"
#include "laml/set_cover.hpp"

namespace laml {

namespace {

constexpr double kSimplexTolerance = 1e-9;

bool on_simplex(const AutomatonState& s) {
  return s.p[0] >= 0.0 && s.p[0] <= 1.0 && s.p[1] >= 0.0 && s.p[1] <= 1.0 &&
         std::abs(s.p[0] + s.p[1] - 1.0) <= kSimplexTolerance;
}

SimulationResult run_greedy(const ExperimentConfig& c, const Deployment& d, std::uint64_t seed,
                            double upper_bound) {
  // Centralized baseline: no radio traffic is charged.
  std::vector<double> batteries(static_cast<std::size_t>(c.n_sensors), c.energy.initial_battery);
  const CoverSchedule schedule =
      greedy_msc_schedule(d, std::move(batteries), c.psi, c.energy.sense_rate);

  SimulationResult result;
  result.seed = seed;
  result.upper_bound = upper_bound;
  result.lifetime = static_cast<double>(schedule.covers.size()) * c.psi;
  result.final_residuals = schedule.final_batteries;
  result.rounds.reserve(schedule.covers.size());
  const double slot_cost = sensing_cost(c.energy.sense_rate, c.psi);
  for (std::size_t k = 0; k < schedule.covers.size(); ++k) {
    RoundRecord record;
    record.round_index = static_cast<int>(k);
    record.active_set = schedule.covers[k].cover;
    record.duration = c.psi;
    record.energy_spent = static_cast<double>(record.active_set.size()) * slot_cost;
    result.rounds.push_back(std::move(record));
  }
  return result;
}

}  // namespace

double effective_comm_radius(const ExperimentConfig& c) {
  return c.comm_radius > 0.0 ? c.comm_radius : 2.0 * c.sensing_range;
}

void validate(const ExperimentConfig& c) {
  std::string problems;
  auto complain = [&problems](const std::string& msg) {
    if (!problems.empty()) problems += "; ";
    problems += msg;
  };

  if (!(c.area_side > 0.0) || !std::isfinite(c.area_side)) complain("area_side must be positive");
  if (c.n_sensors < 1) complain("n_sensors must be >= 1");
  if (c.n_targets < 1) complain("n_targets must be >= 1");
  if (!(c.sensing_range > 0.0) || !std::isfinite(c.sensing_range)) {
    complain("sensing_range must be positive");
  }
  if (c.comm_radius != 0.0 &&
      (!(c.comm_radius > 0.0) || !std::isfinite(c.comm_radius) || c.comm_radius < c.sensing_range)) {
    complain("comm_radius must be >= sensing_range (or omitted for the 2x default)");
  }
  if (!(c.psi > 0.0) || !std::isfinite(c.psi)) complain("psi must be positive");
  if (!(c.theta > 0.5 && c.theta < 1.0)) complain("theta must lie in (0.5, 1)");
  try {
    laml::validate(c.learning);
  } catch (const std::invalid_argument& e) {
    complain(std::string("learning: ") + e.what());
  }
  if (!(c.energy.initial_battery > 0.0)) complain("energy.initial_battery must be positive");
  if (!(c.energy.sense_rate > 0.0)) complain("energy.sense_rate must be positive");
  if (c.energy.e_elec < 0.0) complain("energy.e_elec must be >= 0");
  if (c.energy.eps_amp < 0.0) complain("energy.eps_amp must be >= 0");
  if (c.energy.packet_bits < 0) complain("energy.packet_bits must be >= 0");
  if (c.energy.comm_scale < 0.0) complain("energy.comm_scale must be >= 0");
  if (c.max_learning_iters_factor < 0) complain("max_learning_iters_factor must be >= 0");
  if (c.trials < 1) complain("trials must be >= 1");

  if (!problems.empty()) throw ConfigError("invalid config: " + problems);
}

std::string to_string(Algorithm a) { return a == Algorithm::Laml ? "laml" : "greedy"; }

SimulationResult run_simulation(const ExperimentConfig& c, std::uint64_t seed) {
  validate(c);

  std::mt19937_64 rng(seed);
  const Deployment d = deploy_random(c.area_side, c.n_sensors, c.n_targets, c.sensing_range,
                                     effective_comm_radius(c), rng);

  const std::vector<double> initial(static_cast<std::size_t>(c.n_sensors),
                                    c.energy.initial_battery);
  const double upper_bound = lifetime_upper_bound(d, initial, c.energy.sense_rate);

  if (c.algorithm == Algorithm::GreedyMsc) return run_greedy(c, d, seed, upper_bound);

  SimulationResult result;
  result.seed = seed;
  result.upper_bound = upper_bound;

  const RadioParams radio{c.energy.e_elec, c.energy.eps_amp, c.energy.packet_bits,
                          c.energy.comm_scale};
  const double activation_cost = sensing_cost(c.energy.sense_rate, c.psi);
  const long max_iters = static_cast<long>(c.max_learning_iters_factor) * c.n_sensors;

  EnergyLedger ledger(static_cast<std::size_t>(c.n_sensors));
  auto nodes = initial_phase(d, c.learning, radio, c.energy.initial_battery, activation_cost, ledger);

  // Unreachable by the energy argument (every round drains at least one
  // activation), kept as a loud guard against accounting bugs.
  const long round_cap =
      static_cast<long>(c.n_sensors * (c.energy.initial_battery / activation_cost + 2.0)) + 16;

  int round = 0;
  for (;;) {
    const auto alive = alive_ids(nodes);
    if (alive.empty() || !is_coverable(d, alive)) break;

    if (c.reset_automata_each_round && round > 0) {
      for (auto& node : nodes) node.automaton = make_automaton(c.learning);
    }

    const double ledger_before = ledger.grand_total();
    LearningOutcome outcome;
    try {
      outcome = run_learning_phase(d, nodes, c.theta, max_iters, rng, radio, activation_cost, ledger);
    } catch (const NoAliveNodes&) {
      break;  // the network died mid-negotiation; the round never happened
    }

    if (!coverable_targets(d, nodes).is_subset_of(coverage_union(d, outcome.active_set))) {
      ++result.coverage_violations;
    }
    for (const auto& node : nodes) {
      if (!on_simplex(node.automaton)) ++result.simplex_violations;
    }

    monitoring_phase(nodes, outcome.active_set, c.psi, c.energy.sense_rate, ledger);

    RoundRecord record;
    record.round_index = round;
    record.learning_iterations = outcome.iterations;
    record.active_set = std::move(outcome.active_set);
    record.patched = std::move(outcome.patched);
    record.duration = c.psi;
    record.energy_spent = ledger.grand_total() - ledger_before;
    result.rounds.push_back(std::move(record));

    result.total_learning_iterations += outcome.iterations;
    ++round;
    if (round > round_cap) throw std::logic_error("round cap exceeded; energy accounting is broken");
  }

  result.lifetime = static_cast<double>(result.rounds.size()) * c.psi;
  result.final_residuals.reserve(nodes.size());
  for (const auto& node : nodes) result.final_residuals.push_back(node.battery.residual);
  return result;
}

TrialSummary run_trials(const ExperimentConfig& c, int jobs) {
  validate(c);
  const int n = c.trials;
  std::vector<SimulationResult> results(static_cast<std::size_t>(n));

  jobs = std::max(1, jobs);
  if (jobs == 1) {
    for (int i = 0; i < n; ++i) results[static_cast<std::size_t>(i)] = run_simulation(c, derive_seed(c.master_seed, static_cast<std::uint64_t>(i)));
  } else {
    std::atomic<int> next{0};
    auto worker = [&]() {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= n) return;
        results[static_cast<std::size_t>(i)] =
            run_simulation(c, derive_seed(c.master_seed, static_cast<std::uint64_t>(i)));
      }
    };
    std::vector<std::thread> pool;
    const int n_threads = std::min(jobs, n);
    pool.reserve(static_cast<std::size_t>(n_threads));
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // Aggregation runs in trial order regardless of which thread finished when.
  TrialSummary summary;
  summary.config = c;
  summary.per_trial.reserve(static_cast<std::size_t>(n));
  double sum = 0.0;
  summary.min_lifetime = results[0].lifetime;
  summary.max_lifetime = results[0].lifetime;
  double rounds_sum = 0.0;
  double iters_sum = 0.0;
  for (const auto& r : results) {
    summary.per_trial.push_back({r.seed, r.lifetime, static_cast<int>(r.rounds.size()),
                                 r.total_learning_iterations, r.upper_bound,
                                 r.coverage_violations, r.simplex_violations});
    sum += r.lifetime;
    summary.min_lifetime = std::min(summary.min_lifetime, r.lifetime);
    summary.max_lifetime = std::max(summary.max_lifetime, r.lifetime);
    rounds_sum += static_cast<double>(r.rounds.size());
    iters_sum += static_cast<double>(r.total_learning_iterations);
  }
  summary.mean_lifetime = sum / n;
  summary.mean_rounds = rounds_sum / n;
  summary.mean_learning_iters = iters_sum / n;
  if (n > 1) {
    double ss = 0.0;
    for (const auto& r : results) {
      const double dev = r.lifetime - summary.mean_lifetime;
      ss += dev * dev;
    }
    summary.std_lifetime = std::sqrt(ss / (n - 1));
  }
  return summary;
}

SweepRow summarize_row(const std::string& preset, const TrialSummary& summary) {
  const ExperimentConfig& c = summary.config;
  SweepRow row;
  row.algorithm = to_string(c.algorithm);
  row.preset = preset;
  row.n_sensors = c.n_sensors;
  row.n_targets = c.n_targets;
  row.sensing_range = c.sensing_range;
  row.learning_rate = c.learning.reward_rate;
  row.psi = c.psi;
  row.trials = c.trials;
  row.mean_lifetime = summary.mean_lifetime;
  row.std_lifetime = summary.std_lifetime;
  row.min_lifetime = summary.min_lifetime;
  row.max_lifetime = summary.max_lifetime;
  row.mean_rounds = summary.mean_rounds;
  row.mean_learning_iters = summary.mean_learning_iters;
  row.master_seed = c.master_seed;
  return row;
}

std::vector<SweepRow> sweep_points(const std::vector<SweepPoint>& points, int jobs) {
  std::vector<SweepRow> rows;
  rows.reserve(points.size());
  for (const auto& point : points) {
    rows.push_back(summarize_row(point.preset, run_trials(point.config, jobs)));
  }
  return rows;
}

std::vector<SweepRow> sweep(const std::string& preset, int jobs) {
  return sweep_points(preset_grid(preset), jobs);
}

}  // namespace laml
