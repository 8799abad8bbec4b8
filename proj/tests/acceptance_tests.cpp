// End-to-end acceptance suite. Each criterion prints one [PASS]/[FAIL] line
// with the measured numbers; the process exits 0 only when every criterion
// holds. Usage: acceptance_tests <path-to-lamlsim>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "laml/automaton.hpp"
#include "laml/deployment.hpp"
#include "laml/experiment.hpp"
#include "laml/rng.hpp"
#include "laml/set_cover.hpp"

namespace {

namespace fs = std::filesystem;
using namespace laml;

int g_failures = 0;

void report(bool pass, const std::string& label, const std::string& detail) {
  std::printf("[%s] %s (%s)\n", pass ? "PASS" : "FAIL", label.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

// Trials collected from every grid run; feeds the oracle-bound and coverage
// criteria, which quantify over all of them.
std::vector<TrialStats> g_all_trials;

TrialSummary run_point(const ExperimentConfig& config) {
  TrialSummary summary = run_trials(config, 1);
  for (const auto& t : summary.per_trial) g_all_trials.push_back(t);
  return summary;
}

double spearman(const std::vector<double>& xs, const std::vector<double>& ys) {
  const std::size_t n = xs.size();
  auto ranks = [n](const std::vector<double>& v) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&v](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> r(n);
    for (std::size_t k = 0; k < n;) {
      std::size_t j = k;
      while (j + 1 < n && v[order[j + 1]] == v[order[k]]) ++j;
      const double shared = (static_cast<double>(k) + static_cast<double>(j)) / 2.0 + 1.0;
      for (std::size_t i = k; i <= j; ++i) r[order[i]] = shared;
      k = j + 1;
    }
    return r;
  };
  const auto rx = ranks(xs);
  const auto ry = ranks(ys);
  const double mean = (static_cast<double>(n) + 1.0) / 2.0;
  double num = 0, dx = 0, dy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    num += (rx[i] - mean) * (ry[i] - mean);
    dx += (rx[i] - mean) * (rx[i] - mean);
    dy += (ry[i] - mean) * (ry[i] - mean);
  }
  return num / std::sqrt(dx * dy);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

// --- criteria ---------------------------------------------------------------

void criterion_range_trend() {
  std::vector<double> ranges, means;
  for (const auto& point : preset_grid("fig3a")) {
    if (point.config.n_targets != 10) continue;
    const auto summary = run_point(point.config);
    ranges.push_back(point.config.sensing_range);
    means.push_back(summary.mean_lifetime);
  }
  bool consecutive_ok = true;
  for (std::size_t i = 0; i + 1 < means.size(); ++i) {
    if (means[i + 1] < 0.95 * means[i]) consecutive_ok = false;
  }
  const double rho = spearman(ranges, means);
  std::string detail = "means";
  for (double m : means) detail += " " + fmt(m);
  detail += ", spearman " + fmt(rho);
  report(consecutive_ok && rho >= 0.9,
         "mean lifetime grows with sensing range (20 sensors, 10 targets)", detail);
}

void criterion_laml_vs_greedy() {
  std::vector<double> laml_means, greedy_means, ranges;
  for (const auto& point : preset_grid("fig5a")) {
    const auto summary = run_point(point.config);
    if (point.config.algorithm == Algorithm::Laml) {
      laml_means.push_back(summary.mean_lifetime);
      ranges.push_back(point.config.sensing_range);
    } else {
      greedy_means.push_back(summary.mean_lifetime);
    }
  }
  int wins = 0;
  std::string detail;
  for (std::size_t i = 0; i < laml_means.size(); ++i) {
    wins += laml_means[i] >= greedy_means[i];
    detail += "R" + fmt(ranges[i]) + ":" + fmt(laml_means[i]) + "/" + fmt(greedy_means[i]) + " ";
  }
  detail += "-> " + std::to_string(wins) + "/7 points, need 6";
  report(wins >= 6, "laml lifetime >= greedy lifetime across the sensing-range grid", detail);
}

void criterion_size_trend() {
  std::vector<double> sizes, means;
  for (const auto& point : preset_grid("fig5b")) {
    if (point.config.algorithm != Algorithm::Laml) continue;
    const auto summary = run_point(point.config);
    sizes.push_back(point.config.n_sensors);
    means.push_back(summary.mean_lifetime);
  }
  bool consecutive_ok = true;
  for (std::size_t i = 0; i + 1 < means.size(); ++i) {
    if (means[i + 1] < 0.95 * means[i]) consecutive_ok = false;
  }
  const bool endpoints_ok = means.back() > means.front();
  std::string detail = "means";
  for (double m : means) detail += " " + fmt(m);
  report(endpoints_ok && consecutive_ok,
         "mean lifetime grows with network size (20 to 80 sensors)", detail);
}

void criterion_learning_rate() {
  double slow = 0, fast = 0;
  for (const auto& point : preset_grid("fig6")) {
    const double rate = point.config.learning.reward_rate;
    if (rate != 0.01 && rate != 0.4) continue;
    const auto summary = run_point(point.config);
    (rate == 0.01 ? slow : fast) = summary.mean_lifetime;
  }
  report(slow >= fast, "a slower learning rate never shortens the lifetime",
         "a=0.01: " + fmt(slow) + ", a=0.4: " + fmt(fast));
}

void criterion_oracle_bound() {
  int violations = 0;
  double worst = 0.0;
  for (const auto& t : g_all_trials) {
    // activation uses a 1e-9 relative slack, so a lifetime may legitimately
    // sit that far above the bound
    if (t.lifetime > t.upper_bound * (1.0 + 1e-9) + 1e-12) {
      ++violations;
      worst = std::max(worst, t.lifetime - t.upper_bound);
    }
  }
  report(g_all_trials.size() >= 1000 && violations == 0,
         "no lifetime ever exceeds the per-target energy bound",
         std::to_string(g_all_trials.size()) + " trials, " + std::to_string(violations) +
             " violations" + (violations ? ", worst +" + fmt(worst) : ""));
}

void criterion_coverage_invariant() {
  long bad_rounds = 0;
  for (const auto& t : g_all_trials) bad_rounds += t.coverage_violations;
  report(bad_rounds == 0, "every scheduled round covers all coverable targets",
         std::to_string(g_all_trials.size()) + " trials, " + std::to_string(bad_rounds) +
             " uncovered rounds");
}

void criterion_small_instance_oracle() {
  std::mt19937_64 rng(20240615);
  int violations = 0;
  for (int i = 0; i < 100; ++i) {
    const int n = 3 + static_cast<int>(uniform_below(rng, 8));   // 3..10 sensors
    const int m = 2 + static_cast<int>(uniform_below(rng, 5));   // 2..6 targets
    const double range = 100 + 200 * uniform_unit(rng);
    const Deployment d = deploy_random(500, n, m, range, 2 * range, rng);
    const std::vector<double> batteries(static_cast<std::size_t>(n), 1.0);
    const double greedy = greedy_msc_schedule(d, batteries, 0.2, 1.0).total_lifetime;
    const int disjoint = exhaustive_max_disjoint_covers(d);
    if (greedy + 1e-9 < static_cast<double>(disjoint)) ++violations;
  }
  report(violations == 0, "greedy with reuse never loses to the exact disjoint optimum",
         "100 instances, " + std::to_string(violations) + " violations");
}

void criterion_numeric_suite() {
  bool spot_ok = true;
  auto near = [](double a, double b) { return std::abs(a - b) <= 1e-12; };
  {
    AutomatonState s;
    s.p = {0.5, 0.5};
    s.params = LearningParams{0.1, 0.1, Scheme::RewardPenalty};
    const auto r = apply_reward(s, Action::Active);
    spot_ok = spot_ok && near(r.p[0], 0.55) && near(r.p[1], 0.45);

    AutomatonState t;
    t.p = {0.8, 0.2};
    t.params = LearningParams{0.1, 0.1, Scheme::RewardPenalty};
    const auto p = apply_penalty(t, Action::Active);
    spot_ok = spot_ok && near(p.p[0], 0.72) && near(p.p[1], 0.28);

    AutomatonState u;
    u.p = {0.5, 0.5};
    u.params = LearningParams{0.5, 0.5, Scheme::RewardPenalty};
    const auto q = apply_penalty(u, Action::Active);
    spot_ok = spot_ok && near(q.p[0], 0.25) && near(q.p[1], 0.75);

    AutomatonState fixed;
    fixed.p = {1.0, 0.0};
    fixed.params = LearningParams{0.3, 0.3, Scheme::RewardPenalty};
    const auto f = apply_reward(fixed, Action::Active);
    spot_ok = spot_ok && f.p[0] == 1.0 && f.p[1] == 0.0;

    AutomatonState lri;
    lri.p = {0.8, 0.2};
    lri.params = LearningParams{0.1, 0.0, Scheme::RewardInaction};
    const auto idle = apply_penalty(lri, Action::Active);
    spot_ok = spot_ok && idle.p[0] == 0.8 && idle.p[1] == 0.2;
  }

  std::mt19937_64 rng(31415);
  double worst = 0.0;
  bool in_range = true;
  for (int seq = 0; seq < 10000; ++seq) {
    const double a = 0.01 + 0.98 * uniform_unit(rng);
    const LearningParams params = seq % 4 == 0 ? LearningParams{a, 0.0, Scheme::RewardInaction}
                                               : LearningParams{a, a, Scheme::RewardPenalty};
    AutomatonState s = make_automaton(params);
    for (int step = 0; step < 10000; ++step) {
      const Action chosen = uniform_unit(rng) < 0.5 ? Action::Active : Action::Idle;
      const auto signal = uniform_unit(rng) < 0.5 ? Reinforcement::Reward : Reinforcement::Penalty;
      s = update(s, chosen, signal);
    }
    worst = std::max(worst, std::abs(s.p[0] + s.p[1] - 1.0));
    in_range = in_range && s.p[0] >= 0.0 && s.p[0] <= 1.0 && s.p[1] >= 0.0 && s.p[1] <= 1.0;
  }

  long simplex_violations = 0;
  for (const auto& t : g_all_trials) simplex_violations += t.simplex_violations;

  report(spot_ok && in_range && worst <= 1e-12 && simplex_violations == 0,
         "probability updates match the linear rules and conserve the simplex",
         "worst drift " + fmt(worst) + " over 1e4 sequences of 1e4 updates, " +
             std::to_string(simplex_violations) + " end-to-end violations");
}

int run_command(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  if (WIFEXITED(status)) return WEXITSTATUS(status);
  return -1;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void criterion_determinism(const std::string& bin) {
  const fs::path dir = fs::temp_directory_path() / "lamlsim_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);

  const fs::path config = dir / "config.json";
  {
    std::ofstream out(config);
    out << R"({"n_sensors": 16, "n_targets": 10, "sensing_range": 220,
               "trials": 8, "master_seed": 2718})";
  }

  bool ok = true;
  std::string detail;

  const std::string base = bin + " run --config " + config.string() + " --seed 99 --out ";
  ok &= run_command(base + (dir / "r1.csv").string()) == 0;
  ok &= run_command(base + (dir / "r2.csv").string()) == 0;
  const bool run_identical = slurp(dir / "r1.csv") == slurp(dir / "r2.csv");
  ok &= run_identical;
  detail += std::string("repeated run ") + (run_identical ? "identical" : "DIFFERS");

  const fs::path j1 = dir / "j1";
  const fs::path j8 = dir / "j8";
  ok &= run_command(bin + " sweep --preset fig3a --jobs 1 --out " + j1.string() +
                    " 2>/dev/null") == 0;
  ok &= run_command(bin + " sweep --preset fig3a --jobs 8 --out " + j8.string() +
                    " 2>/dev/null") == 0;
  const bool sweep_identical = slurp(j1 / "fig3a.csv") == slurp(j8 / "fig3a.csv") &&
                               !slurp(j1 / "fig3a.csv").empty();
  ok &= sweep_identical;
  detail += std::string(", jobs 1 vs 8 ") + (sweep_identical ? "identical" : "DIFFERS");

  fs::remove_all(dir);
  report(ok, "identical seeds give byte-identical csv, any worker count", detail);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance_tests <path-to-lamlsim>\n";
    return 2;
  }

  criterion_range_trend();
  criterion_laml_vs_greedy();
  criterion_size_trend();
  criterion_learning_rate();
  criterion_oracle_bound();
  criterion_coverage_invariant();
  criterion_small_instance_oracle();
  criterion_numeric_suite();
  criterion_determinism(argv[1]);

  if (g_failures == 0) {
    std::printf("acceptance: all 9 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", g_failures);
  return 1;
}
