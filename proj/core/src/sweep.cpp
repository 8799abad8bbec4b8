#include <vector>

#include "laml/errors.hpp"
#include "laml/experiment.hpp"

// The named experiment grids. Each preset pins a full 50-trial configuration
// per grid point (comm_scale 0, L_R-P with rate 0.1, psi 0.2, theta 0.85
// unless the grid itself varies the knob), so sweep output is reproducible
// from the preset name and master seed alone.

namespace laml {

namespace {

ExperimentConfig base_config(int n_sensors, int n_targets, double sensing_range) {
  ExperimentConfig c;
  c.n_sensors = n_sensors;
  c.n_targets = n_targets;
  c.sensing_range = sensing_range;
  return c;
}

void add_point(std::vector<SweepPoint>& points, const std::string& preset, ExperimentConfig c,
               Algorithm algorithm) {
  c.algorithm = algorithm;
  points.push_back({preset, std::move(c)});
}

std::vector<SweepPoint> grid_fig3a() {
  // sensing range 200..600 step 100, 20 sensors, 10 then 20 targets
  std::vector<SweepPoint> points;
  for (int targets : {10, 20}) {
    for (double range : {200.0, 300.0, 400.0, 500.0, 600.0}) {
      add_point(points, "fig3a", base_config(20, targets, range), Algorithm::Laml);
    }
  }
  return points;
}

std::vector<SweepPoint> grid_fig3b() {
  // two small-network series: (15 targets, range 300) and (30 targets, range 250)
  std::vector<SweepPoint> points;
  for (int sensors : {6, 8, 10, 12, 14}) {
    add_point(points, "fig3b", base_config(sensors, 15, 300.0), Algorithm::Laml);
  }
  for (int sensors : {6, 8, 10, 12, 14}) {
    add_point(points, "fig3b", base_config(sensors, 30, 250.0), Algorithm::Laml);
  }
  return points;
}

std::vector<SweepPoint> grid_fig4a() {
  std::vector<SweepPoint> points;
  for (double range : {100.0, 200.0, 300.0, 400.0, 500.0}) {
    add_point(points, "fig4a", base_config(40, 50, range), Algorithm::Laml);
  }
  return points;
}

std::vector<SweepPoint> grid_fig4b() {
  std::vector<SweepPoint> points;
  for (int sensors : {30, 40, 50, 60, 70}) {
    add_point(points, "fig4b", base_config(sensors, 50, 300.0), Algorithm::Laml);
  }
  return points;
}

std::vector<SweepPoint> grid_fig5a() {
  // head-to-head vs the greedy baseline over sensing range 200..500 step 50
  std::vector<SweepPoint> points;
  for (double range = 200.0; range <= 500.0; range += 50.0) {
    for (Algorithm algorithm : {Algorithm::Laml, Algorithm::GreedyMsc}) {
      add_point(points, "fig5a", base_config(40, 50, range), algorithm);
    }
  }
  return points;
}

std::vector<SweepPoint> grid_fig5b() {
  std::vector<SweepPoint> points;
  for (int sensors = 20; sensors <= 80; sensors += 10) {
    for (Algorithm algorithm : {Algorithm::Laml, Algorithm::GreedyMsc}) {
      add_point(points, "fig5b", base_config(sensors, 50, 300.0), algorithm);
    }
  }
  return points;
}

std::vector<SweepPoint> grid_fig6() {
  std::vector<SweepPoint> points;
  for (double rate : {0.01, 0.1, 0.2, 0.4}) {
    ExperimentConfig c = base_config(50, 25, 250.0);
    c.learning = reward_penalty(rate);
    add_point(points, "fig6", std::move(c), Algorithm::Laml);
  }
  return points;
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"fig3a", "fig3b", "fig4a", "fig4b", "fig5a", "fig5b", "fig6"};
}

std::vector<SweepPoint> preset_grid(const std::string& name) {
  if (name == "fig3a") return grid_fig3a();
  if (name == "fig3b") return grid_fig3b();
  if (name == "fig4a") return grid_fig4a();
  if (name == "fig4b") return grid_fig4b();
  if (name == "fig5a") return grid_fig5a();
  if (name == "fig5b") return grid_fig5b();
  if (name == "fig6") return grid_fig6();
  throw UnknownPreset(name);
}

}  // namespace laml
