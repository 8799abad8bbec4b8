#include "laml/deployment.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "laml/errors.hpp"
#include "laml/rng.hpp"

namespace laml {

namespace {

double squared_distance(Point2D a, Point2D b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

std::vector<std::vector<int>> compute_incidence(const std::vector<SensorSpec>& sensors,
                                                const std::vector<TargetSpec>& targets) {
  std::vector<std::vector<int>> incidence(sensors.size());
  for (const auto& s : sensors) {
    auto& row = incidence[static_cast<std::size_t>(s.id)];
    for (const auto& t : targets) {
      if (covers(s, t)) row.push_back(t.id);
    }
  }
  return incidence;
}

}  // namespace

double distance(Point2D a, Point2D b) { return std::sqrt(squared_distance(a, b)); }

bool covers(const SensorSpec& sensor, const TargetSpec& target) {
  return squared_distance(sensor.pos, target.pos) <= sensor.sensing_range * sensor.sensing_range;
}

TargetSet Deployment::covered_set(int sensor_id) const {
  TargetSet s(n_targets());
  for (int t : incidence[static_cast<std::size_t>(sensor_id)]) s.set(t);
  return s;
}

Deployment make_deployment(double area_side, std::vector<SensorSpec> sensors,
                           std::vector<TargetSpec> targets, double comm_radius) {
  std::string problems;
  auto complain = [&problems](const std::string& msg) {
    if (!problems.empty()) problems += "; ";
    problems += msg;
  };

  if (!(area_side > 0.0) || !std::isfinite(area_side)) complain("area_side must be positive");
  if (!(comm_radius > 0.0) || !std::isfinite(comm_radius)) complain("comm_radius must be positive");

  std::sort(sensors.begin(), sensors.end(),
            [](const SensorSpec& a, const SensorSpec& b) { return a.id < b.id; });
  std::sort(targets.begin(), targets.end(),
            [](const TargetSpec& a, const TargetSpec& b) { return a.id < b.id; });

  double max_range = 0.0;
  for (std::size_t i = 0; i < sensors.size(); ++i) {
    const auto& s = sensors[i];
    if (s.id != static_cast<int>(i)) {
      complain("sensor ids must be unique and dense 0..N-1");
      break;
    }
    if (!std::isfinite(s.pos.x) || !std::isfinite(s.pos.y)) complain("sensor coordinates must be finite");
    if (!(s.sensing_range > 0.0) || !std::isfinite(s.sensing_range)) {
      complain("sensing_range must be positive (sensor " + std::to_string(s.id) + ")");
    }
    max_range = std::max(max_range, s.sensing_range);
  }
  for (std::size_t j = 0; j < targets.size(); ++j) {
    const auto& t = targets[j];
    if (t.id != static_cast<int>(j)) {
      complain("target ids must be unique and dense 0..M-1");
      break;
    }
    if (!std::isfinite(t.pos.x) || !std::isfinite(t.pos.y)) complain("target coordinates must be finite");
  }
  if (problems.empty() && comm_radius < max_range) {
    complain("comm_radius must be >= every sensing range");
  }
  if (!problems.empty()) throw ConfigError("invalid deployment: " + problems);

  Deployment d;
  d.area_side = area_side;
  d.comm_radius = comm_radius;
  d.incidence = compute_incidence(sensors, targets);
  d.sensors = std::move(sensors);
  d.targets = std::move(targets);
  return d;
}

Deployment deploy_random(double area_side, int n_sensors, int n_targets, double sensing_range,
                         double comm_radius, std::mt19937_64& rng) {
  std::vector<SensorSpec> sensors;
  sensors.reserve(static_cast<std::size_t>(n_sensors));
  for (int i = 0; i < n_sensors; ++i) {
    const double x = area_side * uniform_unit(rng);
    const double y = area_side * uniform_unit(rng);
    sensors.push_back({i, {x, y}, sensing_range});
  }
  std::vector<TargetSpec> targets;
  targets.reserve(static_cast<std::size_t>(n_targets));
  for (int j = 0; j < n_targets; ++j) {
    const double x = area_side * uniform_unit(rng);
    const double y = area_side * uniform_unit(rng);
    targets.push_back({j, {x, y}});
  }
  return make_deployment(area_side, std::move(sensors), std::move(targets), comm_radius);
}

std::vector<std::vector<int>> neighbor_graph(const Deployment& d) {
  const int n = d.n_sensors();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  const double reach2 = d.comm_radius * d.comm_radius;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (squared_distance(d.sensors[static_cast<std::size_t>(i)].pos,
                           d.sensors[static_cast<std::size_t>(j)].pos) <= reach2) {
        adj[static_cast<std::size_t>(i)].push_back(j);
        adj[static_cast<std::size_t>(j)].push_back(i);
      }
    }
  }
  return adj;
}

TargetSet coverage_union(const Deployment& d, std::span<const int> sensor_ids) {
  TargetSet u(d.n_targets());
  for (int id : sensor_ids) {
    for (int t : d.incidence[static_cast<std::size_t>(id)]) u.set(t);
  }
  return u;
}

bool is_coverable(const Deployment& d, std::span<const int> alive_ids) {
  return coverage_union(d, alive_ids).count() == d.n_targets();
}

}  // namespace laml
