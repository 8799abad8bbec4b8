#pragma once

#include <filesystem>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "laml/target_set.hpp"

// Sensor/target geometry: random deployment over a square field, the
// coverage incidence (which sensor sees which target, closed sensing disk),
// and the communication neighbor graph. A Deployment is immutable after
// construction and freely shareable across threads.

namespace laml {

struct Point2D {
  double x = 0.0;
  double y = 0.0;
};

double distance(Point2D a, Point2D b);

struct SensorSpec {
  int id = 0;
  Point2D pos;
  double sensing_range = 0.0;
};

struct TargetSpec {
  int id = 0;
  Point2D pos;
};

struct Deployment {
  double area_side = 0.0;
  std::vector<SensorSpec> sensors;
  std::vector<TargetSpec> targets;
  std::vector<std::vector<int>> incidence;  // sensor id -> sorted covered target ids
  double comm_radius = 0.0;

  int n_sensors() const { return static_cast<int>(sensors.size()); }
  int n_targets() const { return static_cast<int>(targets.size()); }

  TargetSet covered_set(int sensor_id) const;
};

// True when the target lies within the sensor's closed sensing disk.
bool covers(const SensorSpec& sensor, const TargetSpec& target);

// Validates the specs (dense unique ids, finite coordinates, positive ranges,
// comm_radius >= every sensing range) and computes the incidence.
// Throws ConfigError on violations.
Deployment make_deployment(double area_side, std::vector<SensorSpec> sensors,
                           std::vector<TargetSpec> targets, double comm_radius);

// Scatters sensors and targets i.i.d. uniformly over [0, area_side)^2.
// Draw order (part of the determinism contract): sensors in id order, then
// targets in id order, x before y, each coordinate = area_side * u with one
// uniform_unit draw.
Deployment deploy_random(double area_side, int n_sensors, int n_targets, double sensing_range,
                         double comm_radius, std::mt19937_64& rng);

// Symmetric irreflexive adjacency: i ~ j iff their distance is <= comm_radius.
std::vector<std::vector<int>> neighbor_graph(const Deployment& d);

// Union of the covered target sets of the given sensors.
TargetSet coverage_union(const Deployment& d, std::span<const int> sensor_ids);

// True iff every target is covered by at least one of the given sensors.
bool is_coverable(const Deployment& d, std::span<const int> alive_ids);

// Scenario files: fixed geometry as JSON,
//   { "area_side": L, "comm_radius": C,
//     "sensors": [{"id":0,"x":..,"y":..,"range":..}, ...],
//     "targets": [{"id":0,"x":..,"y":..}, ...] }
// Unknown keys are rejected. The incidence is recomputed on load.
Deployment parse_scenario(std::string_view json_text);
Deployment load_scenario(const std::filesystem::path& path);
std::string scenario_to_json(const Deployment& d);

}  // namespace laml
