#include "laml/set_cover.hpp"

#include <random>

#include <doctest.h>

#include "laml/errors.hpp"
#include "laml/rng.hpp"

using namespace laml;

namespace {

// sensor 0 sees both targets, sensors 1 and 2 see one target each
Deployment three_sensor_instance() {
  std::vector<SensorSpec> sensors{{0, {250, 250}, 100}, {1, {450, 250}, 100}, {2, {50, 250}, 100}};
  std::vector<TargetSpec> targets{{0, {350, 250}}, {1, {150, 250}}};
  return make_deployment(500, std::move(sensors), std::move(targets), 200);
}

std::vector<double> unit_batteries(const Deployment& d) {
  return std::vector<double>(static_cast<std::size_t>(d.n_sensors()), 1.0);
}

bool slot_covers_all(const Deployment& d, const CoverSchedule::Slot& slot) {
  return coverage_union(d, slot.cover).count() == d.n_targets();
}

}  // namespace

TEST_CASE("greedy schedule drains the strongest sensor first, then the pair") {
  const Deployment d = three_sensor_instance();
  const auto schedule = greedy_msc_schedule(d, unit_batteries(d), 0.2, 1.0);

  REQUIRE(schedule.covers.size() == 10);
  CHECK(schedule.total_lifetime == doctest::Approx(2.0));
  for (int k = 0; k < 5; ++k) CHECK(schedule.covers[k].cover == std::vector<int>{0});
  for (int k = 5; k < 10; ++k) CHECK(schedule.covers[k].cover == std::vector<int>{1, 2});
  for (const auto& slot : schedule.covers) CHECK(slot_covers_all(d, slot));
  for (double b : schedule.final_batteries) CHECK(b < 1e-9);
}

TEST_CASE("greedy schedule is empty when a target has no watcher") {
  std::vector<SensorSpec> sensors{{0, {0, 0}, 50}};
  std::vector<TargetSpec> targets{{0, {400, 400}}};
  const Deployment d = make_deployment(500, std::move(sensors), std::move(targets), 100);
  const auto schedule = greedy_msc_schedule(d, unit_batteries(d), 0.2, 1.0);
  CHECK(schedule.covers.empty());
  CHECK(schedule.total_lifetime == 0.0);
}

TEST_CASE("a single all-covering sensor runs until its battery is gone") {
  std::vector<SensorSpec> sensors{{0, {250, 250}, 200}};
  std::vector<TargetSpec> targets{{0, {300, 250}}, {1, {200, 250}}};
  const Deployment d = make_deployment(500, std::move(sensors), std::move(targets), 400);
  const auto schedule = greedy_msc_schedule(d, unit_batteries(d), 0.2, 1.0);
  CHECK(schedule.covers.size() == 5);
  CHECK(schedule.total_lifetime == doctest::Approx(1.0));
}

TEST_CASE("lifetime upper bound is the weakest target's watcher energy") {
  const Deployment d = three_sensor_instance();
  CHECK(lifetime_upper_bound(d, unit_batteries(d), 1.0) == doctest::Approx(2.0));

  std::vector<SensorSpec> sensors{{0, {0, 0}, 50}};
  std::vector<TargetSpec> targets{{0, {400, 400}}};
  const Deployment uncovered = make_deployment(500, std::move(sensors), std::move(targets), 100);
  CHECK(lifetime_upper_bound(uncovered, unit_batteries(uncovered), 1.0) == 0.0);

  // every sensor watching every target gives n units
  std::vector<SensorSpec> all;
  for (int i = 0; i < 6; ++i) all.push_back({i, {250.0 + i, 250.0}, 400});
  const Deployment clique = make_deployment(500, std::move(all), {{0, {250, 250}}}, 400);
  CHECK(lifetime_upper_bound(clique, unit_batteries(clique), 1.0) == doctest::Approx(6.0));
}

TEST_CASE("exhaustive disjoint cover search on hand instances") {
  CHECK(exhaustive_max_disjoint_covers(three_sensor_instance()) == 2);

  // only sensor 0 can cover target 1, so one cover is the best possible
  std::vector<SensorSpec> sensors{{0, {250, 250}, 150}, {1, {450, 250}, 100}};
  std::vector<TargetSpec> targets{{0, {350, 250}}, {1, {150, 250}}};
  const Deployment single = make_deployment(500, std::move(sensors), std::move(targets), 300);
  CHECK(exhaustive_max_disjoint_covers(single) == 1);

  std::vector<SensorSpec> blind{{0, {0, 0}, 10}};
  std::vector<TargetSpec> far{{0, {400, 400}}};
  const Deployment zero = make_deployment(500, std::move(blind), std::move(far), 100);
  CHECK(exhaustive_max_disjoint_covers(zero) == 0);
}

TEST_CASE("exhaustive search refuses oversized instances") {
  std::vector<SensorSpec> sensors;
  for (int i = 0; i < 16; ++i) sensors.push_back({i, {i * 10.0, 0}, 50});
  const Deployment d = make_deployment(500, std::move(sensors), {{0, {0, 0}}}, 100);
  CHECK_THROWS_AS(exhaustive_max_disjoint_covers(d), InstanceTooLarge);
}

TEST_CASE("greedy is deterministic and never beats the upper bound") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + static_cast<int>(uniform_below(rng, 10));
    const int m = 1 + static_cast<int>(uniform_below(rng, 8));
    const double range = 80 + 250 * uniform_unit(rng);
    const Deployment d = deploy_random(500, n, m, range, 2 * range, rng);

    const auto a = greedy_msc_schedule(d, unit_batteries(d), 0.2, 1.0);
    const auto b = greedy_msc_schedule(d, unit_batteries(d), 0.2, 1.0);
    REQUIRE(a.covers.size() == b.covers.size());
    for (std::size_t k = 0; k < a.covers.size(); ++k) CHECK(a.covers[k].cover == b.covers[k].cover);

    for (const auto& slot : a.covers) CHECK(slot_covers_all(d, slot));
    CHECK(a.total_lifetime <= lifetime_upper_bound(d, unit_batteries(d), 1.0) + 1e-9);
  }
}

TEST_CASE("disjoint covers times the unit battery never beat the upper bound") {
  std::mt19937_64 rng(808);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + static_cast<int>(uniform_below(rng, 8));
    const int m = 1 + static_cast<int>(uniform_below(rng, 6));
    const double range = 80 + 250 * uniform_unit(rng);
    const Deployment d = deploy_random(500, n, m, range, 2 * range, rng);
    const int covers = exhaustive_max_disjoint_covers(d);
    CHECK(static_cast<double>(covers) <= lifetime_upper_bound(d, unit_batteries(d), 1.0) + 1e-9);
  }
}

TEST_CASE("greedy with reuse matches the disjoint optimum on small instances") {
  std::mt19937_64 rng(909);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 3 + static_cast<int>(uniform_below(rng, 6));
    const int m = 2 + static_cast<int>(uniform_below(rng, 5));
    const double range = 80 + 250 * uniform_unit(rng);
    const Deployment d = deploy_random(500, n, m, range, 2 * range, rng);
    const double greedy = greedy_msc_schedule(d, unit_batteries(d), 0.2, 1.0).total_lifetime;
    const int disjoint = exhaustive_max_disjoint_covers(d);
    CHECK(greedy + 1e-9 >= static_cast<double>(disjoint));
  }
}
