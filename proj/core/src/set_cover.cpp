#include "laml/set_cover.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <string>

#include "laml/energy.hpp"
#include "laml/errors.hpp"

namespace laml {

CoverSchedule greedy_msc_schedule(const Deployment& d, std::vector<double> batteries,
                                  double slot_duration, double sense_rate) {
  assert(batteries.size() == static_cast<std::size_t>(d.n_sensors()));
  const int n = d.n_sensors();
  const int m = d.n_targets();
  const double slot_cost = sensing_cost(sense_rate, slot_duration);

  CoverSchedule schedule;
  if (m == 0) {  // degenerate: nothing to cover, nothing to schedule
    schedule.final_batteries = std::move(batteries);
    return schedule;
  }

  std::vector<TargetSet> covered;
  covered.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) covered.push_back(d.covered_set(i));

  auto eligible = [&](int i) { return can_afford(batteries[static_cast<std::size_t>(i)], slot_cost); };

  auto all_targets_coverable = [&]() {
    TargetSet u(m);
    for (int i = 0; i < n; ++i) {
      if (!eligible(i)) continue;
      for (int t : d.incidence[static_cast<std::size_t>(i)]) u.set(t);
    }
    return u.count() == m;
  };

  while (all_targets_coverable()) {
    CoverSchedule::Slot slot;
    slot.duration = slot_duration;
    std::vector<char> in_cover(static_cast<std::size_t>(n), 0);
    TargetSet uncovered(m);
    for (int t = 0; t < m; ++t) uncovered.set(t);

    while (!uncovered.none()) {
      int best = -1;
      int best_gain = 0;
      double best_residual = 0.0;
      for (int i = 0; i < n; ++i) {
        if (in_cover[static_cast<std::size_t>(i)] || !eligible(i)) continue;
        int gain = 0;
        for (int t : d.incidence[static_cast<std::size_t>(i)]) {
          if (uncovered.test(t)) ++gain;
        }
        if (gain == 0) continue;
        const double residual = batteries[static_cast<std::size_t>(i)];
        const bool better = best == -1 || gain > best_gain ||
                            (gain == best_gain && residual > best_residual);
        if (better) {
          best = i;
          best_gain = gain;
          best_residual = residual;
        }
      }
      assert(best >= 0 && "coverable loop invariant violated");
      in_cover[static_cast<std::size_t>(best)] = 1;
      slot.cover.push_back(best);
      TargetSet still(m);
      for (int t = 0; t < m; ++t) {
        if (uncovered.test(t) && !covered[static_cast<std::size_t>(best)].test(t)) still.set(t);
      }
      uncovered = still;
    }

    std::sort(slot.cover.begin(), slot.cover.end());
    for (int i : slot.cover) {
      double& b = batteries[static_cast<std::size_t>(i)];
      b -= std::min(slot_cost, b);
    }
    schedule.covers.push_back(std::move(slot));
  }

  schedule.total_lifetime = static_cast<double>(schedule.covers.size()) * slot_duration;
  schedule.final_batteries = std::move(batteries);
  return schedule;
}

double lifetime_upper_bound(const Deployment& d, std::span<const double> batteries,
                            double sense_rate) {
  assert(batteries.size() == static_cast<std::size_t>(d.n_sensors()));
  const int m = d.n_targets();
  if (m == 0) return 0.0;

  std::vector<double> watcher_energy(static_cast<std::size_t>(m), 0.0);
  for (int i = 0; i < d.n_sensors(); ++i) {
    for (int t : d.incidence[static_cast<std::size_t>(i)]) {
      watcher_energy[static_cast<std::size_t>(t)] += batteries[static_cast<std::size_t>(i)];
    }
  }
  double bound = watcher_energy[0];
  for (double e : watcher_energy) bound = std::min(bound, e);
  return bound / sense_rate;
}

int exhaustive_max_disjoint_covers(const Deployment& d) {
  const int n = d.n_sensors();
  const int m = d.n_targets();
  if (n > 15) {
    throw InstanceTooLarge("exhaustive disjoint-cover search is limited to 15 sensors, got " +
                           std::to_string(n));
  }
  if (m > 64) {
    throw InstanceTooLarge("exhaustive disjoint-cover search is limited to 64 targets, got " +
                           std::to_string(m));
  }
  if (m == 0) return 0;

  const std::uint32_t n_masks = std::uint32_t{1} << n;
  const std::uint64_t full = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;

  std::vector<std::uint64_t> sensor_bits(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int t : d.incidence[static_cast<std::size_t>(i)]) {
      sensor_bits[static_cast<std::size_t>(i)] |= std::uint64_t{1} << t;
    }
  }

  // coverage of every sensor subset, built incrementally from the lowest bit
  std::vector<std::uint64_t> subset_cover(n_masks, 0);
  for (std::uint32_t mask = 1; mask < n_masks; ++mask) {
    const int low = std::countr_zero(mask);
    subset_cover[mask] = subset_cover[mask & (mask - 1)] | sensor_bits[static_cast<std::size_t>(low)];
  }

  std::vector<int> memo(n_masks, -1);
  auto search = [&](auto&& self, std::uint32_t available) -> int {
    int& entry = memo[available];
    if (entry >= 0) return entry;
    if (subset_cover[available] != full) return entry = 0;
    int best = 1;  // `available` itself is a cover
    for (std::uint32_t sub = available; sub != 0; sub = (sub - 1) & available) {
      if (subset_cover[sub] == full) {
        best = std::max(best, 1 + self(self, available & ~sub));
      }
    }
    return entry = best;
  };
  return search(search, n_masks - 1);
}

}  // namespace laml
