#pragma once

#include <span>
#include <vector>

#include "laml/deployment.hpp"

// Centralized set-cover scheduling: the greedy maximum-set-covers baseline,
// a per-target energy upper bound on any schedule's lifetime, and an exact
// disjoint-cover search for small instances.

namespace laml {

struct CoverSchedule {
  struct Slot {
    std::vector<int> cover;  // sorted sensor ids; covers every target when scheduled
    double duration = 0.0;
  };
  std::vector<Slot> covers;
  double total_lifetime = 0.0;
  std::vector<double> final_batteries;
};

// Greedy schedule: while every target is covered by some sensor that can
// still fund a slot, build one cover by repeatedly taking the eligible
// sensor covering the most still-uncovered targets (ties: higher residual,
// then lower id), then run it for slot_duration and debit its members.
// Returns an empty schedule when the first cover is already impossible.
CoverSchedule greedy_msc_schedule(const Deployment& d, std::vector<double> batteries,
                                  double slot_duration, double sense_rate);

// min over targets of (sum of the batteries of its watchers) / sense_rate.
// No schedule that keeps every target covered can outlive this (radio costs
// aside). Returns 0 when some target has no watcher at all.
double lifetime_upper_bound(const Deployment& d, std::span<const double> batteries,
                            double sense_rate);

// Exact maximum number of pairwise-disjoint sensor subsets that each cover
// all targets, by memoized exhaustive search over sensor subsets. Guardrails:
// throws InstanceTooLarge beyond 15 sensors or 64 targets.
int exhaustive_max_disjoint_covers(const Deployment& d);

}  // namespace laml
