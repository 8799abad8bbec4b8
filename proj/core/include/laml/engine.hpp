#pragma once

#include <random>
#include <span>
#include <utility>
#include <vector>

#include "laml/automaton.hpp"
#include "laml/deployment.hpp"
#include "laml/energy.hpp"
#include "laml/target_set.hpp"

// The distributed scheduling protocol. Each round has three phases:
//
//   initial    every node broadcasts an INITIALIZATION packet once, after
//              which it knows its neighbors and covered targets
//   learning   repeated LAP exchanges: a random node announces the action
//              its automaton sampled, the alive neighbors reply with their
//              own sampled actions, and the initiator reinforces its
//              automaton against the redundancy of its choice
//   monitoring every node whose automaton settled on ACTIVE monitors its
//              targets for psi time units; IDLE nodes sleep
//
// A node is alive while its residual battery can fund one full monitoring
// phase (activation cost psi * sense_rate); dead nodes neither reply nor
// activate. Packet payloads are never materialized, packets exist only as
// energy debits: broadcasts are charged at comm_radius, unicast replies at
// the true pairwise distance.

namespace laml {

struct NodeRuntime {
  int id = 0;
  AutomatonState automaton;
  std::vector<int> neighbors;  // sorted sensor ids
  TargetSet covered;
  Battery battery;
  bool alive = true;
};

// Record of one LAP exchange. Replies hold the alive neighbors in ascending
// id order; only the initiator's automaton is updated by the exchange.
struct LapExchange {
  int initiator = -1;
  Action initiator_action = Action::Idle;
  std::vector<std::pair<int, Action>> replies;
  Reinforcement signal = Reinforcement::Reward;
};

struct LearningOutcome {
  std::vector<int> active_set;  // sorted; includes patched members
  std::vector<int> patched;     // sorted; members added by the coverage patch
  long iterations = 0;
};

// The redundancy rule. The initiator's choice is judged against the targets
// its ACTIVE neighbors already cover:
//   ACTIVE and redundant -> penalty     ACTIVE and not redundant -> reward
//   IDLE   and redundant -> reward      IDLE   and not redundant -> penalty
// where redundant means covered is a subset of active_neighbor_cover (an
// empty covered set is vacuously redundant).
Reinforcement reinforcement_decision(Action initiator_action, const TargetSet& covered,
                                     const TargetSet& active_neighbor_cover);

// Builds the per-node runtime state from a fresh deployment and charges the
// INITIALIZATION traffic: one broadcast per node plus one receive per
// neighbor. Automata start at the uniform distribution.
std::vector<NodeRuntime> initial_phase(const Deployment& d, const LearningParams& learning,
                                       const RadioParams& radio, double initial_battery,
                                       double activation_cost, EnergyLedger& ledger);

// One LAP exchange. Draw order: initiator index among alive nodes, the
// initiator's action, then one action per alive neighbor in ascending id
// order. Throws NoAliveNodes when every node is dead.
LapExchange learning_iteration(const Deployment& d, std::vector<NodeRuntime>& nodes,
                               std::mt19937_64& rng, const RadioParams& radio,
                               double activation_cost, EnergyLedger& ledger);

// Runs LAP exchanges until every alive node has converged at `theta` and the
// nodes holding p_active >= theta cover every target the alive set can
// cover, or until max_iters exchanges have run. Unconverged nodes then take
// their argmax action (ties sleep), and the coverage patch adds the alive
// node covering the most still-uncovered targets (ties: higher residual,
// then lower id) until the active set covers everything coverable.
LearningOutcome run_learning_phase(const Deployment& d, std::vector<NodeRuntime>& nodes,
                                   double theta, long max_iters, std::mt19937_64& rng,
                                   const RadioParams& radio, double activation_cost,
                                   EnergyLedger& ledger);

// Charges each active node one monitoring phase of sensing; sleeping nodes
// pay nothing. Returns the elapsed duration (psi).
double monitoring_phase(std::vector<NodeRuntime>& nodes, std::span<const int> active_set,
                        double psi, double sense_rate, EnergyLedger& ledger);

std::vector<int> alive_ids(const std::vector<NodeRuntime>& nodes);

// Targets that the currently alive nodes can still cover.
TargetSet coverable_targets(const Deployment& d, const std::vector<NodeRuntime>& nodes);

}  // namespace laml
