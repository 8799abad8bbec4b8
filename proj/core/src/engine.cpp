#include "laml/engine.hpp"

#include <algorithm>
#include <cassert>

#include "laml/errors.hpp"
#include "laml/rng.hpp"

namespace laml {

namespace {

// All battery movement funnels through here so the ledger never diverges
// from the batteries.
void drain(NodeRuntime& node, EnergyCause cause, double amount, double activation_cost,
           EnergyLedger& ledger) {
  const double before = node.battery.residual;
  node.battery = debit(node.battery, amount).battery;
  ledger.charge(node.id, cause, before - node.battery.residual);
  node.alive = can_afford(node.battery.residual, activation_cost);
}

bool takes_active(const NodeRuntime& node) {
  // Argmax with the tie at 0.5 sleeping; for a theta-converged node this
  // coincides with p_active >= theta.
  return p_active(node.automaton) > 0.5;
}

// a \ b over the shared universe.
TargetSet set_minus(const TargetSet& a, const TargetSet& b) {
  TargetSet out(a.universe());
  for (int t = 0; t < a.universe(); ++t) {
    if (a.test(t) && !b.test(t)) out.set(t);
  }
  return out;
}

}  // namespace

Reinforcement reinforcement_decision(Action initiator_action, const TargetSet& covered,
                                     const TargetSet& active_neighbor_cover) {
  const bool redundant = covered.is_subset_of(active_neighbor_cover);
  if (initiator_action == Action::Active) {
    return redundant ? Reinforcement::Penalty : Reinforcement::Reward;
  }
  return redundant ? Reinforcement::Reward : Reinforcement::Penalty;
}

std::vector<NodeRuntime> initial_phase(const Deployment& d, const LearningParams& learning,
                                       const RadioParams& radio, double initial_battery,
                                       double activation_cost, EnergyLedger& ledger) {
  const auto adjacency = neighbor_graph(d);
  const int n = d.n_sensors();

  std::vector<NodeRuntime> nodes;
  nodes.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    NodeRuntime node;
    node.id = i;
    node.automaton = make_automaton(learning);
    node.neighbors = adjacency[static_cast<std::size_t>(i)];
    node.covered = d.covered_set(i);
    node.battery = {initial_battery, initial_battery};
    nodes.push_back(std::move(node));
  }

  const double bits = static_cast<double>(radio.packet_bits);
  const double broadcast = tx_cost(radio, bits, d.comm_radius);
  const double receive = rx_cost(radio, bits);
  for (auto& node : nodes) {
    drain(node, EnergyCause::InitPhase, broadcast, activation_cost, ledger);
  }
  for (auto& node : nodes) {
    for (std::size_t k = 0; k < node.neighbors.size(); ++k) {
      drain(node, EnergyCause::InitPhase, receive, activation_cost, ledger);
    }
  }
  return nodes;
}

namespace {

// Reusable buffers; one exchange per iteration makes these the hot
// allocations of a whole simulation.
struct ExchangeScratch {
  std::vector<std::pair<int, Action>> replies;
  TargetSet active_cover;
};

void run_exchange(const Deployment& d, std::vector<NodeRuntime>& nodes, std::mt19937_64& rng,
                  const RadioParams& radio, double activation_cost, EnergyLedger& ledger,
                  ExchangeScratch& scratch, LapExchange* record) {
  std::size_t n_alive = 0;
  for (const auto& node : nodes) n_alive += node.alive ? 1 : 0;
  if (n_alive == 0) throw NoAliveNodes();

  // k-th alive node in id order; matches indexing into the sorted alive list.
  std::uint64_t k = uniform_below(rng, n_alive);
  int initiator_id = -1;
  for (const auto& node : nodes) {
    if (node.alive && k-- == 0) {
      initiator_id = node.id;
      break;
    }
  }
  NodeRuntime& initiator = nodes[static_cast<std::size_t>(initiator_id)];
  const Action initiator_action = select_action(initiator.automaton, rng);

  scratch.replies.clear();
  if (scratch.active_cover.universe() != d.n_targets()) {
    scratch.active_cover = TargetSet(d.n_targets());
  } else {
    scratch.active_cover.clear();
  }
  const bool keep_replies = record != nullptr || radio.comm_scale != 0.0;
  for (int nb : initiator.neighbors) {
    const NodeRuntime& neighbor = nodes[static_cast<std::size_t>(nb)];
    if (!neighbor.alive) continue;
    const Action reply = select_action(neighbor.automaton, rng);
    if (keep_replies) scratch.replies.emplace_back(nb, reply);
    if (reply == Action::Active) scratch.active_cover |= neighbor.covered;
  }

  const Reinforcement signal =
      reinforcement_decision(initiator_action, initiator.covered, scratch.active_cover);
  initiator.automaton = update(initiator.automaton, initiator_action, signal);

  // LAP traffic: the initiator broadcasts and hears one reply per alive
  // neighbor; each of those neighbors hears the broadcast and answers with a
  // unicast at the true pairwise distance.
  if (radio.comm_scale != 0.0) {
    const double bits = static_cast<double>(radio.packet_bits);
    const Point2D initiator_pos = d.sensors[static_cast<std::size_t>(initiator_id)].pos;
    drain(initiator, EnergyCause::LearningComm, tx_cost(radio, bits, d.comm_radius),
          activation_cost, ledger);
    const double receive = rx_cost(radio, bits);
    for (const auto& [nb, reply] : scratch.replies) {
      (void)reply;
      NodeRuntime& neighbor = nodes[static_cast<std::size_t>(nb)];
      drain(neighbor, EnergyCause::LearningComm, receive, activation_cost, ledger);
      const double reply_dist = distance(initiator_pos, d.sensors[static_cast<std::size_t>(nb)].pos);
      drain(neighbor, EnergyCause::LearningComm, tx_cost(radio, bits, reply_dist), activation_cost,
            ledger);
      drain(initiator, EnergyCause::LearningComm, receive, activation_cost, ledger);
    }
  }

  if (record != nullptr) {
    record->initiator = initiator_id;
    record->initiator_action = initiator_action;
    record->replies = scratch.replies;
    record->signal = signal;
  }
}

}  // namespace

LapExchange learning_iteration(const Deployment& d, std::vector<NodeRuntime>& nodes,
                               std::mt19937_64& rng, const RadioParams& radio,
                               double activation_cost, EnergyLedger& ledger) {
  ExchangeScratch scratch;
  LapExchange exchange;
  run_exchange(d, nodes, rng, radio, activation_cost, ledger, scratch, &exchange);
  return exchange;
}

LearningOutcome run_learning_phase(const Deployment& d, std::vector<NodeRuntime>& nodes,
                                   double theta, long max_iters, std::mt19937_64& rng,
                                   const RadioParams& radio, double activation_cost,
                                   EnergyLedger& ledger) {
  auto phase_done = [&]() {
    for (const auto& node : nodes) {
      if (node.alive && !converged(node.automaton, theta)) return false;
    }
    TargetSet coverable(d.n_targets());
    TargetSet induced(d.n_targets());
    for (const auto& node : nodes) {
      if (!node.alive) continue;
      coverable |= node.covered;
      if (p_active(node.automaton) >= theta) induced |= node.covered;
    }
    return coverable.is_subset_of(induced);
  };

  LearningOutcome out;
  ExchangeScratch scratch;
  while (out.iterations < max_iters && !phase_done()) {
    run_exchange(d, nodes, rng, radio, activation_cost, ledger, scratch, nullptr);
    ++out.iterations;
  }

  std::vector<char> active(nodes.size(), 0);
  for (const auto& node : nodes) {
    if (node.alive && takes_active(node)) {
      active[static_cast<std::size_t>(node.id)] = 1;
      out.active_set.push_back(node.id);
    }
  }
  TargetSet uncovered =
      set_minus(coverable_targets(d, nodes), coverage_union(d, out.active_set));

  // Coverage patch: wake the most useful sleeping node until nothing
  // coverable is missing. Terminates because each pick covers >= 1 target.
  while (!uncovered.none()) {
    int best = -1;
    int best_gain = 0;
    double best_residual = 0.0;
    for (const auto& node : nodes) {
      if (!node.alive || active[static_cast<std::size_t>(node.id)]) continue;
      int gain = 0;
      for (int t : d.incidence[static_cast<std::size_t>(node.id)]) {
        if (uncovered.test(t)) ++gain;
      }
      if (gain == 0) continue;
      const bool better =
          best == -1 || gain > best_gain ||
          (gain == best_gain && node.battery.residual > best_residual);
      if (better) {
        best = node.id;
        best_gain = gain;
        best_residual = node.battery.residual;
      }
    }
    assert(best >= 0 && "uncovered target without an alive watcher");
    active[static_cast<std::size_t>(best)] = 1;
    out.active_set.push_back(best);
    out.patched.push_back(best);
    uncovered = set_minus(uncovered, nodes[static_cast<std::size_t>(best)].covered);
  }

  std::sort(out.active_set.begin(), out.active_set.end());
  std::sort(out.patched.begin(), out.patched.end());
  return out;
}

double monitoring_phase(std::vector<NodeRuntime>& nodes, std::span<const int> active_set,
                        double psi, double sense_rate, EnergyLedger& ledger) {
  const double cost = sensing_cost(sense_rate, psi);
  for (int id : active_set) {
    drain(nodes[static_cast<std::size_t>(id)], EnergyCause::Sensing, cost, cost, ledger);
  }
  return psi;
}

std::vector<int> alive_ids(const std::vector<NodeRuntime>& nodes) {
  std::vector<int> ids;
  for (const auto& node : nodes) {
    if (node.alive) ids.push_back(node.id);
  }
  return ids;
}

TargetSet coverable_targets(const Deployment& d, const std::vector<NodeRuntime>& nodes) {
  TargetSet u(d.n_targets());
  for (const auto& node : nodes) {
    if (node.alive) u |= node.covered;
  }
  return u;
}

}  // namespace laml
