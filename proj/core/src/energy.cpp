#include "laml/energy.hpp"

#include <algorithm>
#include <cassert>

namespace laml {

double tx_cost(const RadioParams& p, double bits, double distance) {
  return p.comm_scale * (p.e_elec * bits + p.eps_amp * bits * distance * distance);
}

double rx_cost(const RadioParams& p, double bits) { return p.comm_scale * p.e_elec * bits; }

double sensing_cost(double sense_rate, double duration) { return sense_rate * duration; }

DebitResult debit(Battery b, double amount) {
  assert(amount >= 0.0);
  const bool was_positive = b.residual > 0.0;
  const double actual = std::min(amount, b.residual);
  b.residual -= actual;
  if (b.residual < 0.0) b.residual = 0.0;
  return {b, was_positive && b.residual == 0.0 && actual > 0.0};
}

void EnergyLedger::charge(int sensor, EnergyCause cause, double amount) {
  Row& r = rows_[static_cast<std::size_t>(sensor)];
  switch (cause) {
    case EnergyCause::InitPhase:
      r.init_phase += amount;
      break;
    case EnergyCause::LearningComm:
      r.learning_comm += amount;
      break;
    case EnergyCause::Sensing:
      r.sensing += amount;
      break;
  }
}

double EnergyLedger::total(int sensor) const {
  const Row& r = rows_[static_cast<std::size_t>(sensor)];
  return r.init_phase + r.learning_comm + r.sensing;
}

double EnergyLedger::grand_total() const {
  double sum = 0.0;
  for (std::size_t i = 0; i < rows_.size(); ++i) sum += total(static_cast<int>(i));
  return sum;
}

}  // namespace laml
