#pragma once

#include <cstddef>
#include <vector>

// First-order radio energy model and per-sensor battery accounting.
// Transmitting k bits over distance d costs e_elec*k + eps_amp*k*d^2 and
// receiving k bits costs e_elec*k; the defaults are the canonical constants
// of that model. comm_scale multiplies every radio cost so communication can
// be disabled (0) or rescaled against normalized batteries.

namespace laml {

struct RadioParams {
  double e_elec = 50e-9;     // J/bit, transceiver electronics
  double eps_amp = 100e-12;  // J/bit/m^2, amplifier
  int packet_bits = 2000;    // both packet types
  double comm_scale = 1.0;   // 0 disables communication costs
};

double tx_cost(const RadioParams& p, double bits, double distance);
double rx_cost(const RadioParams& p, double bits);

// Cost of monitoring for `duration` at drain rate `sense_rate`.
double sensing_cost(double sense_rate, double duration);

struct Battery {
  double initial = 1.0;
  double residual = 1.0;
};

struct DebitResult {
  Battery battery;
  bool died = false;  // this debit drained a positive residual to zero
};

// Subtracts up to `amount`, clamping the residual at zero.
DebitResult debit(Battery b, double amount);

// Relative slack for "can this battery fund this cost" comparisons. Battery
// residuals are produced by long subtraction chains, so a residual meant to
// be exactly k*cost can sit a few ulp below it; the slack keeps such
// batteries eligible for their final activation.
inline constexpr double kActivationSlack = 1e-9;

inline bool can_afford(double residual, double cost) {
  return residual >= cost * (1.0 - kActivationSlack);
}

enum class EnergyCause { InitPhase, LearningComm, Sensing };

// Per-sensor cumulative debits split by cause. One ledger per simulation run.
class EnergyLedger {
 public:
  struct Row {
    double init_phase = 0.0;
    double learning_comm = 0.0;
    double sensing = 0.0;
  };

  EnergyLedger() = default;
  explicit EnergyLedger(std::size_t n_sensors) : rows_(n_sensors) {}

  void charge(int sensor, EnergyCause cause, double amount);

  const Row& row(int sensor) const { return rows_[static_cast<std::size_t>(sensor)]; }
  double total(int sensor) const;
  double grand_total() const;
  std::size_t size() const { return rows_.size(); }

 private:
  std::vector<Row> rows_;
};

}  // namespace laml
