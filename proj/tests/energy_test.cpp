#include "laml/energy.hpp"

#include <random>

#include <doctest.h>

#include "laml/rng.hpp"

using namespace laml;

TEST_CASE("transmit cost follows the first-order radio model") {
  RadioParams p;  // 50 nJ/bit, 100 pJ/bit/m^2, comm_scale 1
  CHECK(tx_cost(p, 2000, 100) == doctest::Approx(2.1e-3).epsilon(1e-12));
  CHECK(tx_cost(p, 2000, 0) == doctest::Approx(1.0e-4).epsilon(1e-12));

  RadioParams off = p;
  off.comm_scale = 0.0;
  CHECK(tx_cost(off, 2000, 100) == 0.0);
  CHECK(rx_cost(off, 2000) == 0.0);

  RadioParams doubled = p;
  doubled.comm_scale = 2.0;
  CHECK(tx_cost(doubled, 2000, 100) == doctest::Approx(2.0 * tx_cost(p, 2000, 100)));
}

TEST_CASE("receive cost is the electronics term only") {
  RadioParams p;
  CHECK(rx_cost(p, 2000) == doctest::Approx(1.0e-4).epsilon(1e-12));
  CHECK(rx_cost(p, 0) == 0.0);
}

TEST_CASE("transmit cost is monotone in bits and distance") {
  RadioParams p;
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const double bits = 4000 * uniform_unit(rng);
    const double d = 600 * uniform_unit(rng);
    CHECK(tx_cost(p, bits + 1, d) >= tx_cost(p, bits, d));
    CHECK(tx_cost(p, bits, d + 1) >= tx_cost(p, bits, d));
  }
}

TEST_CASE("sensing cost is rate times duration") {
  CHECK(sensing_cost(1.0, 0.2) == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(sensing_cost(0.5, 0.2) == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(sensing_cost(1.0, 0.0) == 0.0);
}

TEST_CASE("debit clamps at zero and reports the death transition") {
  const auto partial = debit(Battery{1.0, 1.0}, 0.2);
  CHECK(partial.battery.residual == doctest::Approx(0.8));
  CHECK_FALSE(partial.died);

  const auto drained = debit(Battery{1.0, 0.1}, 0.2);
  CHECK(drained.battery.residual == 0.0);
  CHECK(drained.died);

  const auto idle = debit(Battery{1.0, 0.5}, 0.0);
  CHECK(idle.battery.residual == 0.5);
  CHECK_FALSE(idle.died);

  const auto already_dead = debit(Battery{1.0, 0.0}, 0.2);
  CHECK(already_dead.battery.residual == 0.0);
  CHECK_FALSE(already_dead.died);
}

TEST_CASE("can_afford tolerates subtraction drift at exact multiples") {
  // 1.0 minus four monitoring debits of 0.2 lands a few ulp away from 0.2;
  // the fifth activation must still be affordable.
  Battery b{1.0, 1.0};
  for (int i = 0; i < 4; ++i) b = debit(b, 0.2).battery;
  CHECK(can_afford(b.residual, 0.2));
  b = debit(b, 0.2).battery;
  CHECK_FALSE(can_afford(b.residual, 0.2));
  CHECK(b.residual < 1e-12);
}

TEST_CASE("ledger buckets the debits by cause and balances against the battery") {
  EnergyLedger ledger(2);
  Battery b{1.0, 1.0};
  std::mt19937_64 rng(23);
  double charged = 0.0;
  for (int i = 0; i < 5000; ++i) {
    const double amount = 3e-4 * uniform_unit(rng);
    const double before = b.residual;
    b = debit(b, amount).battery;
    const double actual = before - b.residual;
    const auto cause = i % 3 == 0   ? EnergyCause::InitPhase
                       : i % 3 == 1 ? EnergyCause::LearningComm
                                    : EnergyCause::Sensing;
    ledger.charge(0, cause, actual);
    charged += actual;
  }
  CHECK(ledger.total(0) == doctest::Approx(b.initial - b.residual).epsilon(1e-12));
  CHECK(ledger.total(1) == 0.0);
  CHECK(ledger.grand_total() == doctest::Approx(charged).epsilon(1e-12));
  const auto& row = ledger.row(0);
  CHECK(row.init_phase + row.learning_comm + row.sensing == doctest::Approx(ledger.total(0)));
}
