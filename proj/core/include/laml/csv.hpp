#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

// Result rows and their CSV form. Doubles are printed with std::to_chars
// (shortest representation that parses back to the identical bits), so an
// emitted file reproduces the in-memory values exactly and two runs of the
// same experiment are byte-comparable.

namespace laml {

struct SweepRow {
  std::string algorithm;
  std::string preset;
  int n_sensors = 0;
  int n_targets = 0;
  double sensing_range = 0.0;
  double learning_rate = 0.0;
  double psi = 0.0;
  int trials = 0;
  double mean_lifetime = 0.0;
  double std_lifetime = 0.0;
  double min_lifetime = 0.0;
  double max_lifetime = 0.0;
  double mean_rounds = 0.0;
  double mean_learning_iters = 0.0;
  std::uint64_t master_seed = 0;
};

inline constexpr std::string_view kCsvHeader =
    "algorithm,preset,n_sensors,n_targets,sensing_range,learning_rate,psi,trials,"
    "mean_lifetime,std_lifetime,min_lifetime,max_lifetime,mean_rounds,mean_learning_iters,"
    "master_seed";

std::string format_double(double value);

std::string to_csv(std::span<const SweepRow> rows);

// Parses text produced by to_csv. Throws std::runtime_error on a malformed
// header, row, or number.
std::vector<SweepRow> parse_csv(std::string_view text);

}  // namespace laml
