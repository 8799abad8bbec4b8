#include "laml/csv.hpp"

#include <charconv>
#include <stdexcept>
#include <system_error>

namespace laml {

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == sep) {
      parts.push_back(line.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

double parse_double(std::string_view field) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw std::runtime_error("csv: bad numeric field \"" + std::string(field) + "\"");
  }
  return value;
}

template <typename Int>
Int parse_int(std::string_view field) {
  Int value{};
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw std::runtime_error("csv: bad integer field \"" + std::string(field) + "\"");
  }
  return value;
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) throw std::runtime_error("csv: cannot format double");
  return std::string(buf, ptr);
}

std::string to_csv(std::span<const SweepRow> rows) {
  std::string out{kCsvHeader};
  out += '\n';
  for (const auto& r : rows) {
    out += r.algorithm;
    out += ',';
    out += r.preset;
    out += ',';
    out += std::to_string(r.n_sensors);
    out += ',';
    out += std::to_string(r.n_targets);
    out += ',';
    out += format_double(r.sensing_range);
    out += ',';
    out += format_double(r.learning_rate);
    out += ',';
    out += format_double(r.psi);
    out += ',';
    out += std::to_string(r.trials);
    out += ',';
    out += format_double(r.mean_lifetime);
    out += ',';
    out += format_double(r.std_lifetime);
    out += ',';
    out += format_double(r.min_lifetime);
    out += ',';
    out += format_double(r.max_lifetime);
    out += ',';
    out += format_double(r.mean_rounds);
    out += ',';
    out += format_double(r.mean_learning_iters);
    out += ',';
    out += std::to_string(r.master_seed);
    out += '\n';
  }
  return out;
}

std::vector<SweepRow> parse_csv(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '\n') {
      if (i > start) lines.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  if (lines.empty() || lines[0] != kCsvHeader) {
    throw std::runtime_error("csv: missing or unexpected header");
  }

  std::vector<SweepRow> rows;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto fields = split(lines[k], ',');
    if (fields.size() != 15) {
      throw std::runtime_error("csv: expected 15 fields, got " + std::to_string(fields.size()));
    }
    SweepRow r;
    r.algorithm = std::string(fields[0]);
    r.preset = std::string(fields[1]);
    r.n_sensors = parse_int<int>(fields[2]);
    r.n_targets = parse_int<int>(fields[3]);
    r.sensing_range = parse_double(fields[4]);
    r.learning_rate = parse_double(fields[5]);
    r.psi = parse_double(fields[6]);
    r.trials = parse_int<int>(fields[7]);
    r.mean_lifetime = parse_double(fields[8]);
    r.std_lifetime = parse_double(fields[9]);
    r.min_lifetime = parse_double(fields[10]);
    r.max_lifetime = parse_double(fields[11]);
    r.mean_rounds = parse_double(fields[12]);
    r.mean_learning_iters = parse_double(fields[13]);
    r.master_seed = parse_int<std::uint64_t>(fields[14]);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace laml
