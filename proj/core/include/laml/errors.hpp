#pragma once

#include <stdexcept>
#include <string>

namespace laml {

// Invalid experiment configuration or malformed config/scenario file. The
// message lists every offending field. Mapped to exit code 2 by the CLI.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownPreset : public std::runtime_error {
 public:
  explicit UnknownPreset(const std::string& name)
      : std::runtime_error("unknown sweep preset: " + name) {}
};

// Exact search requested on an instance beyond the exhaustive-search guardrail.
class InstanceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by the learning phase when every node is dead; signals simulation end.
class NoAliveNodes : public std::runtime_error {
 public:
  NoAliveNodes() : std::runtime_error("no alive nodes left") {}
};

}  // namespace laml
