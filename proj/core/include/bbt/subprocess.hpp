#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bbt/algorithmic.hpp"

namespace bbt {

/// Harness for a real black-box process speaking the line protocol: one
/// decimal input per line on stdin, one decimal output per line on
/// stdout. Each scheduled input runs in its own child process so that a
/// diverging computation on one input cannot block another.
struct SubprocessConfig {
  std::vector<std::string> command;  // argv; command[0] is the executable
  std::vector<int> inputs;           // the input schedule
  int quantum_ms = 10;               // wall-clock budget per step
};

/// Each step advances one pending exchange by one quantum, round-robin
/// over the schedule. A completed exchange (i, o) yields the observation
/// "{(i,o)}". An exchange that never answers stays pending forever;
/// divergence is never reported as absence. Throws SpawnFailure or
/// ProtocolViolation.
std::unique_ptr<Enumerator> subprocess_enumerator(SubprocessConfig config);

}  // namespace bbt
