// Copyright 2026 The record-netlist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "record/bits.hpp"
#include "record/recordize.hpp"
#include "record/sim.hpp"

namespace record {

class LeakError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// What a passive, always-on Trojan in the untrusted zone records: every
/// untrusted gate output and every wire crossing into a replica, per cycle.
struct LeakTrace {
  std::vector<std::string> wires;
  std::vector<BitStream> values;
  size_t cycles = 0;
  /// Replica input wires and the source input each one encodes.
  std::map<std::string, std::string> carries_input;
  /// Output wires of each visible replica, indexed by source output.
  std::map<int, std::vector<std::string>> replica_outputs;

  [[nodiscard]] bool contains(std::string_view wire) const { return index.contains(std::string(wire)); }
  [[nodiscard]] const BitStream& wire(std::string_view wire) const;

  std::unordered_map<std::string, size_t> index;
};

/// Projects a trace onto the untrusted zone. With `replica` set, only that
/// replica's gates and boundary wires are kept (one Trojan per die).
/// Throws LeakError for an unknown replica; throws std::logic_error if the
/// projection would expose a random bit or a raw randomized input.
LeakTrace tap(const PartitionedDesign& d, const SimTrace& t, std::optional<int> replica = std::nullopt);

/// An unprotected netlist: the Trojan sees every wire, and each primary
/// input carries itself.
LeakTrace tap_plain(const SimTrace& t);

/// Plug-in estimate of I(A;B) in bits from the 2x2 joint histogram.
double mutual_information(const BitStream& a, const BitStream& b);

/// Fraction of cycles where the guess matches the truth.
double accuracy(const BitStream& guess, const BitStream& truth);

struct WirePair {
  std::string a;
  std::string b;
  bool operator==(const WirePair&) const = default;
};

/// Ground-truth streams the leak is scored against.
struct GroundTruth {
  std::vector<std::pair<std::string, BitStream>> inputs;
  std::vector<std::pair<std::string, BitStream>> outputs;

  /// Source inputs from the stimulus, true outputs from the decoded wires.
  static GroundTruth from_design(const PartitionedDesign& d, const SimTrace& t);
  static GroundTruth from_plain(const SimTrace& t);
  [[nodiscard]] const BitStream& input(std::string_view name) const;
};

struct LeakReport {
  struct WireLeak {
    std::string wire;
    std::map<std::string, double> vs_input;
    std::map<std::string, double> vs_output;
  };
  struct PairLeak {
    std::string a;
    std::string b;
    double mi = 0;
  };
  struct Score {
    std::string name;
    double accuracy = 0;
  };
  size_t cycles = 0;
  std::vector<WireLeak> wires;
  std::vector<PairLeak> pairs;
  std::vector<Score> strategies;
};

/// Per-wire MI against every input and true output, per-pair MI of
/// (w_a ^ w_b) against (x_a ^ x_b), and the accuracy of each built-in
/// attacker strategy. Metrics are meaningful from about 10^4 uniform cycles.
LeakReport leak_report(const LeakTrace& leak, const GroundTruth& truth, const std::vector<WirePair>& pairs);
LeakReport leak_report(const PartitionedDesign& d, const SimTrace& t, const std::vector<WirePair>& pairs);

/// Attacker strategies.
struct PickReplica {
  int replica = 0;
  size_t output = 0;
};
struct InputEcho {
  std::string wire;
};
struct Gradient {
  std::vector<WirePair> pairs;
};
using Strategy = std::variant<PickReplica, InputEcho, Gradient>;

/// PickReplica guesses a true output from one replica's output; InputEcho
/// guesses x_i from its encoded wire; Gradient guesses x_a ^ x_b as w_a ^ w_b
/// (one stream per pair).
std::vector<BitStream> reconstruct(const LeakTrace& leak, const Strategy& strategy);

/// Fires when the watched replica-0 input bus equals `pattern`.
struct TriggerSpec {
  std::vector<std::string> watched;
  std::vector<bool> pattern;
};

struct TriggerStats {
  BitStream fired;
  size_t evaluations = 0;
  double rate = 0;
  /// Mean over cycles of (#r vectors mapping that cycle's x onto the pattern) / 2^G.
  double analytic_rate = 0;
  /// Binomial standard deviation of `rate` around `analytic_rate`; 0 when exhaustive.
  double sigma = 0;
  bool exhaustive = false;
};

/// Sampled mode draws r from `rng`; exhaustive mode evaluates every cycle
/// under all 2^G random vectors.
TriggerStats trigger_experiment(const PartitionedDesign& d, const TriggerSpec& trig, const Stimulus& stim,
                                RngSpec rng, bool exhaustive = false);

}  // namespace record
