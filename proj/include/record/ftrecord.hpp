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

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "record/evaluator.hpp"
#include "record/recordize.hpp"
#include "record/sim.hpp"

namespace record {

class FaultError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Replays of one cycle that may still miscompare before the run reports a
/// suspected permanent fault.
inline constexpr int kReplayLimit = 3;

/// Single-bit randomized design with a third, spare replica.
///
/// The spare reads mux(r1, t, u), so it always mirrors whichever replica the
/// output multiplexer selects. A per-output XOR compares the spare with the
/// selected output and the results are OR-ed into the error signal. A
/// majority voter per output covers replica 0, replica 1 and the spare.
struct FTDesign {
  static constexpr int kSpare = 2;

  /// Replica tables include the spare at index kSpare.
  PartitionedDesign design;
  std::vector<std::string> spare_inputs;
  std::vector<std::string> selected;
  std::vector<std::string> voted;
  std::string error;
};

/// Throws TransformError unless cfg.groups == 1.
FTDesign transform_ft(const Netlist& source, const RecordConfig& cfg);

/// Forces `wire` of `replica` to `value` for exactly one evaluation. `wire`
/// is the source-netlist name of a gate output. `replay` selects the
/// evaluation: 0 is the first pass over `cycle`, k > 0 its k-th replay.
struct Fault {
  size_t cycle = 0;
  int replica = 0;
  std::string wire;
  bool value = false;
  int replay = 0;
  bool operator==(const Fault&) const = default;
};
using FaultPlan = std::vector<Fault>;

struct FTStep {
  size_t cycle = 0;
  int phase = 1;
  int replay = 0;
  bool e = false;
  /// Output computed by this evaluation (selected path in phase 1, voter in phase 2).
  std::vector<bool> buffered;
  /// Set when this step committed the cycle's output.
  std::optional<std::vector<bool>> committed;
  std::vector<bool> x;
  bool r = false;
  bool permanent_fault_suspected = false;
};

struct FTTrace {
  std::vector<FTStep> steps;
  /// One committed output vector per stimulus cycle.
  std::vector<std::vector<bool>> committed;
  size_t detections = 0;
  bool permanent_fault_suspected = false;
};

/// Runs the two-phase protocol as a state machine, one stimulus cycle at a time:
///  phase 1: evaluate; a clean comparator commits the selected output,
///           a miscompare sets e and saves (x, r);
///  phase 2: replay the saved (x, r); commit the majority vote and clear e.
///           A replay that still miscompares is repeated, and after
///           `replay_limit` such replays the run flags a suspected permanent
///           fault and commits the vote anyway.
class FTSimulator {
 public:
  explicit FTSimulator(const FTDesign& d);

  [[nodiscard]] FTTrace run(const Stimulus& stim, RngSpec rng, const FaultPlan& faults,
                            int replay_limit = kReplayLimit) const;

  /// Design wire index that a fault targets; throws FaultError when the
  /// replica or wire is unknown or not in the untrusted zone.
  [[nodiscard]] size_t fault_wire(const Fault& f) const;

  /// Gate outputs inside one replica, by source-netlist name.
  [[nodiscard]] std::vector<std::string> replica_wires(int replica) const;

  [[nodiscard]] const Evaluator& evaluator() const { return ev_; }

 private:
  const FTDesign& d_;
  Evaluator ev_;
  std::vector<size_t> selected_, voted_, spare_out_;
  size_t error_;
};

FTTrace ft_simulate(const FTDesign& d, const Stimulus& stim, RngSpec rng, const FaultPlan& faults,
                    int replay_limit = kReplayLimit);

}  // namespace record
