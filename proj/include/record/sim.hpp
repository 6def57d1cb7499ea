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

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "record/bits.hpp"
#include "record/netlist.hpp"
#include "record/recordize.hpp"
#include "record/rng.hpp"

namespace record {

class SimError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Per-cycle input vectors, stored column-wise (one stream per input).
struct Stimulus {
  std::vector<BitStream> columns;
  size_t cycles = 0;

  [[nodiscard]] size_t width() const { return columns.size(); }
  [[nodiscard]] std::vector<bool> row(size_t cycle) const;

  /// One binary string per line, first character = first declared input.
  /// Blank lines and `#` comments are ignored.
  static Stimulus parse(std::string_view text, size_t width);
  /// Uniform bits from SplitMix64(seed), consumed cycle by cycle, input by input.
  static Stimulus uniform(size_t width, size_t cycles, uint64_t seed);
  static Stimulus constant(const std::vector<bool>& pattern, size_t cycles);
  static Stimulus from_rows(const std::vector<std::vector<bool>>& rows, size_t width);

  bool operator==(const Stimulus&) const = default;
};

/// Full wire valuation of every cycle, one bit stream per wire.
struct SimTrace {
  std::shared_ptr<const Netlist> netlist;
  std::vector<std::string> wires;
  std::vector<BitStream> values;
  size_t cycles = 0;
  std::vector<std::string> stimulus_inputs;  // driven by the stimulus
  std::vector<std::string> random_inputs;    // driven by the random source

  [[nodiscard]] std::optional<size_t> find(std::string_view wire) const;
  [[nodiscard]] const BitStream& wire(std::string_view wire) const;
  /// Values of all primary inputs (stimulus and random) at one cycle.
  [[nodiscard]] Assignment inputs_at(size_t cycle) const;

  std::unordered_map<std::string, size_t> index;
};

/// Plain netlist; the stimulus covers every primary input.
SimTrace simulate(const Netlist& n, const Stimulus& stim);
/// Design driven by fresh random bits every cycle: cycle c takes bits
/// [c*G, c*G + G) of the stream, in order r1..rG.
SimTrace simulate(const PartitionedDesign& d, const Stimulus& stim, RngSpec rng);
/// Same, using the design's own random source.
SimTrace simulate(const PartitionedDesign& d, const Stimulus& stim);
/// Explicit random-bit columns, one per group.
SimTrace simulate_with_random(const PartitionedDesign& d, const Stimulus& stim, const std::vector<BitStream>& r);

/// Evaluations beyond 2^22 are refused in exhaustive mode.
inline constexpr int kExhaustiveBitLimit = 22;

struct EquivalenceOptions {
  enum class Mode { Exhaustive, Sampled } mode = Mode::Exhaustive;
  size_t samples = 10000;
  uint64_t seed = 0;
};

struct Counterexample {
  Assignment inputs;
  std::vector<bool> random;
  std::vector<bool> expected;
  std::vector<bool> got;
};

struct EquivalenceResult {
  bool pass = true;
  uint64_t checked = 0;
  std::optional<Counterexample> counterexample;
};

/// Compares the design's decoded outputs with the original netlist. Exhaustive
/// mode walks combination k = (x << G) | r in increasing order, so the
/// reported counterexample is the first one in that order.
EquivalenceResult verify_equivalence(const Netlist& original, const PartitionedDesign& d,
                                     const EquivalenceOptions& opts = {});

}  // namespace record
