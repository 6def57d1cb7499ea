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
#include <vector>

#include "record/netlist.hpp"
#include "record/recordize.hpp"
#include "record/sim.hpp"

namespace record {

class CostError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Synthesis-free cost proxies. Area of a k-input gate is
/// base + slope * (k - k_min) transistor-equivalents, k_min being the
/// smallest legal arity of its kind; delay is per gate.
struct CostModel {
  struct Area {
    double base = 0;
    double slope = 0;
    bool operator==(const Area&) const = default;
  };
  std::map<GateKind, Area> area;
  std::map<GateKind, double> delay;

  /// NOT 2, BUF 4, NAND/NOR 2k, AND/OR 2k+2, XOR/XNOR 8(k-1), MUX2 8, CONST 0;
  /// unit delay except BUF and CONST.
  static CostModel standard();

  [[nodiscard]] double gate_area(const Gate& g) const;
  [[nodiscard]] double gate_delay(const Gate& g) const;
  /// Throws CostError on a negative weight or a missing kind.
  void check() const;

  bool operator==(const CostModel&) const = default;
};

double area(const Netlist& n, const CostModel& model, std::optional<Zone> zone = std::nullopt);

/// Longest weighted input-to-output path. `outputs` restricts the sinks;
/// empty means every declared output.
double depth(const Netlist& n, const CostModel& model, const std::vector<std::string>& outputs = {});

/// Depth of the randomized block as exported: inputs to the encoded outputs
/// (f ^ r1). The consumer-side decode adds one more XOR level.
double design_depth(const PartitionedDesign& d, const CostModel& model);

struct Switching {
  uint64_t toggles = 0;
  /// Sum over wires of toggles * area of the driving gate.
  double weighted_activity = 0;
  /// Static-power stand-in: transistor-equivalent area.
  double leakage = 0;
};

/// Counts 0<->1 transitions between consecutive cycles. Needs >= 2 cycles.
Switching switching(const SimTrace& t, const CostModel& model, std::optional<Zone> zone = std::nullopt);

/// Published synthesis ratios for the AES S-box at one random bit; informational only.
struct PublishedReference {
  static constexpr double area = 2.4;
  static constexpr double dynamic_power = 3.4;
  static constexpr double leakage_power = 2.19;
  static constexpr double delay_increase_max = 0.11;
};

struct CostReport {
  struct Proxy {
    double area = 0;
    double depth = 0;
    double activity = 0;
    double leakage = 0;
  };
  Proxy original;
  Proxy transformed;
  Proxy ratio;
  double untrusted_area = 0;
  double decoded_depth = 0;
  int groups = 1;
  size_t randomized_inputs = 0;
  bool extended = false;
  std::string label =
      "proxy estimates (transistor-count area, unit-delay depth, toggle-weighted activity); "
      "not synthesis results";
};

/// Both traces must come from the same stimulus.
CostReport cost_report(const Netlist& original, const PartitionedDesign& d, const SimTrace& original_trace,
                       const SimTrace& design_trace, const CostModel& model = CostModel::standard());

}  // namespace record
