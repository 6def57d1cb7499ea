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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "record/netlist.hpp"

namespace record {

/// Overrides one wire's value in selected lanes, after its driver runs.
struct WireForce {
  size_t wire = 0;
  uint64_t lanes = 0;
  uint64_t value = 0;
};

/// A netlist compiled to dense wire indices and a fixed evaluation order.
/// Each wire holds a 64-bit word so 64 independent patterns evaluate at once.
class Evaluator {
 public:
  explicit Evaluator(const Netlist& n);

  [[nodiscard]] size_t wire_count() const { return names_.size(); }
  [[nodiscard]] const std::vector<std::string>& wire_names() const { return names_; }
  [[nodiscard]] std::optional<size_t> find(std::string_view wire) const;
  [[nodiscard]] size_t index(std::string_view wire) const;
  [[nodiscard]] const std::vector<size_t>& input_ids() const { return inputs_; }
  [[nodiscard]] const std::vector<size_t>& output_ids() const { return outputs_; }

  /// Index of the gate (in the source netlist) that drives each wire, or -1.
  [[nodiscard]] const std::vector<int>& driver() const { return driver_; }

  /// `values` must have wire_count() words with the input wires filled in;
  /// every gate-driven wire is overwritten.
  void run(std::span<uint64_t> values, std::span<const WireForce> forces = {}) const;

  /// Single-pattern convenience over run().
  [[nodiscard]] std::vector<bool> run_single(const std::vector<bool>& inputs) const;

 private:
  struct Op {
    GateKind kind;
    size_t out;
    uint32_t first;  // into operands_
    uint32_t count;
  };

  std::vector<std::string> names_;
  std::unordered_map<std::string, size_t> ids_;
  std::vector<size_t> inputs_;
  std::vector<size_t> outputs_;
  std::vector<int> driver_;
  std::vector<Op> ops_;
  std::vector<size_t> operands_;
};

}  // namespace record
