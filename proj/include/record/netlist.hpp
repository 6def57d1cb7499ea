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
#include <vector>

namespace record {

enum class GateKind { Not, Buf, And, Or, Nand, Nor, Xor, Xnor, Mux2, Const0, Const1 };

/// Which side of the split-manufacturing boundary a gate is built on.
enum class Zone { Trusted, Untrusted };

std::string_view kind_name(GateKind kind);
std::optional<GateKind> kind_from_name(std::string_view name);
std::string_view zone_name(Zone zone);

/// True when `n` inputs is a legal arity for `kind`.
bool arity_ok(GateKind kind, size_t n);

/// One single-output gate. MUX2 inputs are ordered (sel, a0, a1).
struct Gate {
  GateKind kind = GateKind::Buf;
  std::string out;
  std::vector<std::string> ins;
  Zone zone = Zone::Trusted;
  std::optional<int> replica;

  bool operator==(const Gate&) const = default;
};

/// A combinational module: named single-driver wires, acyclic gate graph.
/// Gates are kept in declaration order; evaluation order is derived.
struct Netlist {
  std::string name;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::vector<Gate> gates;

  bool operator==(const Netlist&) const = default;

  /// Index of the gate driving `wire`, or nullopt for inputs/unknown wires.
  [[nodiscard]] std::optional<size_t> driver_index(std::string_view wire) const;
  [[nodiscard]] bool is_input(std::string_view wire) const;
};

/// Wire name -> bit. Used for stimulus vectors and evaluation results.
using Assignment = std::map<std::string, bool, std::less<>>;

/// Parse or validation failure. `line` and `column` are 1-based, 0 when the
/// problem is not tied to a source position.
class NetlistError : public std::runtime_error {
 public:
  NetlistError(const std::string& what, int line = 0, int column = 0);
  int line = 0;
  int column = 0;
};

/// Names starting with "__" are reserved for transform-generated wires.
bool is_reserved_name(std::string_view name);
bool is_valid_wire_name(std::string_view name);

Netlist parse_netlist(std::string_view text);
std::string write_netlist(const Netlist& n);

/// Checks single-driver, arity, driven-references and acyclicity. Throws
/// NetlistError on the first problem found.
void validate(const Netlist& n);

/// Gate indices in an order where every gate follows its drivers.
/// Throws NetlistError when the graph has a cycle.
std::vector<size_t> topological_order(const Netlist& n);

/// Evaluates every output for an assignment that covers all primary inputs.
Assignment evaluate(const Netlist& n, const Assignment& inputs);

/// Inputs from a packed integer, first declared input = most significant bit.
Assignment assignment_from_bits(const std::vector<std::string>& names, uint64_t bits);
uint64_t bits_from_assignment(const std::vector<std::string>& names, const Assignment& a);

}  // namespace record
