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

#include "record/evaluator.hpp"

namespace record {

Evaluator::Evaluator(const Netlist& n) {
  validate(n);
  auto add = [&](const std::string& name, int drv) {
    ids_.emplace(name, names_.size());
    names_.push_back(name);
    driver_.push_back(drv);
  };
  for (const auto& in : n.inputs) {
    inputs_.push_back(names_.size());
    add(in, -1);
  }
  for (size_t g = 0; g < n.gates.size(); ++g) add(n.gates[g].out, static_cast<int>(g));

  for (size_t g : topological_order(n)) {
    const Gate& gate = n.gates[g];
    Op op{gate.kind, ids_.at(gate.out), static_cast<uint32_t>(operands_.size()),
          static_cast<uint32_t>(gate.ins.size())};
    for (const auto& in : gate.ins) operands_.push_back(ids_.at(in));
    ops_.push_back(op);
  }
  for (const auto& out : n.outputs) outputs_.push_back(ids_.at(out));
}

std::optional<size_t> Evaluator::find(std::string_view wire) const {
  auto it = ids_.find(std::string(wire));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

size_t Evaluator::index(std::string_view wire) const {
  auto id = find(wire);
  if (!id) throw NetlistError("unknown wire '" + std::string(wire) + "'");
  return *id;
}

void Evaluator::run(std::span<uint64_t> v, std::span<const WireForce> forces) const {
  for (const auto& f : forces) {
    if (driver_[f.wire] < 0) v[f.wire] = (v[f.wire] & ~f.lanes) | (f.value & f.lanes);
  }
  for (const Op& op : ops_) {
    const size_t* a = operands_.data() + op.first;
    uint64_t r = 0;
    switch (op.kind) {
      case GateKind::Not:
        r = ~v[a[0]];
        break;
      case GateKind::Buf:
        r = v[a[0]];
        break;
      case GateKind::And:
      case GateKind::Nand:
        r = ~uint64_t{0};
        for (uint32_t i = 0; i < op.count; ++i) r &= v[a[i]];
        if (op.kind == GateKind::Nand) r = ~r;
        break;
      case GateKind::Or:
      case GateKind::Nor:
        for (uint32_t i = 0; i < op.count; ++i) r |= v[a[i]];
        if (op.kind == GateKind::Nor) r = ~r;
        break;
      case GateKind::Xor:
      case GateKind::Xnor:
        for (uint32_t i = 0; i < op.count; ++i) r ^= v[a[i]];
        if (op.kind == GateKind::Xnor) r = ~r;
        break;
      case GateKind::Mux2:
        r = (~v[a[0]] & v[a[1]]) | (v[a[0]] & v[a[2]]);
        break;
      case GateKind::Const0:
        r = 0;
        break;
      case GateKind::Const1:
        r = ~uint64_t{0};
        break;
    }
    for (const auto& f : forces) {
      if (f.wire == op.out) r = (r & ~f.lanes) | (f.value & f.lanes);
    }
    v[op.out] = r;
  }
}

std::vector<bool> Evaluator::run_single(const std::vector<bool>& inputs) const {
  std::vector<uint64_t> v(wire_count(), 0);
  for (size_t i = 0; i < inputs_.size() && i < inputs.size(); ++i) v[inputs_[i]] = inputs[i] ? 1 : 0;
  run(v);
  std::vector<bool> out;
  out.reserve(outputs_.size());
  for (size_t id : outputs_) out.push_back(v[id] & 1);
  return out;
}

}  // namespace record
