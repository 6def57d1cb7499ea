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

#include "record/cost.hpp"

#include <algorithm>
#include <unordered_map>

namespace record {

CostModel CostModel::standard() {
  CostModel m;
  m.area = {
      {GateKind::Not, {2, 0}},  {GateKind::Buf, {4, 0}},  {GateKind::Nand, {4, 2}},   {GateKind::Nor, {4, 2}},
      {GateKind::And, {6, 2}},  {GateKind::Or, {6, 2}},   {GateKind::Xor, {8, 8}},    {GateKind::Xnor, {8, 8}},
      {GateKind::Mux2, {8, 0}}, {GateKind::Const0, {0, 0}}, {GateKind::Const1, {0, 0}},
  };
  for (const auto& [k, a] : m.area) m.delay[k] = 1;
  m.delay[GateKind::Buf] = 0;
  m.delay[GateKind::Const0] = 0;
  m.delay[GateKind::Const1] = 0;
  return m;
}

double CostModel::gate_area(const Gate& g) const {
  auto it = area.find(g.kind);
  if (it == area.end()) throw CostError("cost model has no area for " + std::string(kind_name(g.kind)));
  // Anchor at the smallest legal arity so (base) is the 1- or 2-input cost.
  const double min_arity = g.kind == GateKind::Not || g.kind == GateKind::Buf ? 1
                           : g.kind == GateKind::Mux2                         ? 3
                           : g.ins.empty()                                    ? 0
                                                                              : 2;
  return it->second.base + it->second.slope * (static_cast<double>(g.ins.size()) - min_arity);
}

double CostModel::gate_delay(const Gate& g) const {
  auto it = delay.find(g.kind);
  if (it == delay.end()) throw CostError("cost model has no delay for " + std::string(kind_name(g.kind)));
  return it->second;
}

void CostModel::check() const {
  for (GateKind k : {GateKind::Not, GateKind::Buf, GateKind::And, GateKind::Or, GateKind::Nand, GateKind::Nor,
                     GateKind::Xor, GateKind::Xnor, GateKind::Mux2, GateKind::Const0, GateKind::Const1}) {
    auto a = area.find(k);
    auto d = delay.find(k);
    if (a == area.end() || d == delay.end()) throw CostError("cost model is missing " + std::string(kind_name(k)));
    if (a->second.base < 0 || a->second.slope < 0 || d->second < 0) {
      throw CostError("negative weight for " + std::string(kind_name(k)));
    }
  }
}

double area(const Netlist& n, const CostModel& model, std::optional<Zone> zone) {
  double total = 0;
  for (const auto& g : n.gates) {
    if (!zone || g.zone == *zone) total += model.gate_area(g);
  }
  return total;
}

double depth(const Netlist& n, const CostModel& model, const std::vector<std::string>& outputs) {
  std::unordered_map<std::string_view, double> arrival;
  for (const auto& in : n.inputs) arrival[in] = 0;
  for (size_t g : topological_order(n)) {
    const Gate& gate = n.gates[g];
    double t = 0;
    for (const auto& in : gate.ins) t = std::max(t, arrival.at(in));
    arrival[gate.out] = t + model.gate_delay(gate);
  }
  double worst = 0;
  for (const auto& o : outputs.empty() ? n.outputs : outputs) {
    auto it = arrival.find(o);
    if (it == arrival.end()) throw CostError("no wire '" + o + "'");
    worst = std::max(worst, it->second);
  }
  return worst;
}

double design_depth(const PartitionedDesign& d, const CostModel& model) {
  return depth(d.netlist, model, d.encoded_outputs);
}

Switching switching(const SimTrace& t, const CostModel& model, std::optional<Zone> zone) {
  if (t.cycles < 2) throw CostError("switching needs at least two cycles");
  const Netlist& n = *t.netlist;
  std::unordered_map<std::string_view, const Gate*> driver;
  for (const auto& g : n.gates) driver.emplace(g.out, &g);

  Switching s;
  for (size_t w = 0; w < t.wires.size(); ++w) {
    auto it = driver.find(t.wires[w]);
    const Gate* g = it == driver.end() ? nullptr : it->second;
    if (zone && (!g || g->zone != *zone)) continue;
    const auto& words = t.values[w].words();
    uint64_t toggles = 0;
    // Bit i of (v ^ v>>1) compares cycle i with cycle i+1.
    for (size_t k = 0; k < words.size(); ++k) {
      uint64_t next = words[k] >> 1;
      if (k + 1 < words.size()) next |= words[k + 1] << 63;
      uint64_t diff = words[k] ^ next;
      const size_t valid = std::min<size_t>(64, t.cycles - 1 - std::min(t.cycles - 1, k * 64));
      if (valid < 64) diff &= (uint64_t{1} << valid) - 1;
      toggles += static_cast<uint64_t>(std::popcount(diff));
    }
    s.toggles += toggles;
    if (g) s.weighted_activity += static_cast<double>(toggles) * model.gate_area(*g);
  }
  s.leakage = area(n, model, zone);
  return s;
}

CostReport cost_report(const Netlist& original, const PartitionedDesign& d, const SimTrace& original_trace,
                       const SimTrace& design_trace, const CostModel& model) {
  if (original_trace.cycles != design_trace.cycles) throw CostError("traces have different lengths");
  for (const auto& x : original.inputs) {
    if (!design_trace.find(x) || original_trace.wire(x) != design_trace.wire(x)) {
      throw CostError("traces were not produced by the same stimulus");
    }
  }
  CostReport rep;
  rep.groups = d.groups();
  rep.randomized_inputs = d.config.subset.size();
  rep.extended = d.extended();

  const Switching so = switching(original_trace, model);
  const Switching sd = switching(design_trace, model);
  rep.original = {area(original, model), depth(original, model), so.weighted_activity, so.leakage};
  rep.transformed = {area(d.netlist, model), design_depth(d, model), sd.weighted_activity, sd.leakage};
  auto ratio = [](double a, double b) { return b > 0 ? a / b : 0.0; };
  rep.ratio = {ratio(rep.transformed.area, rep.original.area), ratio(rep.transformed.depth, rep.original.depth),
               ratio(rep.transformed.activity, rep.original.activity),
               ratio(rep.transformed.leakage, rep.original.leakage)};
  rep.untrusted_area = area(d.netlist, model, Zone::Untrusted);
  rep.decoded_depth = depth(d.netlist, model, d.decoded_outputs);
  return rep;
}

}  // namespace record
