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

#include "record/ftrecord.hpp"

#include <map>
#include <set>
#include <unordered_map>

namespace record {

namespace {

Gate make(GateKind kind, std::string out, std::vector<std::string> ins, Zone zone = Zone::Trusted,
          std::optional<int> replica = std::nullopt) {
  return Gate{kind, std::move(out), std::move(ins), zone, replica};
}

}  // namespace

FTDesign transform_ft(const Netlist& source, const RecordConfig& cfg) {
  if (cfg.groups != 1) throw TransformError("fault-tolerant construction supports a single random bit only");
  FTDesign ft;
  ft.design = transform(source, cfg);
  PartitionedDesign& d = ft.design;
  Netlist& n = d.netlist;
  const std::string r1 = names::random_bit(1);

  std::unordered_map<std::string, std::string> map_input;
  for (const auto& x : source.inputs) {
    std::string w = x;
    if (cfg.contains(x)) {
      w = "__s." + x;
      n.gates.push_back(make(GateKind::Mux2, w, {r1, names::encoded_input(x), names::complemented_input(x)}));
    }
    map_input.emplace(x, w);
    ft.spare_inputs.push_back(w);
  }
  auto rename = [&](const std::string& w) {
    if (auto it = map_input.find(w); it != map_input.end()) return it->second;
    return names::replica_wire(FTDesign::kSpare, w);
  };
  for (const auto& g : source.gates) {
    Gate copy = make(g.kind, names::replica_wire(FTDesign::kSpare, g.out), {}, Zone::Untrusted, FTDesign::kSpare);
    for (const auto& in : g.ins) copy.ins.push_back(rename(in));
    n.gates.push_back(std::move(copy));
  }
  std::vector<std::string> spare_out;
  for (const auto& o : source.outputs) spare_out.push_back(rename(o));
  d.replica_inputs.push_back(ft.spare_inputs);
  d.replica_outputs.push_back(spare_out);

  std::vector<std::string> compares;
  for (size_t o = 0; o < source.outputs.size(); ++o) {
    const std::string& name = source.outputs[o];
    ft.selected.push_back(names::selected(name));
    compares.push_back("__cmp." + name);
    n.gates.push_back(make(GateKind::Xor, compares.back(), {spare_out[o], ft.selected.back()}));

    const std::string a = d.replica_outputs[0][o], b = d.replica_outputs[1][o], c = spare_out[o];
    const std::string v = "__v." + name;
    n.gates.push_back(make(GateKind::And, v + ".ab", {a, b}));
    n.gates.push_back(make(GateKind::And, v + ".ac", {a, c}));
    n.gates.push_back(make(GateKind::And, v + ".bc", {b, c}));
    n.gates.push_back(make(GateKind::Or, v, {v + ".ab", v + ".ac", v + ".bc"}));
    ft.voted.push_back(v);
  }
  if (compares.size() == 1) {
    ft.error = compares.front();
  } else {
    ft.error = "__err";
    n.gates.push_back(make(GateKind::Or, ft.error, compares));
  }
  n.outputs.insert(n.outputs.end(), ft.voted.begin(), ft.voted.end());
  n.outputs.push_back(ft.error);
  n.name = source.name + "_ftrecord";
  validate(n);
  return ft;
}

FTSimulator::FTSimulator(const FTDesign& d) : d_(d), ev_(d.design.netlist) {
  for (const auto& w : d.selected) selected_.push_back(ev_.index(w));
  for (const auto& w : d.voted) voted_.push_back(ev_.index(w));
  for (const auto& w : d.design.replica_outputs[FTDesign::kSpare]) spare_out_.push_back(ev_.index(w));
  error_ = ev_.index(d.error);
}

size_t FTSimulator::fault_wire(const Fault& f) const {
  if (f.replica < 0 || f.replica >= d_.design.replica_count()) {
    throw FaultError("fault names unknown replica " + std::to_string(f.replica));
  }
  const std::string wire = f.wire.starts_with("__rep") ? f.wire : names::replica_wire(f.replica, f.wire);
  auto id = ev_.find(wire);
  if (!id || ev_.driver()[*id] < 0) throw FaultError("fault names unknown wire '" + f.wire + "'");
  const Gate& g = d_.design.netlist.gates[static_cast<size_t>(ev_.driver()[*id])];
  if (g.zone != Zone::Untrusted || g.replica != f.replica) {
    throw FaultError("faults may only target untrusted wires of replica " + std::to_string(f.replica));
  }
  return *id;
}

std::vector<std::string> FTSimulator::replica_wires(int replica) const {
  const std::string prefix = names::replica_wire(replica, "");
  std::vector<std::string> out;
  for (const auto& g : d_.design.netlist.gates) {
    if (g.zone == Zone::Untrusted && g.replica == replica) out.push_back(g.out.substr(prefix.size()));
  }
  return out;
}

FTTrace FTSimulator::run(const Stimulus& stim, RngSpec rng, const FaultPlan& faults, int replay_limit) const {
  const PartitionedDesign& d = d_.design;
  if (stim.width() != d.source_inputs.size()) throw SimError("stimulus width does not match source inputs");
  if (replay_limit < 1) throw FaultError("replay limit must be at least 1");

  std::map<std::pair<size_t, int>, WireForce> plan;
  for (const auto& f : faults) {
    const size_t id = fault_wire(f);
    if (f.replay < 0) throw FaultError("fault replay index must be non-negative");
    if (!plan.emplace(std::make_pair(f.cycle, f.replay), WireForce{id, 1, f.value ? 1u : 0u}).second) {
      throw FaultError("more than one fault in cycle " + std::to_string(f.cycle));
    }
  }

  const size_t n_in = d.source_inputs.size();
  std::vector<uint64_t> v(ev_.wire_count());
  auto evaluate = [&](const std::vector<bool>& x, bool r, size_t cycle, int replay) {
    std::fill(v.begin(), v.end(), 0);
    for (size_t i = 0; i < n_in; ++i) v[ev_.input_ids()[i]] = x[i];
    v[ev_.input_ids()[n_in]] = r;
    auto it = plan.find({cycle, replay});
    if (it == plan.end()) {
      ev_.run(v);
    } else {
      ev_.run(v, std::span<const WireForce>(&it->second, 1));
    }
  };
  auto read = [&](const std::vector<size_t>& ids) {
    std::vector<bool> out;
    for (size_t id : ids) out.push_back(v[id] & 1);
    return out;
  };

  FTTrace trace;
  BitSource src(rng);
  for (size_t c = 0; c < stim.cycles; ++c) {
    const std::vector<bool> x = stim.row(c);
    const bool r = src.next();
    evaluate(x, r, c, 0);
    FTStep step{c, 1, 0, static_cast<bool>(v[error_] & 1), read(selected_), std::nullopt, x, r, false};
    if (!step.e) {
      step.committed = step.buffered;
      trace.committed.push_back(step.buffered);
      trace.steps.push_back(std::move(step));
      continue;
    }
    // Miscompare: hold the suspect output and replay the saved (x, r).
    ++trace.detections;
    trace.steps.push_back(step);
    for (int replay = 1;; ++replay) {
      evaluate(x, r, c, replay);
      FTStep rs{c, 2, replay, true, read(voted_), std::nullopt, x, r, false};
      const bool clean = !(v[error_] & 1);
      if (clean || replay >= replay_limit) {
        if (!clean) {
          rs.permanent_fault_suspected = true;
          trace.permanent_fault_suspected = true;
        }
        rs.committed = rs.buffered;
        rs.e = false;
        trace.committed.push_back(rs.buffered);
        trace.steps.push_back(std::move(rs));
        break;
      }
      trace.steps.push_back(std::move(rs));
    }
  }
  return trace;
}

FTTrace ft_simulate(const FTDesign& d, const Stimulus& stim, RngSpec rng, const FaultPlan& faults,
                    int replay_limit) {
  return FTSimulator(d).run(stim, rng, faults, replay_limit);
}

}  // namespace record
