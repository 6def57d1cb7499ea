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

#include "record/recordize.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace record {

namespace names {
std::string random_bit(int group) { return "__r" + std::to_string(group); }
std::string encoded_input(std::string_view x) { return "__t." + std::string(x); }
std::string complemented_input(std::string_view x) { return "__u." + std::string(x); }
std::string replica_wire(int k, std::string_view wire) { return "__rep" + std::to_string(k) + "." + std::string(wire); }
std::string selected(std::string_view output) { return "__m." + std::string(output); }
std::string encoded_output(std::string_view output) { return "__y." + std::string(output); }
std::string decoded_output(std::string_view output) { return "__z." + std::string(output); }
}  // namespace names

RecordConfig RecordConfig::checkerboard(const Netlist& source, std::vector<std::string> subset, int groups) {
  RecordConfig cfg;
  cfg.groups = groups;
  for (const auto& x : subset) {
    auto it = std::find(source.inputs.begin(), source.inputs.end(), x);
    if (it == source.inputs.end()) throw TransformError("'" + x + "' is not an input of " + source.name);
    if (groups > 0) cfg.assignment[x] = static_cast<int>((it - source.inputs.begin()) % groups) + 1;
  }
  cfg.subset = std::move(subset);
  return cfg;
}

RecordConfig RecordConfig::all_inputs(const Netlist& source, int groups) {
  return checkerboard(source, source.inputs, groups);
}

void RecordConfig::check(const Netlist& source) const {
  if (subset.empty()) throw TransformError("randomized input subset is empty");
  if (groups < 1) throw TransformError("need at least one random bit");
  if (groups > kMaxGroups) throw TransformError("at most " + std::to_string(kMaxGroups) + " random bits supported");
  std::set<std::string> seen;
  std::vector<bool> used(static_cast<size_t>(groups) + 1, false);
  for (const auto& x : subset) {
    if (!source.is_input(x)) throw TransformError("'" + x + "' is not an input of " + source.name);
    if (!seen.insert(x).second) throw TransformError("'" + x + "' listed twice in the subset");
    auto it = assignment.find(x);
    if (it == assignment.end()) throw TransformError("'" + x + "' has no group assignment");
    if (it->second < 1 || it->second > groups) throw TransformError("'" + x + "' assigned to a group out of range");
    used[static_cast<size_t>(it->second)] = true;
  }
  for (const auto& [x, g] : assignment) {
    if (!seen.contains(x)) throw TransformError("assignment names '" + x + "', which is not in the subset");
  }
  for (int g = 1; g <= groups; ++g) {
    if (!used[static_cast<size_t>(g)]) throw TransformError("group " + std::to_string(g) + " has no inputs");
  }
}

int RecordConfig::group_of(std::string_view input) const {
  auto it = assignment.find(std::string(input));
  return it == assignment.end() ? 0 : it->second;
}

namespace {

Gate make(GateKind kind, std::string out, std::vector<std::string> ins, Zone zone = Zone::Trusted,
          std::optional<int> replica = std::nullopt) {
  return Gate{kind, std::move(out), std::move(ins), zone, replica};
}

void reject_reserved(const Netlist& n) {
  auto bad = [](const std::string& w) {
    if (is_reserved_name(w)) throw TransformError("wire '" + w + "' uses the reserved '__' prefix");
  };
  for (const auto& w : n.inputs) bad(w);
  for (const auto& w : n.outputs) bad(w);
  for (const auto& g : n.gates) bad(g.out);
}

}  // namespace

PartitionedDesign transform(const Netlist& source, const RecordConfig& cfg) {
  validate(source);
  reject_reserved(source);
  cfg.check(source);

  const int G = cfg.groups;
  const int replicas = 1 << G;

  PartitionedDesign d;
  d.config = cfg;
  d.source_inputs = source.inputs;
  d.source_outputs = source.outputs;
  Netlist& out = d.netlist;
  out.name = source.name + "_record";
  out.inputs = source.inputs;
  for (int g = 1; g <= G; ++g) {
    d.random_wires.push_back(names::random_bit(g));
    out.inputs.push_back(d.random_wires.back());
  }

  // Encode stage. The complemented copy is a single XNOR so every replica
  // input sits one trusted level after the primary inputs.
  for (const auto& x : source.inputs) {
    const int g = cfg.group_of(x);
    if (g == 0) continue;
    out.gates.push_back(make(GateKind::Xor, names::encoded_input(x), {x, names::random_bit(g)}));
    out.gates.push_back(make(GateKind::Xnor, names::complemented_input(x), {x, names::random_bit(g)}));
  }

  std::unordered_set<std::string> driven;
  for (const auto& g : source.gates) driven.insert(g.out);

  for (int k = 0; k < replicas; ++k) {
    std::unordered_map<std::string, std::string> map_input;
    std::vector<std::string> ins;
    for (const auto& x : source.inputs) {
      const int g = cfg.group_of(x);
      std::string w = x;
      if (g != 0) w = ((k >> (g - 1)) & 1) ? names::complemented_input(x) : names::encoded_input(x);
      map_input.emplace(x, w);
      ins.push_back(std::move(w));
    }
    auto rename = [&](const std::string& w) {
      if (auto it = map_input.find(w); it != map_input.end()) return it->second;
      return names::replica_wire(k, w);
    };
    for (const auto& g : source.gates) {
      Gate copy = make(g.kind, names::replica_wire(k, g.out), {}, Zone::Untrusted, k);
      for (const auto& in : g.ins) copy.ins.push_back(rename(in));
      out.gates.push_back(std::move(copy));
    }
    std::vector<std::string> outs;
    for (const auto& o : source.outputs) outs.push_back(rename(o));
    d.replica_inputs.push_back(std::move(ins));
    d.replica_outputs.push_back(std::move(outs));
  }

  for (size_t o = 0; o < source.outputs.size(); ++o) {
    const std::string& name = source.outputs[o];
    // Select bits from r_1 (root) down to r_G (leaves); `bits` holds the
    // complement pattern chosen so far.
    std::function<std::string(int, int)> build = [&](int g, int bits) -> std::string {
      if (g > G) return d.replica_outputs[static_cast<size_t>(bits)][o];
      const std::string a0 = build(g + 1, bits);
      const std::string a1 = build(g + 1, bits | (1 << (g - 1)));
      std::string w = names::selected(name);
      if (g > 1) {
        w += ".";
        for (int j = 1; j < g; ++j) w += ((bits >> (j - 1)) & 1) ? '1' : '0';
      }
      out.gates.push_back(make(GateKind::Mux2, w, {names::random_bit(g), a0, a1}));
      return w;
    };
    const std::string m = build(1, 0);
    out.gates.push_back(make(GateKind::Xor, names::encoded_output(name), {m, names::random_bit(1)}));
    d.encoded_outputs.push_back(names::encoded_output(name));
  }
  for (const auto& name : source.outputs) {
    out.gates.push_back(
        make(GateKind::Xor, names::decoded_output(name), {names::encoded_output(name), names::random_bit(1)}));
    d.decoded_outputs.push_back(names::decoded_output(name));
  }
  out.outputs = d.encoded_outputs;
  out.outputs.insert(out.outputs.end(), d.decoded_outputs.begin(), d.decoded_outputs.end());
  validate(out);
  return d;
}

std::vector<ClosureViolation> partition_check(const PartitionedDesign& d) {
  std::unordered_set<std::string> forbidden(d.random_wires.begin(), d.random_wires.end());
  for (const auto& x : d.config.subset) forbidden.insert(x);
  std::vector<ClosureViolation> out;
  for (const auto& g : d.netlist.gates) {
    if (g.zone != Zone::Untrusted) continue;
    for (const auto& in : g.ins) {
      if (forbidden.contains(in)) out.push_back({g.out, in});
    }
  }
  return out;
}

Netlist user_view(const PartitionedDesign& d) {
  Netlist n = d.netlist;
  n.name = d.netlist.name + "_user";
  n.outputs = d.decoded_outputs;
  return n;
}

PartitionedDesign rekey(const PartitionedDesign& d, RngSpec rng) {
  PartitionedDesign out = d;
  out.rng = rng;
  return out;
}

std::string untrusted_zone_text(const Netlist& n) {
  Netlist zone;
  zone.name = "untrusted";
  for (const auto& g : n.gates) {
    if (g.zone == Zone::Untrusted) zone.gates.push_back(g);
  }
  return write_netlist(zone);
}

PartitionedDesign recover_design(const Netlist& n) {
  validate(n);
  PartitionedDesign d;
  d.netlist = n;
  std::unordered_map<std::string_view, const Gate*> by_out;
  for (const auto& g : n.gates) by_out.emplace(g.out, &g);

  for (const auto& in : n.inputs) {
    if (!is_reserved_name(in)) {
      d.source_inputs.push_back(in);
    } else if (in.starts_with("__r")) {
      d.random_wires.push_back(in);
    } else {
      throw TransformError("unexpected reserved input '" + in + "'");
    }
  }
  const int G = static_cast<int>(d.random_wires.size());
  if (G == 0) throw TransformError(n.name + " has no __r inputs; not a transformed design");
  for (int g = 1; g <= G; ++g) {
    if (d.random_wires[static_cast<size_t>(g - 1)] != names::random_bit(g)) {
      throw TransformError("random inputs must be __r1..__r" + std::to_string(G) + " in order");
    }
  }
  d.config.groups = G;
  for (const auto& x : d.source_inputs) {
    auto it = by_out.find(names::encoded_input(x));
    if (it == by_out.end()) continue;
    const Gate& enc = *it->second;
    int group = 0;
    for (const auto& in : enc.ins) {
      for (int g = 1; g <= G; ++g) {
        if (in == names::random_bit(g)) group = g;
      }
    }
    if (group == 0) throw TransformError("encoder for '" + x + "' reads no random bit");
    d.config.subset.push_back(x);
    d.config.assignment[x] = group;
  }
  for (const auto& o : n.outputs) {
    if (o.starts_with("__y.")) {
      d.encoded_outputs.push_back(o);
      d.source_outputs.push_back(o.substr(4));
    } else if (o.starts_with("__z.")) {
      d.decoded_outputs.push_back(o);
    }
  }
  if (d.decoded_outputs.empty() || d.decoded_outputs.size() != d.source_outputs.size()) {
    throw TransformError("design outputs must pair each __y.<o> with a __z.<o>");
  }
  for (size_t o = 0; o < d.source_outputs.size(); ++o) {
    if (d.decoded_outputs[o] != names::decoded_output(d.source_outputs[o])) {
      throw TransformError("decoded output order does not match encoded outputs");
    }
  }
  for (int k = 0; k < (1 << G); ++k) {
    std::vector<std::string> ins;
    for (const auto& x : d.source_inputs) {
      const int g = d.config.group_of(x);
      ins.push_back(g == 0 ? x
                           : (((k >> (g - 1)) & 1) ? names::complemented_input(x) : names::encoded_input(x)));
    }
    std::vector<std::string> outs;
    for (const auto& o : d.source_outputs) {
      const std::string w = names::replica_wire(k, o);
      if (by_out.contains(w)) {
        outs.push_back(w);
      } else {
        auto it = std::find(d.source_inputs.begin(), d.source_inputs.end(), o);
        if (it == d.source_inputs.end()) throw TransformError("replica " + std::to_string(k) + " lacks output " + o);
        outs.push_back(ins[static_cast<size_t>(it - d.source_inputs.begin())]);
      }
    }
    d.replica_inputs.push_back(std::move(ins));
    d.replica_outputs.push_back(std::move(outs));
  }
  return d;
}

}  // namespace record
