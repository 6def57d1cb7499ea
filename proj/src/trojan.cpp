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

#include "record/trojan.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace record {

const BitStream& LeakTrace::wire(std::string_view w) const {
  auto it = index.find(std::string(w));
  if (it == index.end()) throw LeakError("wire '" + std::string(w) + "' is not visible to the Trojan");
  return values[it->second];
}

namespace {

void add_wire(LeakTrace& leak, const SimTrace& t, const std::string& w) {
  if (leak.index.contains(w)) return;
  leak.index.emplace(w, leak.wires.size());
  leak.wires.push_back(w);
  leak.values.push_back(t.wire(w));
}

}  // namespace

LeakTrace tap(const PartitionedDesign& d, const SimTrace& t, std::optional<int> replica) {
  if (replica && (*replica < 0 || *replica >= d.replica_count())) {
    throw LeakError("unknown replica index " + std::to_string(*replica));
  }
  LeakTrace leak;
  leak.cycles = t.cycles;
  for (int k = 0; k < d.replica_count(); ++k) {
    if (replica && *replica != k) continue;
    for (size_t i = 0; i < d.source_inputs.size(); ++i) {
      add_wire(leak, t, d.replica_inputs[k][i]);
      leak.carries_input.emplace(d.replica_inputs[k][i], d.source_inputs[i]);
    }
    leak.replica_outputs[k] = d.replica_outputs[k];
  }
  for (const auto& g : d.netlist.gates) {
    if (g.zone != Zone::Untrusted) continue;
    if (replica && g.replica != replica) continue;
    for (const auto& in : g.ins) add_wire(leak, t, in);
    add_wire(leak, t, g.out);
  }
  for (const auto& outs : leak.replica_outputs) {
    for (const auto& w : outs.second) add_wire(leak, t, w);
  }

  std::unordered_set<std::string> forbidden(d.random_wires.begin(), d.random_wires.end());
  for (const auto& x : d.config.subset) forbidden.insert(x);
  for (const auto& w : leak.wires) {
    if (forbidden.contains(w) || (w.starts_with("__r") && !w.starts_with("__rep"))) {
      throw std::logic_error("untrusted zone can observe '" + w + "'");
    }
  }
  return leak;
}

LeakTrace tap_plain(const SimTrace& t) {
  LeakTrace leak;
  leak.cycles = t.cycles;
  for (const auto& w : t.wires) add_wire(leak, t, w);
  for (const auto& in : t.netlist->inputs) leak.carries_input.emplace(in, in);
  leak.replica_outputs[0] = t.netlist->outputs;
  return leak;
}

double mutual_information(const BitStream& a, const BitStream& b) {
  if (a.size() != b.size()) throw LeakError("mutual information needs equal-length streams");
  if (a.empty()) throw LeakError("mutual information of empty streams");
  const double n = static_cast<double>(a.size());
  const double n11 = static_cast<double>((a & b).count());
  const double na = static_cast<double>(a.count());
  const double nb = static_cast<double>(b.count());
  const double joint[4] = {n - na - nb + n11, nb - n11, na - n11, n11};  // (a,b) = 00, 01, 10, 11
  const double pa[2] = {(n - na) / n, na / n};
  const double pb[2] = {(n - nb) / n, nb / n};
  double mi = 0;
  for (int ab = 0; ab < 4; ++ab) {
    if (joint[ab] <= 0) continue;
    const double p = joint[ab] / n;
    mi += p * std::log2(p / (pa[ab >> 1] * pb[ab & 1]));
  }
  return std::clamp(mi, 0.0, 1.0);
}

double accuracy(const BitStream& guess, const BitStream& truth) {
  if (guess.size() != truth.size()) throw LeakError("accuracy needs equal-length streams");
  if (guess.empty()) return 0;
  return static_cast<double>(agreement(guess, truth)) / static_cast<double>(guess.size());
}

GroundTruth GroundTruth::from_design(const PartitionedDesign& d, const SimTrace& t) {
  GroundTruth g;
  for (const auto& x : d.source_inputs) g.inputs.emplace_back(x, t.wire(x));
  for (size_t o = 0; o < d.source_outputs.size(); ++o) {
    g.outputs.emplace_back(d.source_outputs[o], t.wire(d.decoded_outputs[o]));
  }
  return g;
}

GroundTruth GroundTruth::from_plain(const SimTrace& t) {
  GroundTruth g;
  for (const auto& x : t.netlist->inputs) g.inputs.emplace_back(x, t.wire(x));
  for (const auto& o : t.netlist->outputs) g.outputs.emplace_back(o, t.wire(o));
  return g;
}

const BitStream& GroundTruth::input(std::string_view name) const {
  for (const auto& [n, s] : inputs) {
    if (n == name) return s;
  }
  throw LeakError("no ground truth for input '" + std::string(name) + "'");
}

namespace {

std::pair<std::string, std::string> pair_inputs(const LeakTrace& leak, const WirePair& p) {
  for (const auto* w : {&p.a, &p.b}) {
    if (!leak.contains(*w)) throw LeakError("pair references untapped wire '" + *w + "'");
    if (!leak.carries_input.contains(*w)) throw LeakError("'" + *w + "' does not carry a source input");
  }
  return {leak.carries_input.at(p.a), leak.carries_input.at(p.b)};
}

}  // namespace

LeakReport leak_report(const LeakTrace& leak, const GroundTruth& truth, const std::vector<WirePair>& pairs) {
  LeakReport rep;
  rep.cycles = leak.cycles;
  for (size_t w = 0; w < leak.wires.size(); ++w) {
    LeakReport::WireLeak entry;
    entry.wire = leak.wires[w];
    for (const auto& [name, s] : truth.inputs) entry.vs_input[name] = mutual_information(leak.values[w], s);
    for (const auto& [name, s] : truth.outputs) entry.vs_output[name] = mutual_information(leak.values[w], s);
    rep.wires.push_back(std::move(entry));
  }
  for (const auto& p : pairs) {
    auto [xa, xb] = pair_inputs(leak, p);
    const BitStream seen = leak.wire(p.a) ^ leak.wire(p.b);
    const BitStream truth_diff = truth.input(xa) ^ truth.input(xb);
    rep.pairs.push_back({p.a, p.b, mutual_information(seen, truth_diff)});
    rep.strategies.push_back(
        {"gradient(" + p.a + "," + p.b + ")", accuracy(reconstruct(leak, Gradient{{p}})[0], truth_diff)});
  }
  for (const auto& [k, outs] : leak.replica_outputs) {
    for (size_t o = 0; o < outs.size() && o < truth.outputs.size(); ++o) {
      const auto guess = reconstruct(leak, PickReplica{k, o});
      rep.strategies.push_back({"pick-replica(" + std::to_string(k) + "," + truth.outputs[o].first + ")",
                                accuracy(guess[0], truth.outputs[o].second)});
    }
  }
  for (const auto& [w, x] : leak.carries_input) {
    rep.strategies.push_back({"input-echo(" + w + ")", accuracy(leak.wire(w), truth.input(x))});
  }
  return rep;
}

LeakReport leak_report(const PartitionedDesign& d, const SimTrace& t, const std::vector<WirePair>& pairs) {
  return leak_report(tap(d, t), GroundTruth::from_design(d, t), pairs);
}

std::vector<BitStream> reconstruct(const LeakTrace& leak, const Strategy& strategy) {
  struct Visitor {
    const LeakTrace& leak;
    std::vector<BitStream> operator()(const PickReplica& s) const {
      auto it = leak.replica_outputs.find(s.replica);
      if (it == leak.replica_outputs.end()) {
        throw LeakError("replica " + std::to_string(s.replica) + " is not visible");
      }
      if (s.output >= it->second.size()) throw LeakError("output index out of range");
      return {leak.wire(it->second[s.output])};
    }
    std::vector<BitStream> operator()(const InputEcho& s) const { return {leak.wire(s.wire)}; }
    std::vector<BitStream> operator()(const Gradient& s) const {
      std::vector<BitStream> out;
      for (const auto& p : s.pairs) out.push_back(leak.wire(p.a) ^ leak.wire(p.b));
      return out;
    }
  };
  return std::visit(Visitor{leak}, strategy);
}

TriggerStats trigger_experiment(const PartitionedDesign& d, const TriggerSpec& trig, const Stimulus& stim,
                                RngSpec rng, bool exhaustive) {
  if (trig.watched.size() != trig.pattern.size()) {
    throw LeakError("trigger pattern width " + std::to_string(trig.pattern.size()) + " does not match " +
                    std::to_string(trig.watched.size()) + " watched wires");
  }
  if (d.replica_count() == 0) throw LeakError("design has no replicas");
  // Which source input each watched wire carries, and its group (0 = plain).
  std::vector<size_t> source;
  for (const auto& w : trig.watched) {
    const auto& bus = d.replica_inputs[0];
    auto it = std::find(bus.begin(), bus.end(), w);
    if (it == bus.end()) throw LeakError("'" + w + "' is not a replica-0 input wire");
    source.push_back(static_cast<size_t>(it - bus.begin()));
  }
  const int G = d.groups();
  const uint64_t rvecs = uint64_t{1} << G;

  auto fire_of = [&](const SimTrace& t) {
    BitStream fired(t.cycles, true);
    for (size_t j = 0; j < trig.watched.size(); ++j) {
      const BitStream& w = t.wire(trig.watched[j]);
      fired &= trig.pattern[j] ? w : ~w;
    }
    return fired;
  };

  TriggerStats st;
  st.exhaustive = exhaustive;
  double var = 0, mean = 0;
  for (size_t c = 0; c < stim.cycles; ++c) {
    uint64_t hits = 0;
    for (uint64_t r = 0; r < rvecs; ++r) {
      bool match = true;
      for (size_t j = 0; j < source.size() && match; ++j) {
        const std::string& x = d.source_inputs[source[j]];
        const int g = d.config.group_of(x);
        bool v = stim.columns[source[j]].get(c);
        if (g != 0) v ^= (r >> (g - 1)) & 1;
        match = v == trig.pattern[j];
      }
      hits += match;
    }
    const double p = static_cast<double>(hits) / static_cast<double>(rvecs);
    mean += p;
    var += p * (1 - p);
  }
  st.analytic_rate = stim.cycles ? mean / static_cast<double>(stim.cycles) : 0;

  if (!exhaustive) {
    st.fired = fire_of(simulate(d, stim, rng));
    st.evaluations = stim.cycles;
    st.sigma = stim.cycles ? std::sqrt(var) / static_cast<double>(stim.cycles) : 0;
  } else {
    for (uint64_t r = 0; r < rvecs; ++r) {
      std::vector<BitStream> cols;
      for (int g = 0; g < G; ++g) cols.emplace_back(stim.cycles, (r >> g) & 1);
      const BitStream f = fire_of(simulate_with_random(d, stim, cols));
      for (size_t c = 0; c < f.size(); ++c) st.fired.push_back(f.get(c));
    }
    st.evaluations = stim.cycles * rvecs;
  }
  st.rate = st.evaluations ? static_cast<double>(st.fired.count()) / static_cast<double>(st.evaluations) : 0;
  return st;
}

}  // namespace record
