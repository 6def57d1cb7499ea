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

#include "record/sim.hpp"

#include <algorithm>

#include "record/evaluator.hpp"

namespace record {

std::vector<bool> Stimulus::row(size_t cycle) const {
  std::vector<bool> r;
  r.reserve(columns.size());
  for (const auto& c : columns) r.push_back(c.get(cycle));
  return r;
}

Stimulus Stimulus::parse(std::string_view text, size_t width) {
  std::vector<std::vector<bool>> rows;
  size_t start = 0;
  int line_no = 0;
  while (start <= text.size()) {
    size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(start, nl - start);
    start = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')) line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (line.empty()) continue;
    if (line.size() != width) {
      throw SimError("stimulus line " + std::to_string(line_no) + ": width " + std::to_string(line.size()) +
                     ", expected " + std::to_string(width));
    }
    std::vector<bool> row;
    for (char c : line) {
      if (c != '0' && c != '1') throw SimError("stimulus line " + std::to_string(line_no) + ": not a binary string");
      row.push_back(c == '1');
    }
    rows.push_back(std::move(row));
  }
  return from_rows(rows, width);
}

Stimulus Stimulus::uniform(size_t width, size_t cycles, uint64_t seed) {
  Stimulus s;
  s.cycles = cycles;
  s.columns.assign(width, BitStream(cycles));
  BitSource src(RngSpec{seed});
  for (size_t c = 0; c < cycles; ++c) {
    for (size_t i = 0; i < width; ++i) s.columns[i].set(c, src.next());
  }
  return s;
}

Stimulus Stimulus::constant(const std::vector<bool>& pattern, size_t cycles) {
  Stimulus s;
  s.cycles = cycles;
  for (bool b : pattern) s.columns.emplace_back(cycles, b);
  return s;
}

Stimulus Stimulus::from_rows(const std::vector<std::vector<bool>>& rows, size_t width) {
  Stimulus s;
  s.cycles = rows.size();
  s.columns.assign(width, BitStream(rows.size()));
  for (size_t c = 0; c < rows.size(); ++c) {
    if (rows[c].size() != width) throw SimError("stimulus row width mismatch");
    for (size_t i = 0; i < width; ++i) s.columns[i].set(c, rows[c][i]);
  }
  return s;
}

std::optional<size_t> SimTrace::find(std::string_view w) const {
  auto it = index.find(std::string(w));
  if (it == index.end()) return std::nullopt;
  return it->second;
}

const BitStream& SimTrace::wire(std::string_view w) const {
  auto id = find(w);
  if (!id) throw SimError("trace has no wire '" + std::string(w) + "'");
  return values[*id];
}

Assignment SimTrace::inputs_at(size_t cycle) const {
  Assignment a;
  for (const auto& in : netlist->inputs) a[in] = wire(in).get(cycle);
  return a;
}

namespace {

// Evaluates 64 cycles per pass; column words line up with evaluator lanes.
SimTrace run_columns(const Netlist& n, const std::vector<const BitStream*>& inputs, size_t cycles) {
  Evaluator ev(n);
  SimTrace t;
  t.netlist = std::make_shared<const Netlist>(n);
  t.wires = ev.wire_names();
  t.cycles = cycles;
  t.values.assign(ev.wire_count(), BitStream(cycles));
  for (size_t w = 0; w < t.wires.size(); ++w) t.index.emplace(t.wires[w], w);

  std::vector<uint64_t> v(ev.wire_count(), 0);
  const size_t blocks = (cycles + 63) / 64;
  for (size_t b = 0; b < blocks; ++b) {
    for (size_t i = 0; i < inputs.size(); ++i) v[ev.input_ids()[i]] = inputs[i]->words()[b];
    ev.run(v);
    for (size_t w = 0; w < v.size(); ++w) t.values[w].words()[b] = v[w];
  }
  for (auto& col : t.values) col.trim();
  return t;
}

}  // namespace

SimTrace simulate(const Netlist& n, const Stimulus& stim) {
  if (stim.width() != n.inputs.size()) {
    throw SimError("stimulus width " + std::to_string(stim.width()) + " does not match " +
                   std::to_string(n.inputs.size()) + " inputs");
  }
  std::vector<const BitStream*> cols;
  for (const auto& c : stim.columns) cols.push_back(&c);
  SimTrace t = run_columns(n, cols, stim.cycles);
  t.stimulus_inputs = n.inputs;
  return t;
}

SimTrace simulate_with_random(const PartitionedDesign& d, const Stimulus& stim, const std::vector<BitStream>& r) {
  if (stim.width() != d.source_inputs.size()) {
    throw SimError("stimulus width " + std::to_string(stim.width()) + " does not match " +
                   std::to_string(d.source_inputs.size()) + " source inputs");
  }
  if (r.size() != d.random_wires.size()) throw SimError("need one random column per group");
  for (const auto& col : r) {
    if (col.size() != stim.cycles) throw SimError("random column length mismatch");
  }
  // Design inputs are the source inputs followed by __r1..__rG.
  std::vector<const BitStream*> cols;
  for (const auto& c : stim.columns) cols.push_back(&c);
  for (const auto& c : r) cols.push_back(&c);
  SimTrace t = run_columns(d.netlist, cols, stim.cycles);
  t.stimulus_inputs = d.source_inputs;
  t.random_inputs = d.random_wires;
  return t;
}

SimTrace simulate(const PartitionedDesign& d, const Stimulus& stim, RngSpec rng) {
  const size_t G = d.random_wires.size();
  std::vector<BitStream> r(G, BitStream(stim.cycles));
  BitSource src(rng);
  for (size_t c = 0; c < stim.cycles; ++c) {
    for (size_t g = 0; g < G; ++g) r[g].set(c, src.next());
  }
  return simulate_with_random(d, stim, r);
}

SimTrace simulate(const PartitionedDesign& d, const Stimulus& stim) { return simulate(d, stim, d.rng); }

EquivalenceResult verify_equivalence(const Netlist& original, const PartitionedDesign& d,
                                     const EquivalenceOptions& opts) {
  if (original.inputs != d.source_inputs) throw SimError("original inputs do not match the design's source inputs");
  if (original.outputs.size() != d.decoded_outputs.size()) throw SimError("output count mismatch");

  const Evaluator ref(original);
  const Evaluator dut(d.netlist);
  const size_t n = original.inputs.size();
  const size_t G = d.random_wires.size();
  const size_t bits = n + G;
  std::vector<size_t> decoded;
  for (const auto& z : d.decoded_outputs) decoded.push_back(dut.index(z));

  std::vector<uint64_t> rv(ref.wire_count()), dv(dut.wire_count());
  // Lane l of a block holds the combination (x, r) listed in combos[l].
  std::vector<std::pair<uint64_t, uint64_t>> combos;
  EquivalenceResult res;

  auto run_block = [&]() -> bool {
    std::fill(rv.begin(), rv.end(), 0);
    std::fill(dv.begin(), dv.end(), 0);
    for (size_t l = 0; l < combos.size(); ++l) {
      const auto [x, r] = combos[l];
      for (size_t i = 0; i < n; ++i) {
        const uint64_t bit = (x >> (n - 1 - i)) & 1;
        rv[ref.input_ids()[i]] |= bit << l;
        dv[dut.input_ids()[i]] |= bit << l;
      }
      for (size_t g = 0; g < G; ++g) dv[dut.input_ids()[n + g]] |= ((r >> g) & 1) << l;
    }
    ref.run(rv);
    dut.run(dv);
    const uint64_t live = combos.size() == 64 ? ~uint64_t{0} : ((uint64_t{1} << combos.size()) - 1);
    uint64_t bad = 0;
    for (size_t o = 0; o < decoded.size(); ++o) bad |= (rv[ref.output_ids()[o]] ^ dv[decoded[o]]) & live;
    res.checked += combos.size();
    if (bad == 0) return true;
    const int lane = std::countr_zero(bad);
    Counterexample cx;
    const auto [x, r] = combos[static_cast<size_t>(lane)];
    cx.inputs = assignment_from_bits(original.inputs, x);
    for (size_t g = 0; g < G; ++g) cx.random.push_back((r >> g) & 1);
    for (size_t o = 0; o < decoded.size(); ++o) {
      cx.expected.push_back((rv[ref.output_ids()[o]] >> lane) & 1);
      cx.got.push_back((dv[decoded[o]] >> lane) & 1);
    }
    res.pass = false;
    res.counterexample = std::move(cx);
    return false;
  };

  if (opts.mode == EquivalenceOptions::Mode::Exhaustive) {
    if (bits > static_cast<size_t>(kExhaustiveBitLimit)) {
      throw SimError("exhaustive check needs 2^" + std::to_string(bits) + " evaluations; limit is 2^" +
                     std::to_string(kExhaustiveBitLimit));
    }
    const uint64_t total = uint64_t{1} << bits;
    const uint64_t rmask = (uint64_t{1} << G) - 1;
    for (uint64_t base = 0; base < total; base += 64) {
      combos.clear();
      for (uint64_t k = base; k < std::min(total, base + 64); ++k) combos.emplace_back(k >> G, k & rmask);
      if (!run_block()) return res;
    }
    return res;
  }

  if (n > 63) throw SimError("sampled check supports at most 63 source inputs");
  BitSource src(RngSpec{opts.seed});
  for (size_t done = 0; done < opts.samples;) {
    combos.clear();
    for (; combos.size() < 64 && done < opts.samples; ++done) {
      uint64_t x = 0, r = 0;
      for (size_t i = 0; i < n; ++i) x = (x << 1) | (src.next() ? 1 : 0);
      for (size_t g = 0; g < G; ++g) r |= uint64_t{src.next()} << g;
      combos.emplace_back(x, r);
    }
    if (!run_block()) return res;
  }
  return res;
}

}  // namespace record
