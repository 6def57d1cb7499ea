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

#include <gtest/gtest.h>

#include "record/fixtures.hpp"

namespace record {
namespace {

const CostModel kStd = CostModel::standard();

Gate gate(GateKind k, size_t arity) {
  Gate g{k, "o", {}, Zone::Trusted, std::nullopt};
  for (size_t i = 0; i < arity; ++i) g.ins.push_back("i" + std::to_string(i));
  return g;
}

CostReport report(const Netlist& src, const RecordConfig& cfg, size_t cycles = 2000, uint64_t seed = 0) {
  const PartitionedDesign d = transform(src, cfg);
  const Stimulus stim = Stimulus::uniform(src.inputs.size(), cycles, seed + 1);
  return cost_report(src, d, simulate(src, stim), simulate(d, stim, RngSpec{seed}));
}

TEST(Area, WeightTable) {
  EXPECT_EQ(area(fixtures::inverter(), kStd), 2);
  EXPECT_EQ(area(fixtures::and2(), kStd), 6);
  EXPECT_EQ(kStd.gate_area(gate(GateKind::And, 3)), 8);
  EXPECT_EQ(kStd.gate_area(gate(GateKind::Nand, 2)), 4);
  EXPECT_EQ(kStd.gate_area(gate(GateKind::Nor, 4)), 8);
  EXPECT_EQ(kStd.gate_area(gate(GateKind::Xor, 2)), 8);
  EXPECT_EQ(kStd.gate_area(gate(GateKind::Xnor, 3)), 16);
  EXPECT_EQ(kStd.gate_area(gate(GateKind::Mux2, 3)), 8);
  EXPECT_EQ(kStd.gate_area(gate(GateKind::Buf, 1)), 4);
  EXPECT_EQ(kStd.gate_area(gate(GateKind::Const1, 0)), 0);
  EXPECT_NO_THROW(kStd.check());
}

TEST(Area, ZoneFilterAndReplicaArithmetic) {
  for (auto kind : {"and-tree-8", "maj9", "adder4", "aes-sbox"}) {
    const Netlist src = fixtures::generate(kind);
    for (int G = 1; G <= 3; ++G) {
      const PartitionedDesign d = transform(src, RecordConfig::all_inputs(src, G));
      EXPECT_DOUBLE_EQ(area(d.netlist, kStd, Zone::Untrusted), double(1 << G) * area(src, kStd)) << kind;
      EXPECT_DOUBLE_EQ(area(d.netlist, kStd, Zone::Untrusted) + area(d.netlist, kStd, Zone::Trusted),
                       area(d.netlist, kStd));
    }
  }
}

TEST(Depth, UnitDelay) {
  EXPECT_EQ(depth(fixtures::inverter(), kStd), 1);
  EXPECT_EQ(depth(fixtures::and_tree(8), kStd), 3);
  EXPECT_EQ(depth(parse_netlist("module b\ninput a\noutput y\nbuf w a\nnot y w\nend"), kStd), 1);
  EXPECT_THROW(depth(fixtures::and2(), kStd, {"nope"}), CostError);
}

TEST(Depth, TransformAddsThreeOrFourLevels) {
  for (auto kind : {"and-tree-8", "maj9", "adder4", "aes-sbox", "inverter", "and2"}) {
    const Netlist src = fixtures::generate(kind);
    const double base = depth(src, kStd);
    for (int G = 1; G <= std::min<int>(2, int(src.inputs.size())); ++G) {
      const PartitionedDesign d = transform(src, RecordConfig::all_inputs(src, G));
      EXPECT_EQ(design_depth(d, kStd) - base, G == 1 ? 3 : 4) << kind << " G=" << G;
      EXPECT_EQ(depth(d.netlist, kStd, d.decoded_outputs), design_depth(d, kStd) + 1);
    }
  }
}

TEST(Switching, ConstantInputsDoNotToggle) {
  const Netlist src = fixtures::maj9();
  const PartitionedDesign d = transform(src, RecordConfig::all_inputs(src, 1));
  const Stimulus stim = Stimulus::constant(std::vector<bool>(9, true), 300);
  const SimTrace t = simulate_with_random(d, stim, {BitStream(300, true)});
  EXPECT_EQ(switching(t, kStd).toggles, 0u);
  EXPECT_EQ(switching(t, kStd).weighted_activity, 0);
  EXPECT_THROW(switching(simulate(src, Stimulus::constant(std::vector<bool>(9, true), 1)), kStd), CostError);
}

TEST(Switching, CountsTransitions) {
  const Netlist inv = fixtures::inverter();
  const SimTrace t = simulate(inv, Stimulus::parse("0\n1\n1\n0\n1\n", 1));
  // a: 0 1 1 0 1 -> 3 toggles, y likewise.
  const Switching s = switching(t, kStd);
  EXPECT_EQ(s.toggles, 6u);
  EXPECT_EQ(s.weighted_activity, 3 * 2);
  EXPECT_EQ(s.leakage, 2);
  // Across word boundaries.
  BitStream alt;
  for (int i = 0; i < 200; ++i) alt.push_back(i % 2);
  Stimulus st;
  st.columns = {alt};
  st.cycles = 200;
  EXPECT_EQ(switching(simulate(inv, st), kStd).toggles, 2u * 199u);
}

TEST(Switching, RandomizationRaisesActivity) {
  const CostReport r = report(fixtures::maj9(), RecordConfig::all_inputs(fixtures::maj9(), 1));
  EXPECT_GT(r.transformed.activity, r.original.activity);
}

TEST(Report, AesRatiosAndLabel) {
  const Netlist aes = fixtures::aes_sbox();
  const CostReport r1 = report(aes, RecordConfig::all_inputs(aes, 1));
  EXPECT_GE(r1.ratio.area, 2.0);
  EXPECT_LE(r1.ratio.area, 3.0);
  EXPECT_GE(r1.ratio.leakage, 2.0);
  EXPECT_LE(r1.ratio.leakage, 3.0);
  EXPECT_DOUBLE_EQ(r1.untrusted_area, 2 * r1.original.area);
  EXPECT_NE(r1.label.find("proxy"), std::string::npos);
  EXPECT_FALSE(r1.extended);
  const CostReport r2 = report(aes, RecordConfig::all_inputs(aes, 2));
  EXPECT_GE(r2.ratio.area, 4.0);
  EXPECT_LE(r2.ratio.area, 5.5);
  EXPECT_TRUE(report(aes, RecordConfig::all_inputs(aes, 3)).extended);
}

TEST(Report, LargerSubsetNeverCheaper) {
  const Netlist aes = fixtures::aes_sbox();
  std::vector<std::string> subset;
  CostReport prev;
  for (size_t i = 0; i < aes.inputs.size(); ++i) {
    subset.push_back(aes.inputs[i]);
    const CostReport r = report(aes, RecordConfig::checkerboard(aes, subset, 1));
    if (i > 0) {
      EXPECT_GT(r.ratio.area, prev.ratio.area) << i;
      EXPECT_GE(r.ratio.leakage, prev.ratio.leakage);
      EXPECT_GE(r.ratio.depth, prev.ratio.depth);
    }
    prev = r;
  }
  const CostReport half = report(aes, RecordConfig::checkerboard(aes, {"x7", "x5", "x3", "x1"}, 1));
  const CostReport all = report(aes, RecordConfig::all_inputs(aes, 1));
  EXPECT_LT(half.ratio.area, all.ratio.area);
}

// Replica activity is the same in expectation whichever inputs are encoded,
// so the activity step is the encoder pair alone; on the small fixtures that
// step is large enough to resolve over 20k cycles.
TEST(Report, LargerSubsetNeverLessActive) {
  for (auto kind : {"maj9", "adder4"}) {
    const Netlist src = fixtures::generate(kind);
    std::vector<std::string> subset;
    double prev = 0;
    for (const auto& x : src.inputs) {
      subset.push_back(x);
      const double a = report(src, RecordConfig::checkerboard(src, subset, 1), 20000).ratio.activity;
      EXPECT_GE(a, prev) << kind << " |S|=" << subset.size();
      prev = a;
    }
  }
}

TEST(Report, RejectsMismatchedTraces) {
  const Netlist maj = fixtures::maj9();
  const PartitionedDesign d = transform(maj, RecordConfig::all_inputs(maj, 1));
  const SimTrace a = simulate(maj, Stimulus::uniform(9, 100, 1));
  EXPECT_THROW(cost_report(maj, d, a, simulate(d, Stimulus::uniform(9, 100, 2), RngSpec{})), CostError);
  EXPECT_THROW(cost_report(maj, d, a, simulate(d, Stimulus::uniform(9, 50, 1), RngSpec{})), CostError);
}

TEST(Model, CheckCatchesBadWeights) {
  CostModel m = kStd;
  m.area[GateKind::Xor].slope = -1;
  EXPECT_THROW(m.check(), CostError);
  CostModel missing = kStd;
  missing.delay.erase(GateKind::Mux2);
  EXPECT_THROW(missing.check(), CostError);
}

}  // namespace
}  // namespace record
