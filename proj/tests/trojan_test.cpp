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

#include <gtest/gtest.h>

#include <cmath>

#include "record/fixtures.hpp"
#include "record/rng.hpp"

namespace record {
namespace {

PartitionedDesign design_of(const Netlist& n, int G) { return transform(n, RecordConfig::all_inputs(n, G)); }

BitStream from_string(std::string_view s) {
  BitStream b;
  for (char c : s) b.push_back(c == '1');
  return b;
}

// Entropy bookkeeping done the long way: I = H(A) + H(B) - H(A,B).
double mi_oracle(const BitStream& a, const BitStream& b) {
  double cnt[2][2] = {};
  for (size_t i = 0; i < a.size(); ++i) cnt[a.get(i)][b.get(i)] += 1;
  const double n = double(a.size());
  auto h = [](std::initializer_list<double> ps) {
    double s = 0;
    for (double p : ps) {
      if (p > 0) s -= p * std::log2(p);
    }
    return s;
  };
  const double ha = h({(cnt[0][0] + cnt[0][1]) / n, (cnt[1][0] + cnt[1][1]) / n});
  const double hb = h({(cnt[0][0] + cnt[1][0]) / n, (cnt[0][1] + cnt[1][1]) / n});
  const double hab = h({cnt[0][0] / n, cnt[0][1] / n, cnt[1][0] / n, cnt[1][1] / n});
  return ha + hb - hab;
}

TEST(MutualInformation, IdenticalAndComplement) {
  BitStream a;
  for (int i = 0; i < 1000; ++i) a.push_back(i % 2);
  EXPECT_DOUBLE_EQ(mutual_information(a, a), 1.0);
  EXPECT_DOUBLE_EQ(mutual_information(a, ~a), 1.0);
}

TEST(MutualInformation, IndependentStreams) {
  const BitStream a = rng_bits(RngSpec{1}, 100000);
  const BitStream b = rng_bits(RngSpec{2}, 100000);
  const double mi = mutual_information(a, b);
  EXPECT_LT(mi, 0.01);
  // Expected plug-in bias is 1 / (2 n ln 2); stay within a few multiples.
  EXPECT_LT(mi, 10.0 / (2 * 100000 * std::log(2.0)));
}

TEST(MutualInformation, MatchesEntropyIdentity) {
  EXPECT_DOUBLE_EQ(mutual_information(from_string("1111"), from_string("0101")), 0.0);
  EXPECT_NEAR(mutual_information(from_string("0001"), from_string("0001")), 0.8112781244591328, 1e-12);
  for (uint64_t s = 0; s < 20; ++s) {
    const BitStream a = rng_bits(RngSpec{s}, 257);
    const BitStream b = a & rng_bits(RngSpec{s + 100}, 257);
    EXPECT_NEAR(mutual_information(a, b), mi_oracle(a, b), 1e-9);
  }
  EXPECT_THROW(mutual_information(from_string("01"), from_string("0")), LeakError);
}

TEST(Tap, AllReplicasAndIsolation) {
  const Netlist src = fixtures::maj9();
  const PartitionedDesign d = design_of(src, 1);
  const SimTrace t = simulate(d, Stimulus::uniform(9, 256, 1), RngSpec{0});
  const LeakTrace all = tap(d, t);
  EXPECT_TRUE(all.contains(d.replica_outputs[0][0]));
  EXPECT_TRUE(all.contains(d.replica_outputs[1][0]));
  const LeakTrace one = tap(d, t, 0);
  for (const auto& w : one.wires) EXPECT_FALSE(w.starts_with("__rep1.")) << w;
  EXPECT_TRUE(one.contains("__t.x0"));
  EXPECT_FALSE(one.contains("__u.x0"));
  for (const auto* l : {&all, &one}) {
    for (const auto& w : l->wires) {
      EXPECT_NE(w, "__r1");
      EXPECT_FALSE(src.is_input(w)) << w;
    }
  }
  EXPECT_THROW(tap(d, t, 2), LeakError);
  EXPECT_THROW((void)all.wire("__r1"), LeakError);
}

TEST(Tap, RefusesAProjectionThatSeesTheKey) {
  const Netlist src = fixtures::maj9();
  PartitionedDesign d = design_of(src, 1);
  for (auto& g : d.netlist.gates) {
    if (g.zone == Zone::Untrusted) {
      g.ins[0] = "__r1";
      break;
    }
  }
  const SimTrace t = simulate(d, Stimulus::uniform(9, 8, 1), RngSpec{0});
  EXPECT_THROW(tap(d, t), std::logic_error);
}

TEST(LeakReport, OneTimePadAndResidualPairs) {
  const Netlist src = fixtures::maj9();
  const PartitionedDesign d = design_of(src, 1);
  const SimTrace t = simulate(d, Stimulus::uniform(9, 100000, 1), RngSpec{0});
  const LeakReport rep = leak_report(d, t, {{"__t.x0", "__t.x1"}, {"__t.x3", "__t.x8"}});
  for (const auto& w : rep.wires) {
    if (w.wire.starts_with("__t.")) {
      const std::string x = w.wire.substr(4);
      EXPECT_LT(w.vs_input.at(x), 0.01) << w.wire;
    }
  }
  for (const auto& p : rep.pairs) EXPECT_GT(p.mi, 0.99) << p.a << "^" << p.b;
  for (const auto& s : rep.strategies) {
    if (s.name.starts_with("gradient")) {
      EXPECT_DOUBLE_EQ(s.accuracy, 1.0);
    } else if (s.name.starts_with("input-echo")) {
      EXPECT_NEAR(s.accuracy, 0.5, 0.01) << s.name;
    }
  }
}

TEST(LeakReport, TwoBitsMaskCrossGroupPairs) {
  const Netlist src = fixtures::maj9();
  const PartitionedDesign d = design_of(src, 2);
  const SimTrace t = simulate(d, Stimulus::uniform(9, 100000, 1), RngSpec{0});
  // x0 and x1 sit in different groups; x0 and x2 share one.
  const LeakReport rep = leak_report(d, t, {{"__t.x0", "__t.x1"}, {"__t.x0", "__t.x2"}});
  ASSERT_EQ(rep.pairs.size(), 2u);
  EXPECT_LT(rep.pairs[0].mi, 0.01);
  EXPECT_GT(rep.pairs[1].mi, 0.99);
}

TEST(Reconstruct, PickReplicaIsACoinFlip) {
  const Netlist src = fixtures::maj9();
  const PartitionedDesign d = design_of(src, 1);
  const SimTrace t = simulate(d, Stimulus::uniform(9, 10000, 3), RngSpec{1});
  const LeakTrace leak = tap(d, t);
  const BitStream truth = t.wire("__z.y");
  const BitStream guess = reconstruct(leak, PickReplica{0, 0})[0];
  EXPECT_NEAR(accuracy(guess, truth), 0.5, 0.03);
  // Exact identity behind it: replica 0 emits f(x) ^ r1.
  EXPECT_EQ(guess ^ t.wire("__r1"), truth);
  EXPECT_NEAR(accuracy(reconstruct(leak, InputEcho{"__t.x4"})[0], t.wire("x4")), 0.5, 0.03);
  EXPECT_THROW(reconstruct(tap(d, t, 1), PickReplica{0, 0}), LeakError);
}

TEST(Reconstruct, PlainNetlistLeaksEverything) {
  const Netlist src = fixtures::maj9();
  const SimTrace t = simulate(src, Stimulus::uniform(9, 2000, 3));
  const LeakTrace leak = tap_plain(t);
  const LeakReport rep = leak_report(leak, GroundTruth::from_plain(t), {{"x0", "x1"}});
  for (const auto& s : rep.strategies) EXPECT_DOUBLE_EQ(s.accuracy, 1.0) << s.name;
  EXPECT_GT(rep.pairs[0].mi, 0.99);
}

TriggerSpec watch(const PartitionedDesign& d, std::vector<size_t> idx, std::vector<bool> pattern) {
  TriggerSpec s;
  for (size_t i : idx) s.watched.push_back(d.replica_inputs[0][i]);
  s.pattern = std::move(pattern);
  return s;
}

TEST(Trigger, SingleBitHalvesTheRate) {
  const Netlist src = fixtures::maj9();
  const PartitionedDesign d = design_of(src, 1);
  const std::vector<bool> x{true, false, true, true, false, false, true, false, true};
  const TriggerSpec spec = watch(d, {0, 1, 2, 3, 4, 5, 6, 7, 8}, x);
  const Stimulus stim = Stimulus::constant(x, 10000);
  const TriggerStats s = trigger_experiment(d, spec, stim, RngSpec{0});
  EXPECT_DOUBLE_EQ(s.analytic_rate, 0.5);
  EXPECT_LE(std::abs(s.rate - 0.5), 3 * s.sigma);
  // Fires exactly when r1 = 0.
  const SimTrace t = simulate(d, stim, RngSpec{0});
  EXPECT_EQ(s.fired, ~t.wire("__r1"));
  const TriggerStats e = trigger_experiment(d, spec, stim, RngSpec{0}, true);
  EXPECT_DOUBLE_EQ(e.rate, e.analytic_rate);
  EXPECT_EQ(e.evaluations, 20000u);
}

TEST(Trigger, TwoBitsQuarterTheRate) {
  const Netlist src = fixtures::maj9();
  const PartitionedDesign d = design_of(src, 2);
  const std::vector<bool> x(9, false);
  const TriggerSpec spec = watch(d, {0, 1, 2, 3, 4, 5, 6, 7, 8}, x);
  const Stimulus stim = Stimulus::constant(x, 10000);
  const TriggerStats s = trigger_experiment(d, spec, stim, RngSpec{5});
  EXPECT_DOUBLE_EQ(s.analytic_rate, 0.25);
  EXPECT_LE(std::abs(s.rate - 0.25), 3 * s.sigma);
  const TriggerStats e = trigger_experiment(d, spec, stim, RngSpec{5}, true);
  EXPECT_DOUBLE_EQ(e.rate, 0.25);
}

TEST(Trigger, PatternOutsideTheOrbitNeverFires) {
  const Netlist src = fixtures::maj9();
  const PartitionedDesign d = design_of(src, 2);
  // x0 and x2 share r1, so they flip together and can never disagree.
  const TriggerSpec spec = watch(d, {0, 2}, {true, false});
  const Stimulus stim = Stimulus::constant(std::vector<bool>(9, false), 5000);
  const TriggerStats s = trigger_experiment(d, spec, stim, RngSpec{0});
  EXPECT_EQ(s.rate, 0.0);
  EXPECT_EQ(s.analytic_rate, 0.0);
  EXPECT_EQ(trigger_experiment(d, spec, stim, RngSpec{0}, true).rate, 0.0);
  EXPECT_THROW(trigger_experiment(d, watch(d, {0}, {true, true}), stim, RngSpec{}), LeakError);
  TriggerSpec bad{{"__u.x0"}, {true}};
  EXPECT_THROW(trigger_experiment(d, bad, stim, RngSpec{}), LeakError);
}

}  // namespace
}  // namespace record
