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

#include "record/netlist.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "random_netlist.hpp"
#include "record/fixtures.hpp"
#include "record/recordize.hpp"

namespace record {
namespace {

NetlistError parse_error(std::string_view text) {
  try {
    parse_netlist(text);
  } catch (const NetlistError& e) {
    return e;
  }
  ADD_FAILURE() << "expected a parse error for:\n" << text;
  return NetlistError("none");
}

TEST(Parse, SmallestModule) {
  Netlist n = parse_netlist("module inv\ninput a\noutput y\nnot y a\nend");
  EXPECT_EQ(n.name, "inv");
  ASSERT_EQ(n.gates.size(), 1u);
  EXPECT_EQ(n.gates[0].kind, GateKind::Not);
  EXPECT_EQ(n.gates[0].ins, std::vector<std::string>{"a"});
}

TEST(Parse, CommentsAndForwardReferences) {
  Netlist n = parse_netlist(
      "# leading comment\n"
      "module fw\n"
      "input a b\n"
      "output y\n"
      "and y a w   # w is driven below\n"
      "not w b\n"
      "end\n");
  EXPECT_EQ(n.gates.size(), 2u);
  EXPECT_TRUE(evaluate(n, {{"a", true}, {"b", false}}).at("y"));
}

TEST(Parse, DuplicateDriver) {
  auto e = parse_error("module inv\ninput a\noutput y\nnot y a\nnot y a\nend");
  EXPECT_NE(std::string(e.what()).find("duplicate driver for wire 'y'"), std::string::npos) << e.what();
  EXPECT_EQ(e.line, 5);
}

TEST(Parse, Cycle) {
  auto e = parse_error("module c\ninput a\noutput w1\nand w1 a w2\nnot w2 w1\nend");
  EXPECT_NE(std::string(e.what()).find("cycle"), std::string::npos) << e.what();
}

TEST(Parse, ErrorsCarryPositions) {
  EXPECT_EQ(parse_error("module m\ninput a\noutput y\nfrob y a\nend").line, 4);
  EXPECT_EQ(parse_error("module m\ninput a\noutput y\nnot y\nend").line, 4);
  auto undriven = parse_error("module m\ninput a\noutput y\nand y a b\nend");
  EXPECT_EQ(undriven.line, 4);
  EXPECT_EQ(undriven.column, 9);
  EXPECT_NE(std::string(undriven.what()).find("undriven wire 'b'"), std::string::npos);
  parse_error("module m\ninput a a\noutput a\nend");
  parse_error("module m\ninput a\noutput z\nend");
  parse_error("module m\ninput 1a\noutput y\nnot y 1a\nend");
  parse_error("module m\ninput a\noutput y\nmux y a a\nend");
  parse_error("module m\ninput a\noutput y\nnot y a\n");  // missing end
  parse_error("module m\ninput a\noutput y\nnot y a\nattr y zone sideways\nend");
  parse_error("module m\ninput a\noutput y\nnot y a\nattr q zone untrusted\nend");
}

TEST(Parse, NotAndBufRejectWideArity) {
  parse_error("module m\ninput a b\noutput y\nnot y a b\nend");
  parse_error("module m\ninput a\noutput y\nand y a\nend");
}

TEST(Write, InverterIsCanonical) {
  Netlist n = fixtures::inverter();
  const std::string text = write_netlist(n);
  EXPECT_EQ(text, "module inv\ninput a\noutput y\nnot y a\nend\n");
  EXPECT_EQ(parse_netlist(text), n);
}

TEST(Write, ZoneAttributesPersist) {
  Netlist n = fixtures::and2();
  n.gates[0].zone = Zone::Untrusted;
  n.gates[0].replica = 1;
  const std::string text = write_netlist(n);
  EXPECT_NE(text.find("attr y zone untrusted"), std::string::npos);
  EXPECT_NE(text.find("attr y replica 1"), std::string::npos);
  EXPECT_EQ(parse_netlist(text), n);
}

TEST(RoundTrip, EveryFixtureAndDesign) {
  for (auto kind : {"aes-sbox", "maj9", "adder4", "and-tree-8", "inverter", "and2"}) {
    const Netlist n = fixtures::generate(kind);
    EXPECT_EQ(parse_netlist(write_netlist(n)), n) << kind;
    for (int g = 1; g <= std::min<int>(2, static_cast<int>(n.inputs.size())); ++g) {
      const auto d = transform(n, RecordConfig::all_inputs(n, g));
      EXPECT_EQ(parse_netlist(write_netlist(d.netlist)), d.netlist) << kind << " G=" << g;
    }
  }
  const Netlist s = parse_netlist(write_netlist(fixtures::aes_sbox()));
  EXPECT_EQ(s.inputs.size(), 8u);
  EXPECT_EQ(s.outputs.size(), 8u);
}

TEST(RoundTrip, RandomNetlists) {
  for (uint32_t seed = 0; seed < 50; ++seed) {
    const Netlist n = testing::random_netlist(seed);
    EXPECT_EQ(parse_netlist(write_netlist(n)), n);
  }
}

TEST(Evaluate, GateTruthTables) {
  EXPECT_TRUE(evaluate(fixtures::and2(), {{"a", true}, {"b", true}}).at("y"));
  EXPECT_FALSE(evaluate(fixtures::and2(), {{"a", true}, {"b", false}}).at("y"));
  const Netlist n = parse_netlist(
      "module g\ninput a b c\noutput o1 o2 o3 o4 o5 o6 o7 o8 o9 o10\n"
      "nand o1 a b c\nnor o2 a b\nxor o3 a b c\nxnor o4 a b\nmux o5 a b c\n"
      "const0 o6\nconst1 o7\nbuf o8 c\nor o9 a b c\nnot o10 b\nend");
  for (uint64_t v = 0; v < 8; ++v) {
    auto in = oracle::unpack(n.inputs, v);
    auto want = oracle::naive_eval(n, in);
    Assignment a(in.begin(), in.end());
    auto got = evaluate(n, a);
    for (const auto& [w, b] : want) EXPECT_EQ(got.at(w), b) << w << " at " << v;
    const bool A = in["a"], B = in["b"], C = in["c"];
    EXPECT_EQ(got.at("o1"), !(A && B && C));
    EXPECT_EQ(got.at("o3"), A ^ B ^ C);
    EXPECT_EQ(got.at("o5"), A ? C : B);
  }
}

TEST(Evaluate, MissingInputThrows) {
  EXPECT_THROW(evaluate(fixtures::and2(), {{"a", true}}), NetlistError);
}

TEST(Evaluator, MatchesNaiveOnRandomNetlists) {
  for (uint32_t seed = 0; seed < 40; ++seed) {
    const Netlist n = testing::random_netlist(seed, 5, 20, 3);
    for (uint64_t v = 0; v < 32; ++v) {
      auto in = oracle::unpack(n.inputs, v);
      Assignment a(in.begin(), in.end());
      auto got = evaluate(n, a);
      for (const auto& [w, b] : oracle::naive_eval(n, in)) ASSERT_EQ(got.at(w), b) << n.name << " " << w;
    }
  }
}

TEST(Topology, OrderRespectsDependencies) {
  for (uint32_t seed = 0; seed < 20; ++seed) {
    Netlist n = testing::random_netlist(seed, 4, 15, 2);
    std::reverse(n.gates.begin(), n.gates.end());
    const auto order = topological_order(n);
    ASSERT_EQ(order.size(), n.gates.size());
    std::map<std::string, size_t> pos;
    for (size_t i = 0; i < order.size(); ++i) pos[n.gates[order[i]].out] = i;
    for (size_t i = 0; i < order.size(); ++i) {
      for (const auto& in : n.gates[order[i]].ins) {
        if (pos.contains(in)) {
          EXPECT_LT(pos[in], i);
        }
      }
    }
  }
}

// Exhaustive fixture checks against independent functions.
template <typename F>
void expect_matches(const Netlist& n, F&& f) {
  for (uint64_t v = 0; v < (uint64_t{1} << n.inputs.size()); ++v) {
    const Assignment out = evaluate(n, assignment_from_bits(n.inputs, v));
    ASSERT_EQ(bits_from_assignment(n.outputs, out), f(v)) << n.name << " input " << v;
  }
}

TEST(Fixtures, AesSboxMatchesFipsTable) {
  const Netlist n = fixtures::aes_sbox();
  expect_matches(n, oracle::sbox);
  EXPECT_EQ(bits_from_assignment(n.outputs, evaluate(n, assignment_from_bits(n.inputs, 0x00))), 0x63u);
  EXPECT_EQ(bits_from_assignment(n.outputs, evaluate(n, assignment_from_bits(n.inputs, 0x53))), 0xEDu);
  EXPECT_EQ(fixtures::compute_sbox(), oracle::kSbox);
}

TEST(Fixtures, Maj9) {
  const Netlist n = fixtures::maj9();
  expect_matches(n, oracle::maj9);
  EXPECT_FALSE(evaluate(n, assignment_from_bits(n.inputs, 0)).at("y"));
  EXPECT_TRUE(evaluate(n, assignment_from_bits(n.inputs, 0b111110000)).at("y"));
}

TEST(Fixtures, Maj9IsSelfDual) {
  const Netlist n = fixtures::maj9();
  for (uint64_t v = 0; v < 512; ++v) {
    const bool a = evaluate(n, assignment_from_bits(n.inputs, v)).at("y");
    const bool b = evaluate(n, assignment_from_bits(n.inputs, ~v & 0x1FF)).at("y");
    ASSERT_NE(a, b) << v;
  }
}

TEST(Fixtures, Adder4) {
  const Netlist n = fixtures::adder4();
  expect_matches(n, oracle::adder4);
  EXPECT_EQ(bits_from_assignment(n.outputs, evaluate(n, assignment_from_bits(n.inputs, 0xF1))), 0x10u);
}

TEST(Fixtures, AndTreesAndSmallOnes) {
  for (int w : {2, 3, 5, 8, 13}) {
    expect_matches(fixtures::and_tree(w), [w](uint64_t v) { return oracle::and_all(v, w); });
  }
  expect_matches(fixtures::inverter(), oracle::inverter);
  expect_matches(fixtures::and2(), [](uint64_t v) { return oracle::and_all(v, 2); });
  EXPECT_EQ(fixtures::generate("and-tree", 6).inputs.size(), 6u);
  EXPECT_EQ(fixtures::generate("and-tree-4").inputs.size(), 4u);
  EXPECT_THROW(fixtures::generate("and-tree-1"), std::invalid_argument);
  EXPECT_THROW(fixtures::generate("nope"), std::invalid_argument);
}

TEST(Names, ReservedAndValid) {
  EXPECT_TRUE(is_reserved_name("__r1"));
  EXPECT_FALSE(is_reserved_name("_r1"));
  EXPECT_TRUE(is_valid_wire_name("a.b_3"));
  EXPECT_FALSE(is_valid_wire_name("3a"));
  EXPECT_FALSE(is_valid_wire_name(""));
  EXPECT_FALSE(is_valid_wire_name("a-b"));
}

TEST(Bits, PackingIsMsbFirst) {
  const std::vector<std::string> names{"a", "b", "c"};
  const Assignment a = assignment_from_bits(names, 0b100);
  EXPECT_TRUE(a.at("a"));
  EXPECT_FALSE(a.at("c"));
  EXPECT_EQ(bits_from_assignment(names, a), 0b100u);
}

}  // namespace
}  // namespace record
