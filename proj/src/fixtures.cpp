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

#include "record/fixtures.hpp"

#include <stdexcept>
#include <string>

namespace record::fixtures {

namespace {

uint8_t gf_mul(uint8_t a, uint8_t b) {
  uint8_t p = 0;
  while (b) {
    if (b & 1) p ^= a;
    const bool hi = a & 0x80;
    a = static_cast<uint8_t>(a << 1);
    if (hi) a ^= 0x1b;
    b >>= 1;
  }
  return p;
}

uint8_t rotl8(uint8_t v, int k) { return static_cast<uint8_t>((v << k) | (v >> (8 - k))); }

std::string idx(const char* prefix, int i) { return prefix + std::to_string(i); }

Gate gate(GateKind kind, std::string out, std::vector<std::string> ins) {
  return Gate{kind, std::move(out), std::move(ins), Zone::Trusted, std::nullopt};
}

// Appends a full adder; returns (sum, carry) wire names.
std::pair<std::string, std::string> full_adder(Netlist& n, const std::string& tag, const std::string& a,
                                               const std::string& b, const std::string& c) {
  const std::string s = tag + "_s";
  const std::string ab = tag + "_ab", ac = tag + "_ac", bc = tag + "_bc", co = tag + "_c";
  n.gates.push_back(gate(GateKind::Xor, s, {a, b, c}));
  n.gates.push_back(gate(GateKind::And, ab, {a, b}));
  n.gates.push_back(gate(GateKind::And, ac, {a, c}));
  n.gates.push_back(gate(GateKind::And, bc, {b, c}));
  n.gates.push_back(gate(GateKind::Or, co, {ab, ac, bc}));
  return {s, co};
}

}  // namespace

std::array<uint8_t, 256> compute_sbox() {
  std::array<uint8_t, 256> box{};
  for (int v = 0; v < 256; ++v) {
    uint8_t inv = 0;
    if (v != 0) {
      for (int c = 1; c < 256; ++c) {
        if (gf_mul(static_cast<uint8_t>(v), static_cast<uint8_t>(c)) == 1) {
          inv = static_cast<uint8_t>(c);
          break;
        }
      }
    }
    box[v] = inv ^ rotl8(inv, 1) ^ rotl8(inv, 2) ^ rotl8(inv, 3) ^ rotl8(inv, 4) ^ 0x63;
  }
  return box;
}

Netlist aes_sbox() {
  const auto box = compute_sbox();
  Netlist n;
  n.name = "aes_sbox";
  for (int b = 7; b >= 0; --b) n.inputs.push_back(idx("x", b));
  for (int b = 7; b >= 0; --b) n.outputs.push_back(idx("y", b));
  for (int b = 7; b >= 0; --b) n.gates.push_back(gate(GateKind::Not, idx("nx", b), {idx("x", b)}));
  for (int ob = 7; ob >= 0; --ob) {
    std::vector<std::string> terms;
    for (int v = 0; v < 256; ++v) {
      if (!((box[v] >> ob) & 1)) continue;
      std::vector<std::string> lits;
      for (int b = 7; b >= 0; --b) lits.push_back(((v >> b) & 1) ? idx("x", b) : idx("nx", b));
      const std::string term = "p" + std::to_string(ob) + "_" + std::to_string(v);
      n.gates.push_back(gate(GateKind::And, term, std::move(lits)));
      terms.push_back(term);
    }
    n.gates.push_back(gate(GateKind::Or, idx("y", ob), std::move(terms)));
  }
  return n;
}

Netlist maj9() {
  Netlist n;
  n.name = "maj9";
  for (int i = 0; i < 9; ++i) n.inputs.push_back(idx("x", i));
  n.outputs = {"y"};
  // Three weight-1 full adders, then combine sums (weight 1) and carries (weight 2).
  auto [s0, c0] = full_adder(n, "fa0", "x0", "x1", "x2");
  auto [s1, c1] = full_adder(n, "fa1", "x3", "x4", "x5");
  auto [s2, c2] = full_adder(n, "fa2", "x6", "x7", "x8");
  auto [ones, twos_a] = full_adder(n, "fa3", s0, s1, s2);
  auto [twos_b, fours_a] = full_adder(n, "fa4", c0, c1, c2);
  // count = ones + 2*(twos_a + twos_b) + 4*fours_a
  n.gates.push_back(gate(GateKind::Xor, "twos", {twos_a, twos_b}));
  n.gates.push_back(gate(GateKind::And, "fours_b", {twos_a, twos_b}));
  // count >= 5  <=>  both fours set, or one four plus any lower bit.
  n.gates.push_back(gate(GateKind::And, "eight", {fours_a, "fours_b"}));
  n.gates.push_back(gate(GateKind::Or, "four", {fours_a, "fours_b"}));
  n.gates.push_back(gate(GateKind::Or, "low", {ones, "twos"}));
  n.gates.push_back(gate(GateKind::And, "four_low", {"four", "low"}));
  n.gates.push_back(gate(GateKind::Or, "y", {"eight", "four_low"}));
  return n;
}

Netlist adder4() {
  Netlist n;
  n.name = "adder4";
  for (int b = 3; b >= 0; --b) n.inputs.push_back(idx("a", b));
  for (int b = 3; b >= 0; --b) n.inputs.push_back(idx("b", b));
  for (int b = 4; b >= 0; --b) n.outputs.push_back(idx("s", b));
  // Bit 0 is a half adder.
  n.gates.push_back(gate(GateKind::Xor, "s0", {"a0", "b0"}));
  n.gates.push_back(gate(GateKind::And, "c0", {"a0", "b0"}));
  for (int b = 1; b < 4; ++b) {
    const std::string a = idx("a", b), bb = idx("b", b), cin = idx("c", b - 1);
    const std::string cout = b == 3 ? "s4" : idx("c", b);
    n.gates.push_back(gate(GateKind::Xor, idx("s", b), {a, bb, cin}));
    n.gates.push_back(gate(GateKind::And, idx("g", b), {a, bb}));
    n.gates.push_back(gate(GateKind::Xor, idx("p", b), {a, bb}));
    n.gates.push_back(gate(GateKind::And, idx("pc", b), {idx("p", b), cin}));
    n.gates.push_back(gate(GateKind::Or, cout, {idx("g", b), idx("pc", b)}));
  }
  return n;
}

Netlist and_tree(int count) {
  if (count < 2) throw std::invalid_argument("and-tree needs at least 2 inputs");
  Netlist n;
  n.name = "and_tree" + std::to_string(count);
  std::vector<std::string> level;
  for (int i = 0; i < count; ++i) {
    n.inputs.push_back(idx("x", i));
    level.push_back(n.inputs.back());
  }
  int node = 0;
  while (level.size() > 1) {
    std::vector<std::string> next;
    for (size_t i = 0; i + 1 < level.size(); i += 2) {
      const bool root = level.size() == 2;
      std::string out = root ? "y" : idx("n", node++);
      n.gates.push_back(gate(GateKind::And, out, {level[i], level[i + 1]}));
      next.push_back(std::move(out));
    }
    if (level.size() % 2) next.push_back(level.back());
    level = std::move(next);
  }
  n.outputs = {"y"};
  return n;
}

Netlist inverter() {
  Netlist n;
  n.name = "inv";
  n.inputs = {"a"};
  n.outputs = {"y"};
  n.gates.push_back(gate(GateKind::Not, "y", {"a"}));
  return n;
}

Netlist and2() {
  Netlist n;
  n.name = "and2";
  n.inputs = {"a", "b"};
  n.outputs = {"y"};
  n.gates.push_back(gate(GateKind::And, "y", {"a", "b"}));
  return n;
}

Netlist generate(std::string_view kind, int param) {
  if (kind == "aes-sbox") return aes_sbox();
  if (kind == "maj9") return maj9();
  if (kind == "adder4") return adder4();
  if (kind == "and-tree") return and_tree(param);
  if (kind.starts_with("and-tree-")) {
    const std::string digits(kind.substr(9));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("bad and-tree width in '" + std::string(kind) + "'");
    }
    return and_tree(std::stoi(digits));
  }
  if (kind == "inverter") return inverter();
  if (kind == "and2") return and2();
  throw std::invalid_argument("unknown fixture kind '" + std::string(kind) + "'");
}

}  // namespace record::fixtures
