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

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "record/evaluator.hpp"

namespace record {

namespace {

constexpr std::array<std::pair<GateKind, std::string_view>, 11> kKindNames{{
    {GateKind::Not, "not"},
    {GateKind::Buf, "buf"},
    {GateKind::And, "and"},
    {GateKind::Or, "or"},
    {GateKind::Nand, "nand"},
    {GateKind::Nor, "nor"},
    {GateKind::Xor, "xor"},
    {GateKind::Xnor, "xnor"},
    {GateKind::Mux2, "mux"},
    {GateKind::Const0, "const0"},
    {GateKind::Const1, "const1"},
}};

struct Token {
  std::string_view text;
  int column = 0;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' && line[j] != '#') ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

// Source positions gathered by the parser so semantic errors can point back
// at the offending statement.
struct GatePos {
  int line = 0;
  int out_col = 0;
  std::vector<int> in_cols;
};

struct Positions {
  std::vector<GatePos> gates;
  std::unordered_map<std::string, std::pair<int, int>> declared;  // input/output decls
};

[[noreturn]] void fail(const std::string& msg, int line, int col) {
  if (line > 0) {
    std::ostringstream os;
    os << line << ":" << col << ": " << msg;
    throw NetlistError(os.str(), line, col);
  }
  throw NetlistError(msg);
}

void check_structure(const Netlist& n, const Positions* pos) {
  auto gate_line = [&](size_t g) { return pos ? pos->gates[g].line : 0; };
  auto gate_col = [&](size_t g) { return pos ? pos->gates[g].out_col : 0; };

  std::unordered_map<std::string_view, long> driver;  // -1 = primary input
  for (const auto& in : n.inputs) {
    if (!is_valid_wire_name(in)) fail("invalid wire name '" + in + "'", 0, 0);
    if (!driver.emplace(in, -1).second) {
      int l = 0, c = 0;
      if (pos) {
        if (auto it = pos->declared.find(in); it != pos->declared.end()) std::tie(l, c) = it->second;
      }
      fail("input '" + in + "' declared twice", l, c);
    }
  }
  for (size_t g = 0; g < n.gates.size(); ++g) {
    const Gate& gate = n.gates[g];
    if (!arity_ok(gate.kind, gate.ins.size())) {
      fail("bad arity " + std::to_string(gate.ins.size()) + " for " + std::string(kind_name(gate.kind)),
           gate_line(g), gate_col(g));
    }
    if (!driver.emplace(gate.out, static_cast<long>(g)).second) {
      fail("duplicate driver for wire '" + gate.out + "'", gate_line(g), gate_col(g));
    }
  }
  for (size_t g = 0; g < n.gates.size(); ++g) {
    const Gate& gate = n.gates[g];
    for (size_t k = 0; k < gate.ins.size(); ++k) {
      if (!driver.contains(gate.ins[k])) {
        fail("undriven wire '" + gate.ins[k] + "'", gate_line(g),
             pos ? pos->gates[g].in_cols[k] : 0);
      }
    }
  }
  std::unordered_set<std::string_view> seen_out;
  for (const auto& out : n.outputs) {
    int l = 0, c = 0;
    if (pos) {
      if (auto it = pos->declared.find(out); it != pos->declared.end()) std::tie(l, c) = it->second;
    }
    if (!driver.contains(out)) fail("output '" + out + "' is not driven", l, c);
    if (!seen_out.insert(out).second) fail("output '" + out + "' declared twice", l, c);
  }
  try {
    (void)topological_order(n);
  } catch (const NetlistError& e) {
    // Re-throw with the position of one gate on the cycle.
    const std::string wire = e.what();
    for (size_t g = 0; g < n.gates.size(); ++g) {
      if (wire.find("'" + n.gates[g].out + "'") != std::string::npos) {
        fail(e.what(), gate_line(g), gate_col(g));
      }
    }
    throw;
  }
}

}  // namespace

NetlistError::NetlistError(const std::string& what, int line_, int column_)
    : std::runtime_error(what), line(line_), column(column_) {}

std::string_view kind_name(GateKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<GateKind> kind_from_name(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::string_view zone_name(Zone zone) { return zone == Zone::Trusted ? "trusted" : "untrusted"; }

bool arity_ok(GateKind kind, size_t n) {
  switch (kind) {
    case GateKind::Not:
    case GateKind::Buf:
      return n == 1;
    case GateKind::Mux2:
      return n == 3;
    case GateKind::Const0:
    case GateKind::Const1:
      return n == 0;
    default:
      return n >= 2;
  }
}

std::optional<size_t> Netlist::driver_index(std::string_view wire) const {
  for (size_t g = 0; g < gates.size(); ++g) {
    if (gates[g].out == wire) return g;
  }
  return std::nullopt;
}

bool Netlist::is_input(std::string_view wire) const {
  return std::find(inputs.begin(), inputs.end(), wire) != inputs.end();
}

bool is_reserved_name(std::string_view name) { return name.starts_with("__"); }

bool is_valid_wire_name(std::string_view name) {
  if (name.empty()) return false;
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(name[0])) return false;
  return std::all_of(name.begin() + 1, name.end(), [&](char c) { return alpha(c) || digit(c) || c == '.'; });
}

Netlist parse_netlist(std::string_view text) {
  Netlist n;
  Positions pos;
  struct PendingAttr {
    std::string wire;
    std::string key;
    std::string value;
    int line, col;
  };
  std::vector<PendingAttr> attrs;

  bool in_module = false;
  bool ended = false;
  int line_no = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(start, nl - start);
    start = nl + 1;
    ++line_no;

    auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string_view kw = toks[0].text;
    auto need_name = [&](const Token& t) {
      if (!is_valid_wire_name(t.text)) fail("invalid wire name '" + std::string(t.text) + "'", line_no, t.column);
      return std::string(t.text);
    };

    if (ended) fail("statement after 'end'", line_no, toks[0].column);
    if (!in_module) {
      if (kw != "module") fail("expected 'module'", line_no, toks[0].column);
      if (toks.size() != 2) fail("'module' takes exactly one name", line_no, toks[0].column);
      n.name = need_name(toks[1]);
      in_module = true;
      continue;
    }
    if (kw == "module") fail("nested 'module'", line_no, toks[0].column);
    if (kw == "end") {
      if (toks.size() != 1) fail("unexpected tokens after 'end'", line_no, toks[1].column);
      ended = true;
      continue;
    }
    if (kw == "input" || kw == "output") {
      if (toks.size() < 2) fail("'" + std::string(kw) + "' needs at least one wire", line_no, toks[0].column);
      auto& list = kw == "input" ? n.inputs : n.outputs;
      for (size_t i = 1; i < toks.size(); ++i) {
        list.push_back(need_name(toks[i]));
        pos.declared.emplace(list.back(), std::make_pair(line_no, toks[i].column));
      }
      continue;
    }
    if (kw == "attr") {
      if (toks.size() != 4) fail("'attr' expects: attr <wire> <key> <value>", line_no, toks[0].column);
      attrs.push_back({need_name(toks[1]), std::string(toks[2].text), std::string(toks[3].text), line_no,
                       toks[1].column});
      continue;
    }
    auto kind = kind_from_name(kw);
    if (!kind) fail("unknown statement '" + std::string(kw) + "'", line_no, toks[0].column);
    if (toks.size() < 2) fail("gate is missing its output wire", line_no, toks[0].column);
    Gate g;
    g.kind = *kind;
    g.out = need_name(toks[1]);
    GatePos gp{line_no, toks[1].column, {}};
    for (size_t i = 2; i < toks.size(); ++i) {
      g.ins.push_back(need_name(toks[i]));
      gp.in_cols.push_back(toks[i].column);
    }
    if (!arity_ok(g.kind, g.ins.size())) {
      fail("bad arity " + std::to_string(g.ins.size()) + " for '" + std::string(kw) + "'", line_no,
           toks[0].column);
    }
    n.gates.push_back(std::move(g));
    pos.gates.push_back(std::move(gp));
  }
  if (!in_module) fail("empty netlist: expected 'module'", 0, 0);
  if (!ended) fail("missing 'end'", line_no, 1);

  std::unordered_map<std::string_view, size_t> by_out;
  for (size_t i = 0; i < n.gates.size(); ++i) by_out.emplace(n.gates[i].out, i);
  for (const auto& a : attrs) {
    auto it = by_out.find(a.wire);
    if (it == by_out.end()) fail("attr on '" + a.wire + "', which no gate drives", a.line, a.col);
    Gate& g = n.gates[it->second];
    if (a.key == "zone") {
      if (a.value == "trusted") {
        g.zone = Zone::Trusted;
      } else if (a.value == "untrusted") {
        g.zone = Zone::Untrusted;
      } else {
        fail("zone must be trusted or untrusted", a.line, a.col);
      }
    } else if (a.key == "replica") {
      int k = 0;
      auto [p, ec] = std::from_chars(a.value.data(), a.value.data() + a.value.size(), k);
      if (ec != std::errc() || p != a.value.data() + a.value.size() || k < 0) {
        fail("replica must be a non-negative integer", a.line, a.col);
      }
      g.replica = k;
    } else {
      fail("unknown attribute '" + a.key + "'", a.line, a.col);
    }
  }

  check_structure(n, &pos);
  return n;
}

std::string write_netlist(const Netlist& n) {
  std::ostringstream os;
  os << "module " << n.name << "\n";
  auto list = [&](const char* kw, const std::vector<std::string>& names) {
    if (names.empty()) return;
    os << kw;
    for (const auto& w : names) os << ' ' << w;
    os << '\n';
  };
  list("input", n.inputs);
  list("output", n.outputs);
  for (const auto& g : n.gates) {
    os << kind_name(g.kind) << ' ' << g.out;
    for (const auto& in : g.ins) os << ' ' << in;
    os << '\n';
    if (g.zone == Zone::Untrusted) os << "attr " << g.out << " zone untrusted\n";
    if (g.replica) os << "attr " << g.out << " replica " << *g.replica << '\n';
  }
  os << "end\n";
  return os.str();
}

void validate(const Netlist& n) {
  if (!is_valid_wire_name(n.name)) throw NetlistError("invalid module name '" + n.name + "'");
  for (const auto& g : n.gates) {
    if (!is_valid_wire_name(g.out)) throw NetlistError("invalid wire name '" + g.out + "'");
  }
  check_structure(n, nullptr);
}

std::vector<size_t> topological_order(const Netlist& n) {
  std::unordered_map<std::string_view, size_t> by_out;
  for (size_t i = 0; i < n.gates.size(); ++i) by_out.emplace(n.gates[i].out, i);

  std::vector<size_t> pending(n.gates.size(), 0);
  std::vector<std::vector<size_t>> readers(n.gates.size());
  for (size_t i = 0; i < n.gates.size(); ++i) {
    for (const auto& in : n.gates[i].ins) {
      if (auto it = by_out.find(in); it != by_out.end()) {
        ++pending[i];
        readers[it->second].push_back(i);
      }
    }
  }
  std::vector<size_t> order;
  order.reserve(n.gates.size());
  for (size_t i = 0; i < n.gates.size(); ++i) {
    if (pending[i] == 0) order.push_back(i);
  }
  for (size_t head = 0; head < order.size(); ++head) {
    for (size_t r : readers[order[head]]) {
      if (--pending[r] == 0) order.push_back(r);
    }
  }
  if (order.size() != n.gates.size()) {
    for (size_t i = 0; i < n.gates.size(); ++i) {
      if (pending[i] != 0) throw NetlistError("cycle detected through wire '" + n.gates[i].out + "'");
    }
  }
  return order;
}

Assignment evaluate(const Netlist& n, const Assignment& inputs) {
  Evaluator ev(n);
  std::vector<uint64_t> values(ev.wire_count(), 0);
  for (size_t i = 0; i < n.inputs.size(); ++i) {
    auto it = inputs.find(n.inputs[i]);
    if (it == inputs.end()) throw NetlistError("missing input assignment for '" + n.inputs[i] + "'");
    values[ev.input_ids()[i]] = it->second ? 1 : 0;
  }
  ev.run(values);
  Assignment out;
  for (size_t o = 0; o < n.outputs.size(); ++o) out[n.outputs[o]] = values[ev.output_ids()[o]] & 1;
  return out;
}

Assignment assignment_from_bits(const std::vector<std::string>& names, uint64_t bits) {
  Assignment a;
  const size_t w = names.size();
  for (size_t i = 0; i < w; ++i) a[names[i]] = (bits >> (w - 1 - i)) & 1;
  return a;
}

uint64_t bits_from_assignment(const std::vector<std::string>& names, const Assignment& a) {
  uint64_t bits = 0;
  for (const auto& name : names) {
    auto it = a.find(name);
    bits = (bits << 1) | ((it != a.end() && it->second) ? 1 : 0);
  }
  return bits;
}

}  // namespace record
