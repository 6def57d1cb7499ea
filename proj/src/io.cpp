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

#include "record/io.hpp"

#include <fstream>
#include <sstream>

namespace record {

namespace {

std::string bit_string(const std::vector<bool>& bits) {
  std::string s;
  for (bool b : bits) s += b ? '1' : '0';
  return s;
}

template <typename F>
auto guarded(std::string_view what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

Json to_json(const RecordConfig& cfg) {
  Json assignment = Json::object();
  for (const auto& x : cfg.subset) assignment[x] = cfg.group_of(x);
  return Json{{"subset", cfg.subset}, {"groups", cfg.groups}, {"assignment", assignment}};
}

RecordConfig config_from_json(const Json& j) {
  return guarded("record config", [&] {
    RecordConfig cfg;
    cfg.subset = j.at("subset").get<std::vector<std::string>>();
    cfg.groups = j.value("groups", 1);
    if (j.contains("assignment")) {
      for (const auto& [name, g] : j.at("assignment").items()) cfg.assignment[name] = g.get<int>();
    } else {
      for (const auto& x : cfg.subset) cfg.assignment[x] = 1;
    }
    return cfg;
  });
}

Json to_json(const LeakReport& rep) {
  Json wires = Json::object();
  for (const auto& w : rep.wires) {
    wires[w.wire] = {{"mi_vs", {{"input", w.vs_input}, {"output", w.vs_output}}}};
  }
  Json pairs = Json::array();
  for (const auto& p : rep.pairs) pairs.push_back({{"a", p.a}, {"b", p.b}, {"mi", p.mi}});
  Json strategies = Json::array();
  for (const auto& s : rep.strategies) strategies.push_back({{"name", s.name}, {"accuracy", s.accuracy}});
  return Json{{"cycles", rep.cycles}, {"wires", wires}, {"pairs", pairs}, {"strategies", strategies}};
}

Json to_json(const CostModel& model) {
  Json area = Json::object(), delay = Json::object();
  for (const auto& [k, a] : model.area) area[std::string(kind_name(k))] = {{"base", a.base}, {"slope", a.slope}};
  for (const auto& [k, d] : model.delay) delay[std::string(kind_name(k))] = d;
  return Json{{"area", area}, {"delay", delay}};
}

CostModel cost_model_from_json(const Json& j) {
  CostModel m = CostModel::standard();
  guarded("cost model", [&] {
    auto kind = [](const std::string& name) {
      auto k = kind_from_name(name);
      if (!k) throw FormatError("cost model: unknown gate kind '" + name + "'");
      return *k;
    };
    if (j.contains("area")) {
      for (const auto& [name, a] : j.at("area").items()) {
        m.area[kind(name)] = {a.at("base").get<double>(), a.value("slope", 0.0)};
      }
    }
    if (j.contains("delay")) {
      for (const auto& [name, d] : j.at("delay").items()) m.delay[kind(name)] = d.get<double>();
    }
    return 0;
  });
  try {
    m.check();
  } catch (const CostError& e) {
    throw FormatError(std::string("cost model: ") + e.what());
  }
  return m;
}

Json to_json(const CostReport& rep) {
  auto proxy = [](const CostReport::Proxy& p) {
    return Json{{"area", p.area}, {"depth", p.depth}, {"activity", p.activity}, {"leakage", p.leakage}};
  };
  return Json{
      {"label", rep.label},
      {"groups", rep.groups},
      {"randomized_inputs", rep.randomized_inputs},
      {"beyond_paper", rep.extended},
      {"proxy", {{"original", proxy(rep.original)}, {"transformed", proxy(rep.transformed)}}},
      {"ratios", proxy(rep.ratio)},
      {"untrusted_area", rep.untrusted_area},
      {"decoded_depth", rep.decoded_depth},
      {"paper_reference",
       {{"area", PublishedReference::area},
        {"dyn_power", PublishedReference::dynamic_power},
        {"leak_power", PublishedReference::leakage_power},
        {"delay_increase_max", PublishedReference::delay_increase_max}}},
  };
}

Json to_json(const FaultPlan& plan) {
  Json out = Json::array();
  for (const auto& f : plan) {
    Json e{{"cycle", f.cycle}, {"replica", f.replica}, {"wire", f.wire}, {"value", f.value ? 1 : 0}};
    if (f.replay) e["replay"] = f.replay;
    out.push_back(e);
  }
  return out;
}

FaultPlan fault_plan_from_json(const Json& j) {
  return guarded("fault plan", [&] {
    if (!j.is_array()) throw FormatError("fault plan: expected a JSON list");
    FaultPlan plan;
    for (const auto& e : j) {
      Fault f;
      if (!e.at("cycle").is_number_unsigned()) throw FormatError("fault plan: cycle must be a non-negative integer");
      f.cycle = e.at("cycle").get<size_t>();
      f.replica = e.at("replica").get<int>();
      f.wire = e.at("wire").get<std::string>();
      const auto& v = e.at("value");
      f.value = v.is_boolean() ? v.get<bool>() : v.get<int>() != 0;
      f.replay = e.value("replay", 0);
      plan.push_back(std::move(f));
    }
    return plan;
  });
}

Json to_json(const EquivalenceResult& res) {
  Json out{{"pass", res.pass}, {"checked", res.checked}};
  if (res.counterexample) {
    const auto& c = *res.counterexample;
    Json inputs = Json::object();
    for (const auto& [k, v] : c.inputs) inputs[k] = v ? 1 : 0;
    out["counterexample"] = {{"inputs", inputs},
                             {"random", bit_string(c.random)},
                             {"expected", bit_string(c.expected)},
                             {"got", bit_string(c.got)}};
  }
  return out;
}

Json to_json(const TriggerStats& s) {
  return Json{{"evaluations", s.evaluations}, {"fired", s.fired.count()},  {"rate", s.rate},
              {"analytic_rate", s.analytic_rate}, {"sigma", s.sigma}, {"exhaustive", s.exhaustive}};
}

std::string trace_csv(const SimTrace& t, const std::vector<std::string>& wires) {
  const std::vector<std::string>& names = wires.empty() ? t.wires : wires;
  std::vector<const BitStream*> cols;
  for (const auto& w : names) cols.push_back(&t.wire(w));
  std::string out = "cycle,wire,value\n";
  for (size_t c = 0; c < t.cycles; ++c) {
    for (size_t i = 0; i < names.size(); ++i) {
      out += std::to_string(c) + ',' + names[i] + ',' + (cols[i]->get(c) ? '1' : '0') + '\n';
    }
  }
  return out;
}

Json trace_summary(const SimTrace& t) {
  Json ones = Json::object();
  for (const auto& o : t.netlist->outputs) ones[o] = t.wire(o).count();
  return Json{{"netlist", t.netlist->name},
              {"cycles", t.cycles},
              {"wires", t.wires.size()},
              {"stimulus_inputs", t.stimulus_inputs},
              {"random_inputs", t.random_inputs},
              {"output_ones", ones}};
}

std::string ft_trace_csv(const FTTrace& t) {
  std::string out = "cycle,phase,replay,x,r,e,buffered,commit,permanent\n";
  for (const auto& s : t.steps) {
    out += std::to_string(s.cycle) + ',' + std::to_string(s.phase) + ',' + std::to_string(s.replay) + ',' +
           bit_string(s.x) + ',' + (s.r ? '1' : '0') + ',' + (s.e ? '1' : '0') + ',' + bit_string(s.buffered) +
           ',' + (s.committed ? bit_string(*s.committed) : std::string("-")) + ',' +
           (s.permanent_fault_suspected ? '1' : '0') + '\n';
  }
  return out;
}

Json ft_summary(const FTTrace& t) {
  Json committed = Json::array();
  for (const auto& c : t.committed) committed.push_back(bit_string(c));
  return Json{{"cycles", t.committed.size()},
              {"steps", t.steps.size()},
              {"detections", t.detections},
              {"permanent_fault_suspected", t.permanent_fault_suspected},
              {"committed", committed}};
}

}  // namespace record
