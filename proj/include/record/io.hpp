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

// JSON and CSV interchange for configs, reports, fault plans and traces.

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "record/cost.hpp"
#include "record/ftrecord.hpp"
#include "record/recordize.hpp"
#include "record/sim.hpp"
#include "record/trojan.hpp"

namespace record {

using Json = nlohmann::ordered_json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view data);

Json to_json(const RecordConfig& cfg);
/// {subset:[names], groups:G, assignment:{name:group}}. A missing assignment
/// puts every subset member in group 1.
RecordConfig config_from_json(const Json& j);

Json to_json(const LeakReport& rep);

Json to_json(const CostModel& model);
/// Kinds absent from the document keep their standard weights.
CostModel cost_model_from_json(const Json& j);
Json to_json(const CostReport& rep);

Json to_json(const FaultPlan& plan);
/// [{cycle, replica, wire, value}], optional "replay" per entry.
FaultPlan fault_plan_from_json(const Json& j);

Json to_json(const EquivalenceResult& res);
Json to_json(const TriggerStats& stats);

/// Rows of (cycle, wire, value); `wires` empty means every wire.
std::string trace_csv(const SimTrace& t, const std::vector<std::string>& wires = {});
/// Cycle count, inputs, and per-output ones count.
Json trace_summary(const SimTrace& t);

/// One row per protocol step: cycle, phase, replay, e, buffered, commit.
std::string ft_trace_csv(const FTTrace& t);
Json ft_summary(const FTTrace& t);

}  // namespace record
