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

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "record/netlist.hpp"
#include "record/rng.hpp"

namespace record {

class TransformError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Upper bound on random-bit groups; a design carries 2^G replicas.
inline constexpr int kMaxGroups = 6;

/// Which source inputs are randomized and which random bit masks each.
/// Groups are numbered 1..groups.
struct RecordConfig {
  std::vector<std::string> subset;
  int groups = 1;
  std::map<std::string, int> assignment;

  bool operator==(const RecordConfig&) const = default;

  /// Assigns group (position-in-source-inputs mod groups) + 1, which for a
  /// raster-ordered 3x3 window with groups = 2 is a checkerboard.
  static RecordConfig checkerboard(const Netlist& source, std::vector<std::string> subset, int groups);
  static RecordConfig all_inputs(const Netlist& source, int groups);

  /// Throws TransformError unless the config is usable on `source`.
  void check(const Netlist& source) const;
  [[nodiscard]] int group_of(std::string_view input) const;  // 0 when not randomized
  [[nodiscard]] bool contains(std::string_view input) const { return group_of(input) != 0; }
};

/// Reserved wire names produced by the transform.
namespace names {
std::string random_bit(int group);                        // __r<g>
std::string encoded_input(std::string_view x);            // __t.<x>  = x ^ r
std::string complemented_input(std::string_view x);       // __u.<x>  = !(x ^ r)
std::string replica_wire(int k, std::string_view wire);   // __rep<k>.<wire>
std::string selected(std::string_view output);            // __m.<o>
std::string encoded_output(std::string_view output);      // __y.<o>  = f ^ r1
std::string decoded_output(std::string_view output);      // __z.<o>  = f
}  // namespace names

/// A transformed netlist plus the bookkeeping needed to drive and attack it.
/// Replica k is fed complement pattern c with c_g = bit (g-1) of k.
struct PartitionedDesign {
  Netlist netlist;
  std::vector<std::string> source_inputs;
  std::vector<std::string> source_outputs;
  std::vector<std::string> random_wires;
  std::vector<std::string> encoded_outputs;
  std::vector<std::string> decoded_outputs;
  /// replica_inputs[k][i] is the wire replica k reads for source input i.
  std::vector<std::vector<std::string>> replica_inputs;
  /// replica_outputs[k][o] is the wire replica k drives for source output o.
  std::vector<std::vector<std::string>> replica_outputs;
  RecordConfig config;
  RngSpec rng;

  [[nodiscard]] int groups() const { return config.groups; }
  [[nodiscard]] int replica_count() const { return static_cast<int>(replica_inputs.size()); }
  /// More than two random bits goes past the constructions described for the
  /// scheme; reports flag it.
  [[nodiscard]] bool extended() const { return config.groups > 2; }
};

/// Builds the randomized-encoding design:
///   encode   t_i = x_i ^ r_g(i)                      (trusted)
///   replicas 2^G copies of the source on t or !t     (untrusted)
///   select   balanced MUX2 tree on r_1..r_G          (trusted)
///   outputs  y = m ^ r_1, z = y ^ r_1                 (trusted)
PartitionedDesign transform(const Netlist& source, const RecordConfig& cfg);

struct ClosureViolation {
  std::string gate;  // output wire of the offending untrusted gate
  std::string wire;  // the forbidden wire it reads
  bool operator==(const ClosureViolation&) const = default;
};

/// Lists every untrusted gate that reads a random bit or a raw randomized
/// input. Empty means the untrusted zone cannot see r.
std::vector<ClosureViolation> partition_check(const PartitionedDesign& d);

/// The bona fide user's view: same gates, decoded outputs only.
Netlist user_view(const PartitionedDesign& d);

/// Swaps the trusted random source; untrusted gates are untouched.
PartitionedDesign rekey(const PartitionedDesign& d, RngSpec rng);

/// Serialized untrusted gates only, for byte comparison across rekeys.
std::string untrusted_zone_text(const Netlist& n);

/// Rebuilds design bookkeeping from a transformed netlist using the reserved
/// naming scheme. Throws TransformError when the netlist is not a design.
PartitionedDesign recover_design(const Netlist& n);

}  // namespace record
