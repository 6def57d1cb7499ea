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

#include <array>
#include <cstdint>
#include <string_view>

#include "record/netlist.hpp"

namespace record::fixtures {

/// 8-in/8-out AES S-box as one two-level sum-of-products per output bit.
/// Inputs x7..x0 and outputs y7..y0, most significant first.
Netlist aes_sbox();

/// 9-input majority (x0..x8 -> y) built from a full-adder popcount.
Netlist maj9();

/// 4-bit ripple-carry adder: inputs a3..a0 b3..b0, outputs s4..s0 (s4 = carry).
Netlist adder4();

/// Balanced tree of 2-input ANDs over inputs x0..x{n-1}.
Netlist and_tree(int n);

Netlist inverter();
Netlist and2();

/// Dispatches by name: aes-sbox, maj9, adder4, and-tree (width from `param`),
/// and-tree-<n>, inverter, and2. Throws std::invalid_argument on an unknown kind.
Netlist generate(std::string_view kind, int param = 8);

/// S-box computed from the GF(2^8) inverse and the affine map.
std::array<uint8_t, 256> compute_sbox();

}  // namespace record::fixtures
