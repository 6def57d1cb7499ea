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

#include <cstdint>

#include "record/bits.hpp"

namespace record {

/// SplitMix64. Not cryptographic; the threat model only needs r to be
/// unobservable from the untrusted zone, and reproducible traces.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
  }

 private:
  uint64_t state_;
};

/// Seed of the random-bit source that drives __r1..__rG.
struct RngSpec {
  uint64_t seed = 0;
  bool operator==(const RngSpec&) const = default;
};

/// Reads a SplitMix64 stream one bit at a time, LSB first within each word.
class BitSource {
 public:
  explicit BitSource(RngSpec spec) : gen_(spec.seed) {}

  bool next() {
    if (left_ == 0) {
      word_ = gen_.next();
      left_ = 64;
    }
    const bool b = word_ & 1;
    word_ >>= 1;
    --left_;
    return b;
  }

 private:
  SplitMix64 gen_;
  uint64_t word_ = 0;
  int left_ = 0;
};

/// First `n` bits of the stream for `spec`.
inline BitStream rng_bits(RngSpec spec, size_t n) {
  BitStream out(n);
  SplitMix64 gen(spec.seed);
  for (auto& w : out.words()) w = gen.next();
  out.trim();
  return out;
}

}  // namespace record
