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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace record {

/// A packed stream of bits, one per simulated cycle. Bit `i` lives in word
/// `i / 64` at position `i % 64`; unused high bits of the last word are zero.
class BitStream {
 public:
  BitStream() = default;
  explicit BitStream(size_t size, bool fill = false)
      : words_((size + 63) / 64, fill ? ~uint64_t{0} : 0), size_(size) {
    trim();
  }

  [[nodiscard]] size_t size() const { return size_; }
  [[nodiscard]] bool empty() const { return size_ == 0; }

  [[nodiscard]] bool get(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(size_t i, bool v) {
    const uint64_t mask = uint64_t{1} << (i & 63);
    if (v) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }
  void push_back(bool v) {
    if ((size_ & 63) == 0) words_.push_back(0);
    ++size_;
    set(size_ - 1, v);
  }

  [[nodiscard]] const std::vector<uint64_t>& words() const { return words_; }
  [[nodiscard]] std::vector<uint64_t>& words() { return words_; }

  /// Clears bits past size(); call after writing whole words.
  void trim() {
    if (size_ & 63) words_.back() &= (uint64_t{1} << (size_ & 63)) - 1;
  }

  [[nodiscard]] size_t count() const {
    size_t n = 0;
    for (uint64_t w : words_) n += static_cast<size_t>(std::popcount(w));
    return n;
  }

  BitStream& operator^=(const BitStream& o) {
    check_same(o);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  BitStream& operator&=(const BitStream& o) {
    check_same(o);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  BitStream& operator|=(const BitStream& o) {
    check_same(o);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  [[nodiscard]] BitStream operator~() const {
    BitStream r = *this;
    for (auto& w : r.words_) w = ~w;
    r.trim();
    return r;
  }
  friend BitStream operator^(BitStream a, const BitStream& b) { return a ^= b; }
  friend BitStream operator&(BitStream a, const BitStream& b) { return a &= b; }
  friend BitStream operator|(BitStream a, const BitStream& b) { return a |= b; }

  bool operator==(const BitStream&) const = default;

 private:
  void check_same(const BitStream& o) const {
    if (o.size_ != size_) throw std::invalid_argument("bit stream length mismatch");
  }

  std::vector<uint64_t> words_;
  size_t size_ = 0;
};

/// Number of positions at which two equal-length streams agree.
inline size_t agreement(const BitStream& a, const BitStream& b) { return a.size() - (a ^ b).count(); }

}  // namespace record
