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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "record/trojan.hpp"

namespace record {

class ImageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 8-bit grayscale, row-major.
struct Image {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> pixels;

  Image() = default;
  Image(int w, int h, uint8_t fill = 0) : width(w), height(h), pixels(static_cast<size_t>(w) * h, fill) {}

  /// Coordinates are clamped, so reads past the border replicate it.
  [[nodiscard]] uint8_t at(int x, int y) const;
  void set(int x, int y, uint8_t v) { pixels[static_cast<size_t>(y) * width + x] = v; }

  bool operator==(const Image&) const = default;
};

/// Accepts P2 (ASCII) and P5 (binary) graymaps; values are rescaled to 0..255
/// when maxval differs.
Image read_pgm(std::string_view data);
/// Always P5, maxval 255.
std::string write_pgm(const Image& img);

/// 64x64-style test scene: dark background with two bright rectangles.
Image synthetic_scene(int width = 64, int height = 64);

/// Replaces each pixel with 0 or 255 (equally likely) with probability `p`.
Image add_salt_and_pepper(const Image& img, double p, uint64_t seed);

/// 1 where pixel >= threshold.
Image binarize(const Image& img, int threshold);

/// 3x3 median of a 0/1 image with replicated border, computed directly.
Image median3x3(const Image& bits);

/// The 3x3 neighbourhood of (x, y), raster order, border replicated.
std::array<bool, 9> window_bits(const Image& bits, int x, int y);

/// 1 where a pixel differs from its right or lower neighbour.
Image edge_map(const Image& bits);

/// F1 of a predicted 0/1 map against a reference 0/1 map (1 = positive).
double f1_score(const std::vector<bool>& predicted, const std::vector<bool>& truth);

enum class DemoVariant { Plain, Record1, Record2 };

struct DemoConfig {
  Image input;
  int threshold = 128;
  DemoVariant variant = DemoVariant::Record1;
  double noise = 0.05;
  uint64_t seed = 0;
};

struct DemoResult {
  Image original;  // noisy input
  Image enhanced;  // decoded output of the enhancement function
  Image leaked;    // the Trojan's reconstruction
  LeakReport report;
  bool enhanced_matches_oracle = false;
  /// F1 of the Trojan's edge estimate against the edges of the enhanced image.
  double structural_score = 0;
  /// Gradient guesses on in-window neighbour pairs that share a random bit.
  std::optional<double> same_group_f1;
  size_t same_group_pairs = 0;
  /// Gradient guesses on in-window neighbour pairs masked by different bits.
  std::optional<double> cross_group_accuracy;
  size_t cross_group_pairs = 0;
};

/// Runs the 3x3 majority denoiser over every pixel window (raster order, one
/// fresh random draw per window) through the chosen variant, then rebuilds
/// what an untrusted-zone Trojan can see. Plain: no protection; Record1: one
/// random bit; Record2: two bits in a checkerboard over the window.
DemoResult demo_image(const DemoConfig& cfg);

std::string_view variant_name(DemoVariant v);
std::optional<DemoVariant> variant_from_name(std::string_view name);

}  // namespace record
