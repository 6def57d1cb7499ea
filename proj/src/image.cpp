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

#include "record/image.hpp"

#include <algorithm>
#include <cctype>

#include "record/fixtures.hpp"
#include "record/rng.hpp"

namespace record {

uint8_t Image::at(int x, int y) const {
  x = std::clamp(x, 0, width - 1);
  y = std::clamp(y, 0, height - 1);
  return pixels[static_cast<size_t>(y) * width + x];
}

namespace {

class PgmReader {
 public:
  explicit PgmReader(std::string_view d) : data_(d) {}

  void skip_space() {
    while (pos_ < data_.size()) {
      if (data_[pos_] == '#') {
        while (pos_ < data_.size() && data_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(data_[pos_]))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  int number() {
    skip_space();
    if (pos_ >= data_.size() || !std::isdigit(static_cast<unsigned char>(data_[pos_]))) {
      throw ImageError("malformed PGM: expected a number");
    }
    long v = 0;
    while (pos_ < data_.size() && std::isdigit(static_cast<unsigned char>(data_[pos_]))) {
      v = v * 10 + (data_[pos_++] - '0');
      if (v > 1'000'000) throw ImageError("malformed PGM: number too large");
    }
    return static_cast<int>(v);
  }

  std::string_view take(size_t n) {
    if (pos_ + n > data_.size()) throw ImageError("malformed PGM: truncated pixel data");
    auto s = data_.substr(pos_, n);
    pos_ += n;
    return s;
  }

  size_t pos_ = 0;
  std::string_view data_;
};

}  // namespace

Image read_pgm(std::string_view data) {
  if (data.size() < 2 || data[0] != 'P' || (data[1] != '2' && data[1] != '5')) {
    throw ImageError("not a PGM file (expected P2 or P5)");
  }
  const bool binary = data[1] == '5';
  PgmReader in(data.substr(2));
  const int w = in.number();
  const int h = in.number();
  const int maxval = in.number();
  if (w <= 0 || h <= 0) throw ImageError("malformed PGM: empty image");
  if (maxval <= 0 || maxval > 65535) throw ImageError("malformed PGM: bad maxval");

  Image img(w, h);
  auto scale = [&](int v) {
    if (v > maxval) throw ImageError("malformed PGM: sample exceeds maxval");
    return static_cast<uint8_t>(maxval == 255 ? v : (v * 255 + maxval / 2) / maxval);
  };
  if (binary) {
    if (in.pos_ >= in.data_.size() || !std::isspace(static_cast<unsigned char>(in.data_[in.pos_]))) {
      throw ImageError("malformed PGM: missing separator before pixel data");
    }
    ++in.pos_;
    const size_t bytes = maxval < 256 ? 1 : 2;
    auto raw = in.take(img.pixels.size() * bytes);
    for (size_t i = 0; i < img.pixels.size(); ++i) {
      int v = static_cast<unsigned char>(raw[i * bytes]);
      if (bytes == 2) v = (v << 8) | static_cast<unsigned char>(raw[i * bytes + 1]);
      img.pixels[i] = scale(v);
    }
  } else {
    for (auto& p : img.pixels) p = scale(in.number());
  }
  return img;
}

std::string write_pgm(const Image& img) {
  std::string out = "P5\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
  out.append(img.pixels.begin(), img.pixels.end());
  return out;
}

Image synthetic_scene(int width, int height) {
  Image img(width, height, 30);
  auto rect = [&](int x0, int y0, int x1, int y1, uint8_t v) {
    for (int y = y0; y < y1 && y < height; ++y) {
      for (int x = x0; x < x1 && x < width; ++x) img.set(x, y, v);
    }
  };
  rect(width * 1 / 8, height * 3 / 16, width * 7 / 16, height * 9 / 16, 220);
  rect(width * 9 / 16, height * 7 / 16, width * 7 / 8, height * 7 / 8, 200);
  return img;
}

Image add_salt_and_pepper(const Image& img, double p, uint64_t seed) {
  if (p < 0 || p >= 1) throw ImageError("noise probability must be in [0, 1)");
  Image out = img;
  SplitMix64 gen(seed);
  for (auto& px : out.pixels) {
    const uint64_t draw = gen.next();
    const double u = static_cast<double>(draw >> 11) * 0x1.0p-53;
    if (u < p) px = (draw & 1) ? 255 : 0;
  }
  return out;
}

Image binarize(const Image& img, int threshold) {
  if (threshold < 0 || threshold > 255) throw ImageError("threshold must be in [0, 255]");
  Image out(img.width, img.height);
  for (size_t i = 0; i < img.pixels.size(); ++i) out.pixels[i] = img.pixels[i] >= threshold ? 1 : 0;
  return out;
}

Image median3x3(const Image& bits) {
  Image out(bits.width, bits.height);
  for (int y = 0; y < bits.height; ++y) {
    for (int x = 0; x < bits.width; ++x) {
      std::array<uint8_t, 9> v{};
      for (int k = 0; k < 9; ++k) v[k] = bits.at(x + k % 3 - 1, y + k / 3 - 1);
      std::nth_element(v.begin(), v.begin() + 4, v.end());
      out.set(x, y, v[4]);
    }
  }
  return out;
}

std::array<bool, 9> window_bits(const Image& bits, int x, int y) {
  std::array<bool, 9> w{};
  for (int k = 0; k < 9; ++k) w[k] = bits.at(x + k % 3 - 1, y + k / 3 - 1) != 0;
  return w;
}

Image edge_map(const Image& bits) {
  Image out(bits.width, bits.height);
  for (int y = 0; y < bits.height; ++y) {
    for (int x = 0; x < bits.width; ++x) {
      const uint8_t c = bits.at(x, y);
      out.set(x, y, (c != bits.at(x + 1, y) || c != bits.at(x, y + 1)) ? 1 : 0);
    }
  }
  return out;
}

double f1_score(const std::vector<bool>& predicted, const std::vector<bool>& truth) {
  if (predicted.size() != truth.size()) throw ImageError("f1: size mismatch");
  double tp = 0, fp = 0, fn = 0;
  for (size_t i = 0; i < predicted.size(); ++i) {
    tp += predicted[i] && truth[i];
    fp += predicted[i] && !truth[i];
    fn += !predicted[i] && truth[i];
  }
  if (tp == 0) return 0;
  return 2 * tp / (2 * tp + fp + fn);
}

std::string_view variant_name(DemoVariant v) {
  switch (v) {
    case DemoVariant::Plain:
      return "plain";
    case DemoVariant::Record1:
      return "record1";
    case DemoVariant::Record2:
      return "record2";
  }
  return "?";
}

std::optional<DemoVariant> variant_from_name(std::string_view name) {
  for (auto v : {DemoVariant::Plain, DemoVariant::Record1, DemoVariant::Record2}) {
    if (variant_name(v) == name) return v;
  }
  return std::nullopt;
}

namespace {

// In-window neighbour pairs (raster indices): six horizontal, six vertical.
constexpr std::array<std::pair<int, int>, 12> kNeighbourPairs{{
    {0, 1}, {1, 2}, {3, 4}, {4, 5}, {6, 7}, {7, 8}, {0, 3}, {3, 6}, {1, 4}, {4, 7}, {2, 5}, {5, 8},
}};
// Centre against its diagonal neighbours.
constexpr std::array<std::pair<int, int>, 4> kDiagonalPairs{{{4, 0}, {4, 2}, {4, 6}, {4, 8}}};
constexpr int kCentre = 4, kRight = 5, kDown = 7;

}  // namespace

DemoResult demo_image(const DemoConfig& cfg) {
  if (cfg.input.width <= 0 || cfg.input.height <= 0) throw ImageError("empty input image");
  DemoResult res;
  // Noise gets its own stream so it never correlates with the random bits.
  res.original = add_salt_and_pepper(cfg.input, cfg.noise, SplitMix64(cfg.seed ^ 0x6E6F697365ULL).next());
  const Image bits = binarize(res.original, cfg.threshold);
  const int W = bits.width, H = bits.height;
  const size_t pixels = static_cast<size_t>(W) * H;

  std::vector<std::vector<bool>> rows;
  rows.reserve(pixels);
  for (int y = 0; y < H; ++y) {
    for (int x = 0; x < W; ++x) {
      auto w = window_bits(bits, x, y);
      rows.emplace_back(w.begin(), w.end());
    }
  }
  const Netlist f = fixtures::maj9();
  const Stimulus stim = Stimulus::from_rows(rows, 9);

  std::optional<PartitionedDesign> design;
  SimTrace trace;
  if (cfg.variant == DemoVariant::Plain) {
    trace = simulate(f, stim);
  } else {
    const int groups = cfg.variant == DemoVariant::Record1 ? 1 : 2;
    design = transform(f, RecordConfig::all_inputs(f, groups));
    design->rng = RngSpec{cfg.seed};
    trace = simulate(*design, stim);
  }
  const BitStream& out = design ? trace.wire(design->decoded_outputs[0]) : trace.wire(f.outputs[0]);

  res.enhanced = Image(W, H);
  for (size_t i = 0; i < pixels; ++i) res.enhanced.pixels[i] = out.get(i) ? 255 : 0;
  const Image oracle = median3x3(bits);
  res.enhanced_matches_oracle = true;
  for (size_t i = 0; i < pixels; ++i) {
    if ((res.enhanced.pixels[i] != 0) != (oracle.pixels[i] != 0)) res.enhanced_matches_oracle = false;
  }

  const LeakTrace leak = design ? tap(*design, trace) : tap_plain(trace);
  const GroundTruth truth = design ? GroundTruth::from_design(*design, trace) : GroundTruth::from_plain(trace);
  // The Trojan watches the bus into replica 0 (the bare inputs when unprotected).
  auto bus = [&](int i) { return design ? design->replica_inputs[0][static_cast<size_t>(i)] : f.inputs[static_cast<size_t>(i)]; };
  auto group = [&](int i) { return design ? design->config.group_of(f.inputs[static_cast<size_t>(i)]) : 0; };

  std::vector<WirePair> pairs;
  for (auto [a, b] : kNeighbourPairs) pairs.push_back({bus(a), bus(b)});
  for (auto [a, b] : kDiagonalPairs) pairs.push_back({bus(a), bus(b)});
  res.report = leak_report(leak, truth, pairs);

  // Gradient recovery over neighbour pairs, split by whether the pair shares a bit.
  std::vector<bool> same_guess, same_truth;
  size_t cross_hits = 0;
  for (auto [a, b] : kNeighbourPairs) {
    const BitStream guess = reconstruct(leak, Gradient{{{bus(a), bus(b)}}})[0];
    const BitStream real = truth.input(f.inputs[a]) ^ truth.input(f.inputs[b]);
    if (group(a) == group(b)) {
      for (size_t c = 0; c < guess.size(); ++c) {
        same_guess.push_back(guess.get(c));
        same_truth.push_back(real.get(c));
      }
      res.same_group_pairs += guess.size();
    } else {
      cross_hits += agreement(guess, real);
      res.cross_group_pairs += guess.size();
    }
  }
  if (res.same_group_pairs) res.same_group_f1 = f1_score(same_guess, same_truth);
  if (res.cross_group_pairs) {
    res.cross_group_accuracy = static_cast<double>(cross_hits) / static_cast<double>(res.cross_group_pairs);
  }

  // Leaked image and the Trojan's edge estimate.
  const Image truth_edges = edge_map(binarize(res.enhanced, 128));
  std::vector<bool> predicted(pixels), reference(pixels);
  for (size_t i = 0; i < pixels; ++i) reference[i] = truth_edges.pixels[i] != 0;
  if (!design) {
    res.leaked = res.enhanced;
    const Image e = edge_map(binarize(res.leaked, 128));
    for (size_t i = 0; i < pixels; ++i) predicted[i] = e.pixels[i] != 0;
  } else {
    res.leaked = Image(W, H, 128);
    const BitStream right = leak.wire(bus(kCentre)) ^ leak.wire(bus(kRight));
    const BitStream down = leak.wire(bus(kCentre)) ^ leak.wire(bus(kDown));
    const bool right_known = group(kCentre) == group(kRight);
    const bool down_known = group(kCentre) == group(kDown);
    for (size_t i = 0; i < pixels; ++i) {
      const bool edge = (right_known && right.get(i)) || (down_known && down.get(i));
      uint8_t v = 128;  // masked by a bit the Trojan cannot cancel
      if (edge) {
        v = 0;
      } else if (right_known && down_known) {
        v = 255;
      }
      res.leaked.pixels[i] = v;
      predicted[i] = edge;
    }
  }
  res.structural_score = f1_score(predicted, reference);
  return res;
}

}  // namespace record
