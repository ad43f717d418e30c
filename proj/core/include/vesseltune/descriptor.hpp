// Copyright 2026 The vesseltune authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "vesseltune/types.hpp"

namespace vtn {

/// Fixed-length per-image descriptor:
/// histogram[32] ++ area[16] ++ perimeter[16] ++ euler[16]
///              ++ betti0[20] ++ betti1[20] ++ betti2[20]
/// Each block is independently min-max normalized to [0,1]; a constant block
/// becomes all zeros. betti2 is identically zero for 2-D images.
struct Descriptor140 {
  static constexpr int kSize = 140;
  static constexpr int kHistogramBins = 32;
  static constexpr int kMinkowskiSamples = 16;
  static constexpr int kBettiSamples = 20;

  std::array<double, kSize> values{};

  static const std::string& layout_tag();
};

/// Foreground iff intensity >= tau.
BinaryMask superlevel_set(const GrayImage& img, double tau);

struct MinkowskiFunctionals {
  int64_t area = 0;       // foreground pixel count
  int64_t perimeter = 0;  // 4-adjacent foreground/background pairs, border = background
  int64_t euler = 0;      // beta0 - beta1 (foreground 8-conn, background 4-conn)
};

MinkowskiFunctionals minkowski(const BinaryMask& mask);

struct BettiPair {
  int64_t beta0 = 0;  // 8-connected foreground components
  int64_t beta1 = 0;  // 4-connected background components not touching the border
};

BettiPair betti_numbers(const BinaryMask& mask);

struct BettiCurves {
  std::vector<int64_t> beta0, beta1, beta2;
};

/// Betti numbers of the superlevel-set filtration at the given thresholds
/// (sorted ascending in [0,1]). beta2 is identically zero in 2-D.
BettiCurves betti_curve(const GrayImage& img, const std::vector<double>& taus);

/// Uniform threshold grids used by extract_descriptor: i/17 (i=1..16) for the
/// Minkowski block, i/21 (i=1..20) for the Betti block.
std::vector<double> minkowski_thresholds();
std::vector<double> betti_thresholds();

Descriptor140 extract_descriptor(const GrayImage& img);

}  // namespace vtn
