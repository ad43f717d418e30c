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

#include <cstdint>

#include "vesseltune/types.hpp"
#include "vesseltune/vesselness.hpp"

namespace vtn {

/// Foreground iff response >= threshold.
BinaryMask binarize(const VesselnessResponse& resp, double threshold);

/// Morphological closing (dilation then erosion) with the discrete disk
/// {(dx,dy) : dx^2+dy^2 <= r^2}, computed as on the infinite plane so the
/// result contains the input everywhere including at image borders.
BinaryMask binary_close(const BinaryMask& mask, int disk_radius);

/// Deletes connected components with area < min_size.
BinaryMask remove_small_objects(const BinaryMask& mask, int64_t min_size, int connectivity = 8);

/// Fills background components (4-connected, complementary to the 8-connected
/// foreground) that do not touch the image border and have area <= max_hole.
BinaryMask fill_small_holes(const BinaryMask& mask, int64_t max_hole);

/// Connected-component labeling. Labels are 0..n-1 in first-pixel scan order;
/// background pixels get label -1.
struct Labeling {
  int width = 0;
  int height = 0;
  int count = 0;
  std::vector<int32_t> labels;
  std::vector<int64_t> areas;
  std::vector<uint8_t> touches_border;  // per label

  int32_t at(int x, int y) const { return labels[static_cast<size_t>(y) * width + x]; }
};

Labeling label_components(const BinaryMask& mask, int connectivity);

/// Labeling of the complement (background as foreground) with 4-connectivity.
Labeling label_background(const BinaryMask& mask);

}  // namespace vtn
