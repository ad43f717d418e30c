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

#include <utility>

#include "vesseltune/types.hpp"

namespace vtn {

/// Removes dark frame borders: rows/columns within `band` pixels of an edge
/// whose mean intensity on the 0-255 scale is below `cutoff` are dropped.
/// Scanning proceeds inward from each edge and stops at the first retained
/// row/column, so interior dark structures are never removed.
std::pair<GrayImage, CropRecord> strip_dark_borders(const GrayImage& img, int band = 100,
                                                    double cutoff = 50.0);

/// Re-embeds a mask computed on the cropped frame into the original frame;
/// stripped margins become background.
BinaryMask embed_mask(const BinaryMask& cropped, const CropRecord& crop);

/// Linearly rescales to [0,1]; a constant image maps to all zeros.
GrayImage minmax_normalize(const GrayImage& img);

}  // namespace vtn
