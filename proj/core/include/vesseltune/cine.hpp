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

#include <string>
#include <vector>

#include "vesseltune/types.hpp"

namespace vtn {

/// Ordered frames of one angiographic run; all frames share dimensions.
struct CineSequence {
  std::vector<GrayImage> frames;
  double fps = 15.0;  // metadata only
};

/// Normalized intensity histogram (probability mass function) of one frame.
struct FrameHistogram {
  std::vector<int64_t> counts;
  std::vector<double> probabilities;
};

/// Inclusive bin index range [first, last].
struct BinRange {
  int first = 0;
  int last = 63;
};

/// Uniform binning of [0,1] into `bins` bins; intensity 1.0 lands in the
/// last bin.
FrameHistogram frame_histogram(const GrayImage& frame, int bins = 256);

/// Selects argmax over frames of the tallest histogram peak inside the
/// low-intensity band; ties go to the earliest frame index.
int best_frame(const CineSequence& cine, BinRange low_band = {0, 63}, int bins = 256);

/// Loads a cine as the sorted image files of a directory (natural numeric
/// order when file stems are numbered, lexicographic otherwise).
CineSequence load_cine_dir(const std::string& dir);

}  // namespace vtn
