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

#include "vesseltune/morphology.hpp"
#include "vesseltune/params.hpp"
#include "vesseltune/types.hpp"
#include "vesseltune/vesselness.hpp"

namespace vtn {

struct SegmentOptions {
  bool dark_vessels = true;
  std::vector<double> extra_scales;  // opt-in multiscale response
  int border_band = 100;             // clamped below min(w,h)/2 for small frames
  double border_cutoff = 50.0;
};

struct SegmentResult {
  BinaryMask mask;              // re-embedded into the original frame
  VesselnessResponse response;  // on the border-stripped frame
  CropRecord crop;
};

/// The full filter-to-threshold-to-morphology pipeline:
/// strip dark borders -> response (apply_filter) -> binarize ->
/// Meijering/Sato: closing then small-object removal,
/// Frangi: hole filling then small-object removal ->
/// re-embed into the original frame (stripped margins are background).
SegmentResult segment_full(const GrayImage& img, const FilterParams& params,
                           const SegmentOptions& opts = {});

BinaryMask segment(const GrayImage& img, const FilterParams& params,
                   const SegmentOptions& opts = {});

}  // namespace vtn
