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

#include "vesseltune/segment.hpp"

#include <algorithm>
#include <cmath>

#include "vesseltune/preprocess.hpp"

namespace vtn {

SegmentResult segment_full(const GrayImage& img, const FilterParams& params,
                           const SegmentOptions& opts) {
  SegmentResult res;

  const int max_band = (std::min(img.width, img.height) - 1) / 2;
  const int band = std::min(opts.border_band, max_band);
  GrayImage work = img;
  if (band >= 1) {
    auto [cropped, crop] = strip_dark_borders(img, band, opts.border_cutoff);
    work = std::move(cropped);
    res.crop = crop;
  } else {
    res.crop.orig_width = img.width;
    res.crop.orig_height = img.height;
  }

  ApplyOptions apply_opts;
  apply_opts.dark_vessels = opts.dark_vessels;
  apply_opts.extra_scales = opts.extra_scales;
  res.response = apply_filter(work, params, apply_opts);

  BinaryMask mask = binarize(res.response, params.threshold);
  const auto min_region = static_cast<int64_t>(std::llround(params.min_region));
  if (params.kind == FilterKind::frangi) {
    mask = fill_small_holes(mask, static_cast<int64_t>(std::llround(params.max_hole)));
    mask = remove_small_objects(mask, min_region);
  } else {
    const int radius = std::max(1, static_cast<int>(std::lround(params.disk_size)));
    mask = binary_close(mask, radius);
    mask = remove_small_objects(mask, min_region);
  }

  res.mask = embed_mask(mask, res.crop);
  return res;
}

BinaryMask segment(const GrayImage& img, const FilterParams& params, const SegmentOptions& opts) {
  return segment_full(img, params, opts).mask;
}

}  // namespace vtn
