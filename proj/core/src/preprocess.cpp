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

#include "vesseltune/preprocess.hpp"

#include <algorithm>

namespace vtn {
namespace {

// Mean on the 0-255 scale of one row/column segment of the working window.
double line_mean255(const GrayImage& img, bool row, int index, int lo, int hi) {
  double s = 0.0;
  if (row) {
    for (int x = lo; x < hi; ++x) s += img.at(x, index);
  } else {
    for (int y = lo; y < hi; ++y) s += img.at(index, y);
  }
  return 255.0 * s / std::max(1, hi - lo);
}

}  // namespace

std::pair<GrayImage, CropRecord> strip_dark_borders(const GrayImage& img, int band, double cutoff) {
  require(img.width >= 1 && img.height >= 1, "strip_dark_borders: empty image");
  require(band < std::min(img.width, img.height) / 2,
          "strip_dark_borders: band must be < min(width,height)/2");

  CropRecord crop;
  crop.orig_width = img.width;
  crop.orig_height = img.height;

  // Working window [x0,x1) x [y0,y1). Each side scans inward over the current
  // window and stops at the first retained line; sides are revisited until a
  // full cycle removes nothing, which makes the operation idempotent.
  int x0 = 0, x1 = img.width, y0 = 0, y1 = img.height;
  bool changed = true;
  while (changed) {
    changed = false;
    while (y0 < band && y1 - y0 > 1 && line_mean255(img, true, y0, x0, x1) < cutoff) {
      ++y0;
      changed = true;
    }
    while (crop.orig_height - y1 < band && y1 - y0 > 1 &&
           line_mean255(img, true, y1 - 1, x0, x1) < cutoff) {
      --y1;
      changed = true;
    }
    while (x0 < band && x1 - x0 > 1 && line_mean255(img, false, x0, y0, y1) < cutoff) {
      ++x0;
      changed = true;
    }
    while (crop.orig_width - x1 < band && x1 - x0 > 1 &&
           line_mean255(img, false, x1 - 1, y0, y1) < cutoff) {
      --x1;
      changed = true;
    }
  }

  crop.top = y0;
  crop.bottom = img.height - y1;
  crop.left = x0;
  crop.right = img.width - x1;

  if (crop.empty()) return {img, crop};

  GrayImage out(x1 - x0, y1 - y0);
  for (int y = y0; y < y1; ++y)
    for (int x = x0; x < x1; ++x) out.at(x - x0, y - y0) = img.at(x, y);
  return {std::move(out), crop};
}

BinaryMask embed_mask(const BinaryMask& cropped, const CropRecord& crop) {
  require(cropped.width == crop.orig_width - crop.left - crop.right &&
              cropped.height == crop.orig_height - crop.top - crop.bottom,
          "embed_mask: mask does not match crop record");
  BinaryMask out(crop.orig_width, crop.orig_height, 0);
  for (int y = 0; y < cropped.height; ++y)
    for (int x = 0; x < cropped.width; ++x)
      out.at(x + crop.left, y + crop.top) = cropped.at(x, y);
  return out;
}

GrayImage minmax_normalize(const GrayImage& img) {
  double lo = 1e300, hi = -1e300;
  for (double v : img.data) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  GrayImage out(img.width, img.height);
  if (hi - lo <= 0.0) return out;
  const double inv = 1.0 / (hi - lo);
  for (size_t i = 0; i < img.size(); ++i) out.data[i] = (img.data[i] - lo) * inv;
  return out;
}

}  // namespace vtn
