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
#include <stdexcept>
#include <string>
#include <vector>

namespace vtn {

/// Error type for all recoverable failures (I/O, format, contract violations).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// 2-D grayscale raster, intensities in [0,1], row-major.
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<double> data;  // size == width*height

  GrayImage() = default;
  GrayImage(int w, int h, double fill = 0.0)
      : width(w), height(h), data(static_cast<size_t>(w) * h, fill) {}

  double& at(int x, int y) { return data[static_cast<size_t>(y) * width + x]; }
  double at(int x, int y) const { return data[static_cast<size_t>(y) * width + x]; }
  size_t size() const { return data.size(); }
  bool same_shape(const GrayImage& o) const { return width == o.width && height == o.height; }
};

/// 2-D boolean raster; nonzero = foreground.
struct BinaryMask {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> data;

  BinaryMask() = default;
  BinaryMask(int w, int h, uint8_t fill = 0)
      : width(w), height(h), data(static_cast<size_t>(w) * h, fill) {}

  uint8_t& at(int x, int y) { return data[static_cast<size_t>(y) * width + x]; }
  uint8_t at(int x, int y) const { return data[static_cast<size_t>(y) * width + x]; }
  size_t size() const { return data.size(); }
  bool same_shape(const BinaryMask& o) const { return width == o.width && height == o.height; }

  int64_t area() const {
    int64_t n = 0;
    for (uint8_t v : data) n += v != 0;
    return n;
  }
  bool operator==(const BinaryMask& o) const {
    if (!same_shape(o)) return false;
    for (size_t i = 0; i < data.size(); ++i)
      if ((data[i] != 0) != (o.data[i] != 0)) return false;
    return true;
  }
};

/// Rows/columns removed per side by border stripping, so masks computed on the
/// cropped frame can be re-embedded into the original one.
struct CropRecord {
  int top = 0;
  int bottom = 0;
  int left = 0;
  int right = 0;
  int orig_width = 0;
  int orig_height = 0;

  bool empty() const { return top == 0 && bottom == 0 && left == 0 && right == 0; }
};

/// Real raster of second Gaussian derivatives at one scale. hxy holds both
/// off-diagonal entries of the symmetric Hessian.
struct HessianField {
  double sigma = 0.0;
  int width = 0;
  int height = 0;
  std::vector<double> hxx, hxy, hyy;
};

enum class EigenOrder {
  by_abs_desc,  // |lam1| >= |lam2|  (Meijering / Frangi convention)
  by_abs_asc,   // |lam1| <  |lam2|  (Sato convention)
};

/// Per-pixel eigenvalues of the Hessian; ordering is fixed at construction.
struct EigenField {
  int width = 0;
  int height = 0;
  EigenOrder order = EigenOrder::by_abs_desc;
  std::vector<double> lam1, lam2;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw Error(msg);
}

}  // namespace vtn
