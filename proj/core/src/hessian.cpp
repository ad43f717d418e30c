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

#include "vesseltune/hessian.hpp"

#include <cmath>

namespace vtn {
namespace {

enum class DerivOrder { none, first, second };

// Sampled Gaussian (derivative) kernel on [-radius, radius].
// The smoothing kernel is normalized to unit sum; derivative kernels are
// corrected to zero DC so constant images produce exactly zero response.
std::vector<double> gaussian_kernel(double sigma, DerivOrder order, int radius) {
  std::vector<double> k(2 * radius + 1);
  const double s2 = sigma * sigma;
  for (int i = -radius; i <= radius; ++i) {
    const double x = i;
    const double g = std::exp(-x * x / (2.0 * s2));
    switch (order) {
      case DerivOrder::none:
        k[i + radius] = g;
        break;
      case DerivOrder::first:
        k[i + radius] = -x / s2 * g;
        break;
      case DerivOrder::second:
        k[i + radius] = (x * x - s2) / (s2 * s2) * g;
        break;
    }
  }
  if (order == DerivOrder::none) {
    double sum = 0.0;
    for (double v : k) sum += v;
    for (double& v : k) v /= sum;
  } else {
    // Scale by the Gaussian normalization constant, then remove residual DC
    // introduced by truncation (first-derivative kernel is odd, already 0).
    const double norm = 1.0 / (std::sqrt(2.0 * M_PI) * sigma);
    for (double& v : k) v *= norm;
    double mean = 0.0;
    for (double v : k) mean += v;
    mean /= static_cast<double>(k.size());
    for (double& v : k) v -= mean;
  }
  return k;
}

inline int reflect_index(int i, int n) {
  // Half-sample symmetric reflection: (a b c | c b a).
  if (n == 1) return 0;
  const int period = 2 * n;
  i %= period;
  if (i < 0) i += period;
  return i < n ? i : period - 1 - i;
}

// Separable convolution: kernel kx along rows, ky along columns.
std::vector<double> conv_separable(const GrayImage& img, const std::vector<double>& kx,
                                   const std::vector<double>& ky) {
  const int w = img.width, h = img.height;
  const int rx = (static_cast<int>(kx.size()) - 1) / 2;
  const int ry = (static_cast<int>(ky.size()) - 1) / 2;

  std::vector<double> tmp(static_cast<size_t>(w) * h);
  for (int y = 0; y < h; ++y) {
    const double* row = img.data.data() + static_cast<size_t>(y) * w;
    double* out = tmp.data() + static_cast<size_t>(y) * w;
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      if (x >= rx && x + rx < w) {
        const double* p = row + x - rx;
        for (int i = 0; i < 2 * rx + 1; ++i) acc += kx[i] * p[i];
      } else {
        for (int i = -rx; i <= rx; ++i) acc += kx[i + rx] * row[reflect_index(x + i, w)];
      }
      out[x] = acc;
    }
  }

  std::vector<double> res(static_cast<size_t>(w) * h);
  for (int y = 0; y < h; ++y) {
    double* out = res.data() + static_cast<size_t>(y) * w;
    if (y >= ry && y + ry < h) {
      const double* base = tmp.data() + static_cast<size_t>(y - ry) * w;
      for (int x = 0; x < w; ++x) {
        double acc = 0.0;
        const double* p = base + x;
        for (int i = 0; i < 2 * ry + 1; ++i) acc += ky[i] * p[static_cast<size_t>(i) * w];
        out[x] = acc;
      }
    } else {
      for (int x = 0; x < w; ++x) {
        double acc = 0.0;
        for (int i = -ry; i <= ry; ++i)
          acc += ky[i + ry] * tmp[static_cast<size_t>(reflect_index(y + i, h)) * w + x];
        out[x] = acc;
      }
    }
  }
  return res;
}

}  // namespace

HessianField gaussian_hessian(const GrayImage& img, double sigma) {
  require(sigma > 0.0, "gaussian_hessian: sigma must be positive");
  const int radius = static_cast<int>(std::ceil(4.0 * sigma));

  const auto g0 = gaussian_kernel(sigma, DerivOrder::none, radius);
  const auto g1 = gaussian_kernel(sigma, DerivOrder::first, radius);
  const auto g2 = gaussian_kernel(sigma, DerivOrder::second, radius);

  HessianField out;
  out.sigma = sigma;
  out.width = img.width;
  out.height = img.height;
  out.hxx = conv_separable(img, g2, g0);
  out.hxy = conv_separable(img, g1, g1);
  out.hyy = conv_separable(img, g0, g2);

  const double gamma_norm = sigma * sigma;  // gamma = 2
  for (double& v : out.hxx) v *= gamma_norm;
  for (double& v : out.hxy) v *= gamma_norm;
  for (double& v : out.hyy) v *= gamma_norm;
  return out;
}

EigenField hessian_eigen(const HessianField& h, EigenOrder order) {
  EigenField e;
  e.width = h.width;
  e.height = h.height;
  e.order = order;
  const size_t n = h.hxx.size();
  e.lam1.resize(n);
  e.lam2.resize(n);
  for (size_t i = 0; i < n; ++i) {
    const double a = h.hxx[i], b = h.hxy[i], c = h.hyy[i];
    const double half_tr = 0.5 * (a + c);
    const double half_diff = 0.5 * (a - c);
    const double disc = std::sqrt(half_diff * half_diff + b * b);
    const double lo = half_tr - disc;  // lo <= hi
    const double hi = half_tr + disc;
    const double alo = std::fabs(lo), ahi = std::fabs(hi);
    double big, small;
    if (alo == ahi) {
      big = lo;  // tie: keep algebraic order lam1 <= lam2
      small = hi;
    } else if (alo > ahi) {
      big = lo;
      small = hi;
    } else {
      big = hi;
      small = lo;
    }
    if (order == EigenOrder::by_abs_desc) {
      e.lam1[i] = big;
      e.lam2[i] = small;
    } else {
      e.lam1[i] = small;
      e.lam2[i] = big;
    }
  }
  return e;
}

}  // namespace vtn
