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

#include "vesseltune/morphology.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace vtn {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// 1-D squared-distance transform lower envelope (Felzenszwalb-Huttenlocher).
// Cells with f == inf contribute no parabola.
void dt1d(const double* f, double* d, int n, int* v, double* z) {
  auto intersect = [&](int q, int p) {
    return ((f[q] + q * static_cast<double>(q)) - (f[p] + p * static_cast<double>(p))) /
           (2.0 * (q - p));
  };

  int k = -1;
  for (int q = 0; q < n; ++q) {
    if (f[q] == kInf) continue;
    if (k < 0) {
      k = 0;
      v[0] = q;
      z[0] = -kInf;
      z[1] = kInf;
      continue;
    }
    double s = intersect(q, v[k]);
    while (s <= z[k]) {
      --k;
      if (k < 0) break;
      s = intersect(q, v[k]);
    }
    if (k < 0) {
      k = 0;
      v[0] = q;
      z[0] = -kInf;
      z[1] = kInf;
    } else {
      ++k;
      v[k] = q;
      z[k] = s;
      z[k + 1] = kInf;
    }
  }

  if (k < 0) {
    std::fill(d, d + n, kInf);
    return;
  }
  k = 0;
  for (int q = 0; q < n; ++q) {
    while (z[k + 1] < q) ++k;
    d[q] = (q - v[k]) * static_cast<double>(q - v[k]) + f[v[k]];
  }
}

// Squared Euclidean distance to the nearest seed (seed cells have value 0).
std::vector<double> squared_edt(const std::vector<uint8_t>& seed, int w, int h) {
  std::vector<double> g(static_cast<size_t>(w) * h);
  for (size_t i = 0; i < g.size(); ++i) g[i] = seed[i] ? 0.0 : kInf;

  const int m = std::max(w, h);
  std::vector<double> f(m), d(m), z(m + 1);
  std::vector<int> v(m);

  for (int x = 0; x < w; ++x) {
    for (int y = 0; y < h; ++y) f[y] = g[static_cast<size_t>(y) * w + x];
    dt1d(f.data(), d.data(), h, v.data(), z.data());
    for (int y = 0; y < h; ++y) g[static_cast<size_t>(y) * w + x] = d[y];
  }
  for (int y = 0; y < h; ++y) {
    double* row = g.data() + static_cast<size_t>(y) * w;
    std::copy(row, row + w, f.begin());
    dt1d(f.data(), d.data(), w, v.data(), z.data());
    std::copy(d.begin(), d.begin() + w, row);
  }
  return g;
}

}  // namespace

BinaryMask binarize(const VesselnessResponse& resp, double threshold) {
  require(threshold >= 0.0 && threshold <= 1.0, "binarize: threshold must be in [0,1]");
  BinaryMask m(resp.width, resp.height);
  for (size_t i = 0; i < resp.data.size(); ++i) m.data[i] = resp.data[i] >= threshold ? 1 : 0;
  return m;
}

BinaryMask binary_close(const BinaryMask& mask, int disk_radius) {
  require(disk_radius >= 1, "binary_close: disk_radius must be >= 1");
  const int r = disk_radius;
  const int pw = mask.width + 2 * r, ph = mask.height + 2 * r;
  const double r2 = static_cast<double>(r) * r;

  std::vector<uint8_t> fg(static_cast<size_t>(pw) * ph, 0);
  for (int y = 0; y < mask.height; ++y)
    for (int x = 0; x < mask.width; ++x)
      fg[static_cast<size_t>(y + r) * pw + (x + r)] = mask.at(x, y) ? 1 : 0;

  // Dilate: pixels within distance r of the foreground.
  std::vector<double> dist = squared_edt(fg, pw, ph);
  std::vector<uint8_t> dilated(fg.size());
  for (size_t i = 0; i < fg.size(); ++i) dilated[i] = dist[i] <= r2 ? 0 : 1;  // complement

  // Erode the dilation: pixels farther than r from its complement.
  dist = squared_edt(dilated, pw, ph);
  BinaryMask out(mask.width, mask.height);
  for (int y = 0; y < mask.height; ++y)
    for (int x = 0; x < mask.width; ++x)
      out.at(x, y) = dist[static_cast<size_t>(y + r) * pw + (x + r)] > r2 ? 1 : 0;
  return out;
}

Labeling label_components(const BinaryMask& mask, int connectivity) {
  require(connectivity == 4 || connectivity == 8, "label_components: connectivity must be 4 or 8");
  const int w = mask.width, h = mask.height;
  Labeling out;
  out.width = w;
  out.height = h;
  out.labels.assign(static_cast<size_t>(w) * h, -1);

  std::vector<int32_t> parent;
  parent.reserve(1024);
  auto find = [&parent](int32_t a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  };
  auto unite = [&parent, &find](int32_t a, int32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };

  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!mask.at(x, y)) continue;
      const size_t idx = static_cast<size_t>(y) * w + x;
      int32_t lbl = -1;
      auto consider = [&](int nx, int ny) {
        if (nx < 0 || ny < 0 || nx >= w) return;
        const int32_t nl = out.labels[static_cast<size_t>(ny) * w + nx];
        if (nl < 0) return;
        if (lbl < 0)
          lbl = find(nl);
        else
          unite(lbl, nl);
      };
      consider(x - 1, y);
      consider(x, y - 1);
      if (connectivity == 8) {
        consider(x - 1, y - 1);
        consider(x + 1, y - 1);
      }
      if (lbl < 0) {
        lbl = static_cast<int32_t>(parent.size());
        parent.push_back(lbl);
      }
      out.labels[idx] = lbl;
    }
  }

  // Compact provisional labels into 0..n-1 by first-pixel scan order.
  std::vector<int32_t> remap(parent.size(), -1);
  int32_t next = 0;
  for (size_t i = 0; i < out.labels.size(); ++i) {
    int32_t& l = out.labels[i];
    if (l < 0) continue;
    const int32_t root = find(l);
    if (remap[root] < 0) remap[root] = next++;
    l = remap[root];
  }
  out.count = next;
  out.areas.assign(next, 0);
  out.touches_border.assign(next, 0);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const int32_t l = out.at(x, y);
      if (l < 0) continue;
      ++out.areas[l];
      if (x == 0 || y == 0 || x == w - 1 || y == h - 1) out.touches_border[l] = 1;
    }
  }
  return out;
}

Labeling label_background(const BinaryMask& mask) {
  BinaryMask inv(mask.width, mask.height);
  for (size_t i = 0; i < mask.size(); ++i) inv.data[i] = mask.data[i] ? 0 : 1;
  return label_components(inv, 4);
}

BinaryMask remove_small_objects(const BinaryMask& mask, int64_t min_size, int connectivity) {
  require(min_size >= 0, "remove_small_objects: min_size must be >= 0");
  const Labeling lab = label_components(mask, connectivity);
  BinaryMask out(mask.width, mask.height);
  for (size_t i = 0; i < mask.size(); ++i) {
    const int32_t l = lab.labels[i];
    out.data[i] = (l >= 0 && lab.areas[l] >= min_size) ? 1 : 0;
  }
  return out;
}

BinaryMask fill_small_holes(const BinaryMask& mask, int64_t max_hole) {
  require(max_hole >= 0, "fill_small_holes: max_hole must be >= 0");
  const Labeling bg = label_background(mask);
  BinaryMask out = mask;
  for (size_t i = 0; i < mask.size(); ++i) {
    const int32_t l = bg.labels[i];
    if (l >= 0 && !bg.touches_border[l] && bg.areas[l] <= max_hole) out.data[i] = 1;
  }
  return out;
}

}  // namespace vtn
