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

#include "vesseltune/descriptor.hpp"

#include <algorithm>

#include "vesseltune/cine.hpp"
#include "vesseltune/morphology.hpp"

namespace vtn {
namespace {

void minmax_block(double* block, int n) {
  double lo = block[0], hi = block[0];
  for (int i = 1; i < n; ++i) {
    lo = std::min(lo, block[i]);
    hi = std::max(hi, block[i]);
  }
  if (hi - lo <= 0.0) {
    std::fill(block, block + n, 0.0);
    return;
  }
  const double inv = 1.0 / (hi - lo);
  for (int i = 0; i < n; ++i) block[i] = (block[i] - lo) * inv;
}

}  // namespace

const std::string& Descriptor140::layout_tag() {
  static const std::string tag = "hist32-mink16x3-betti20x3/v1";
  return tag;
}

BinaryMask superlevel_set(const GrayImage& img, double tau) {
  BinaryMask m(img.width, img.height);
  for (size_t i = 0; i < img.size(); ++i) m.data[i] = img.data[i] >= tau ? 1 : 0;
  return m;
}

MinkowskiFunctionals minkowski(const BinaryMask& mask) {
  MinkowskiFunctionals f;
  const int w = mask.width, h = mask.height;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!mask.at(x, y)) continue;
      ++f.area;
      if (x == 0 || !mask.at(x - 1, y)) ++f.perimeter;
      if (x == w - 1 || !mask.at(x + 1, y)) ++f.perimeter;
      if (y == 0 || !mask.at(x, y - 1)) ++f.perimeter;
      if (y == h - 1 || !mask.at(x, y + 1)) ++f.perimeter;
    }
  }
  const BettiPair b = betti_numbers(mask);
  f.euler = b.beta0 - b.beta1;
  return f;
}

BettiPair betti_numbers(const BinaryMask& mask) {
  BettiPair out;
  out.beta0 = label_components(mask, 8).count;
  const Labeling bg = label_background(mask);
  for (int i = 0; i < bg.count; ++i)
    if (!bg.touches_border[i]) ++out.beta1;
  return out;
}

BettiCurves betti_curve(const GrayImage& img, const std::vector<double>& taus) {
  require(std::is_sorted(taus.begin(), taus.end()), "betti_curve: thresholds must be ascending");
  BettiCurves curves;
  curves.beta0.reserve(taus.size());
  curves.beta1.reserve(taus.size());
  curves.beta2.assign(taus.size(), 0);
  for (double tau : taus) {
    require(tau >= 0.0 && tau <= 1.0, "betti_curve: thresholds must lie in [0,1]");
    const BettiPair b = betti_numbers(superlevel_set(img, tau));
    curves.beta0.push_back(b.beta0);
    curves.beta1.push_back(b.beta1);
  }
  return curves;
}

std::vector<double> minkowski_thresholds() {
  std::vector<double> taus(Descriptor140::kMinkowskiSamples);
  for (int i = 1; i <= Descriptor140::kMinkowskiSamples; ++i) taus[i - 1] = i / 17.0;
  return taus;
}

std::vector<double> betti_thresholds() {
  std::vector<double> taus(Descriptor140::kBettiSamples);
  for (int i = 1; i <= Descriptor140::kBettiSamples; ++i) taus[i - 1] = i / 21.0;
  return taus;
}

Descriptor140 extract_descriptor(const GrayImage& img) {
  Descriptor140 d;
  double* out = d.values.data();

  const FrameHistogram hist = frame_histogram(img, Descriptor140::kHistogramBins);
  for (int i = 0; i < Descriptor140::kHistogramBins; ++i) out[i] = hist.probabilities[i];
  minmax_block(out, Descriptor140::kHistogramBins);
  out += Descriptor140::kHistogramBins;

  const int nm = Descriptor140::kMinkowskiSamples;
  const auto mtaus = minkowski_thresholds();
  for (int i = 0; i < nm; ++i) {
    const MinkowskiFunctionals f = minkowski(superlevel_set(img, mtaus[i]));
    out[i] = static_cast<double>(f.area);
    out[nm + i] = static_cast<double>(f.perimeter);
    out[2 * nm + i] = static_cast<double>(f.euler);
  }
  minmax_block(out, nm);
  minmax_block(out + nm, nm);
  minmax_block(out + 2 * nm, nm);
  out += 3 * nm;

  const int nb = Descriptor140::kBettiSamples;
  const BettiCurves curves = betti_curve(img, betti_thresholds());
  for (int i = 0; i < nb; ++i) {
    out[i] = static_cast<double>(curves.beta0[i]);
    out[nb + i] = static_cast<double>(curves.beta1[i]);
    out[2 * nb + i] = static_cast<double>(curves.beta2[i]);
  }
  minmax_block(out, nb);
  minmax_block(out + nb, nb);
  minmax_block(out + 2 * nb, nb);

  return d;
}

}  // namespace vtn
