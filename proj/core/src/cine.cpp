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

#include "vesseltune/cine.hpp"

#include <algorithm>
#include <filesystem>

#include "vesseltune/image_io.hpp"

namespace vtn {

FrameHistogram frame_histogram(const GrayImage& frame, int bins) {
  require(bins >= 2, "frame_histogram: need at least 2 bins");
  FrameHistogram h;
  h.counts.assign(bins, 0);
  for (double v : frame.data) {
    int b = static_cast<int>(v * bins);
    if (b >= bins) b = bins - 1;  // value 1.0 goes to the last bin
    if (b < 0) b = 0;
    ++h.counts[b];
  }
  h.probabilities.assign(bins, 0.0);
  if (!frame.data.empty()) {
    const double inv = 1.0 / static_cast<double>(frame.data.size());
    for (int b = 0; b < bins; ++b) h.probabilities[b] = h.counts[b] * inv;
  }
  return h;
}

int best_frame(const CineSequence& cine, BinRange low_band, int bins) {
  require(!cine.frames.empty(), "best_frame: empty sequence");
  require(low_band.first >= 0 && low_band.last < bins && low_band.first <= low_band.last,
          "best_frame: low band must be a nonempty range within [0, bins)");

  int best_index = 0;
  double best_peak = -1.0;
  for (size_t t = 0; t < cine.frames.size(); ++t) {
    const FrameHistogram h = frame_histogram(cine.frames[t], bins);
    double peak = 0.0;
    for (int k = low_band.first; k <= low_band.last; ++k)
      peak = std::max(peak, h.probabilities[k]);
    if (peak > best_peak) {  // strict: ties keep the earliest frame
      best_peak = peak;
      best_index = static_cast<int>(t);
    }
  }
  return best_index;
}

CineSequence load_cine_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw Error(dir + ": not a directory");

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const auto ext = entry.path().extension().string();
    if (ext == ".pgm" || ext == ".png") files.push_back(entry.path());
  }
  if (files.empty()) throw Error(dir + ": no .pgm/.png frames found");

  auto numeric_stem = [](const fs::path& p, long long& out) {
    const std::string s = p.stem().string();
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(c); }))
      return false;
    out = std::stoll(s);
    return true;
  };
  std::sort(files.begin(), files.end(), [&](const fs::path& a, const fs::path& b) {
    long long na, nb;
    const bool ia = numeric_stem(a, na), ib = numeric_stem(b, nb);
    if (ia && ib) return na != nb ? na < nb : a.filename() < b.filename();
    if (ia != ib) return ia;
    return a.filename() < b.filename();
  });

  CineSequence cine;
  cine.frames.reserve(files.size());
  for (const auto& f : files) {
    GrayImage img = load_image(f.string());
    if (!cine.frames.empty() && !img.same_shape(cine.frames.front()))
      throw Error(f.string() + ": frame dimensions differ from the first frame");
    cine.frames.push_back(std::move(img));
  }
  return cine;
}

}  // namespace vtn
