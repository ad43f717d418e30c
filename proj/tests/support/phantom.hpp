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

#include "vesseltune/cine.hpp"
#include "vesseltune/rng.hpp"
#include "vesseltune/types.hpp"

namespace vtn::testsupport {

struct TubeSpec {
  double width = 5.0;       // ground truth covers distance <= width/2
  double depth = 0.5;       // intensity dip at the centerline
  double amplitude = 20.0;  // sinusoidal path amplitude
  double wavelength = 120.0;
  double phase = 0.0;
  double offset = 0.5;  // centerline position as a fraction of the frame
  bool vertical = false;
};

struct PhantomSpec {
  int size = 300;
  double background = 0.82;
  double shading = 0.04;  // linear illumination gradient across the frame
  double noise_sd = 0.05;
  uint64_t seed = 1;
  std::vector<TubeSpec> tubes;
};

struct Phantom {
  GrayImage image;
  BinaryMask gt;
};

/// Dark tubes with Gaussian cross-sections along sinusoidal paths on a bright
/// noisy background.
Phantom make_tube_phantom(const PhantomSpec& spec);

/// Random spec with `tube_count` tubes whose shared width is given; other
/// tube parameters are drawn from the rng.
PhantomSpec random_phantom_spec(Rng& rng, int size, double width, double depth, int tube_count);

/// The 50-phantom population used by the phantom acceptance criterion:
/// widths 3-7 px, sinusoidal paths, additive Gaussian noise sigma = 0.05.
Phantom acceptance_phantom(int index);

/// Synthetic contrast-bolus cine: a dark pool whose extent peaks at
/// `peak_index`. The tallest low-intensity histogram peak identifies it.
CineSequence bolus_cine(int frames, int peak_index, int size, uint64_t seed);

struct CohortOptions {
  int images = 130;  // ids 1..images; <=100 train, 101..130 test
  int size = 300;
  uint64_t seed = 20260810;
};

/// Writes a DCA1-style synthetic cohort (<id>.pgm / <id>_gt.pgm) with tube
/// widths spread over [3, 13] px so per-image tuning carries real signal.
void write_dca1_style_cohort(const std::string& dir, const CohortOptions& opts);

}  // namespace vtn::testsupport
