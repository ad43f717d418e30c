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

#include <doctest.h>

#include "support/phantom.hpp"
#include "vesseltune/eval.hpp"
#include "vesseltune/segment.hpp"

using namespace vtn;
using namespace vtn::testsupport;

TEST_CASE("segment of a constant image is empty") {
  const GrayImage img(64, 64, 0.5);
  for (FilterKind kind : {FilterKind::meijering, FilterKind::frangi, FilterKind::sato}) {
    FilterParams p;
    p.kind = kind;
    p.sigma = 2.0;
    p.threshold = 0.3;
    p.alpha = 0.65;
    p.beta = 0.9;
    p.disk_size = 1;
    p.max_hole = 200;
    p.min_region = 10;
    CHECK(segment(img, p).area() == 0);
  }
}

TEST_CASE("segment output keeps the input dimensions, with and without borders") {
  PhantomSpec spec;
  spec.size = 120;
  spec.seed = 55;
  spec.tubes = {TubeSpec{.width = 5.0}};
  Phantom ph = make_tube_phantom(spec);

  // Add a dark frame that border stripping must remove and re-embed.
  for (int y = 0; y < ph.image.height; ++y)
    for (int x = 0; x < ph.image.width; ++x)
      if (x < 4 || y < 4 || x >= ph.image.width - 4 || y >= ph.image.height - 4)
        ph.image.at(x, y) = 0.01;

  FilterParams p;
  p.kind = FilterKind::frangi;
  p.sigma = 2.0;
  p.threshold = 0.4;
  p.alpha = 0.65;
  p.beta = 0.9;
  p.max_hole = 470;
  p.min_region = 75;

  const BinaryMask mask = segment(ph.image, p);
  CHECK(mask.width == 120);
  CHECK(mask.height == 120);
  for (int x = 0; x < 120; ++x) {
    CHECK(mask.at(x, 0) == 0);  // stripped margins come back as background
    CHECK(mask.at(x, 119) == 0);
  }
}

TEST_CASE("tube phantom segments well with published-style parameters") {
  PhantomSpec spec;
  spec.size = 200;
  spec.seed = 77;
  spec.tubes = {TubeSpec{.width = 5.0, .depth = 0.5}};
  const Phantom ph = make_tube_phantom(spec);

  FilterParams p;
  p.kind = FilterKind::frangi;
  p.sigma = 1.5;
  p.threshold = 0.5;
  p.alpha = 0.65;
  p.beta = 0.9;
  p.max_hole = 470;
  p.min_region = 75;

  double best = 0.0;
  for (double sigma : {1.0, 1.5, 2.0, 2.5}) {
    for (double threshold : {0.3, 0.4, 0.5, 0.6, 0.7}) {
      p.sigma = sigma;
      p.threshold = threshold;
      best = std::max(best, dice(segment(ph.image, p), ph.gt));
    }
  }
  CHECK(best >= 0.9);
}

TEST_CASE("segment honors the filter-specific postprocessing order") {
  // A mask with a small hole: Frangi's hole filling closes it; the
  // Meijering/Sato path (closing with radius 1) also bridges 1-px holes, so
  // compare against a hole too large for closing but small enough to fill.
  PhantomSpec spec;
  spec.size = 100;
  spec.seed = 91;
  spec.tubes = {TubeSpec{.width = 7.0, .depth = 0.55, .amplitude = 10.0}};
  const Phantom ph = make_tube_phantom(spec);

  FilterParams frangi;
  frangi.kind = FilterKind::frangi;
  frangi.sigma = 2.0;
  frangi.threshold = 0.35;
  frangi.alpha = 0.65;
  frangi.beta = 0.9;
  frangi.max_hole = 470;
  frangi.min_region = 50;
  const BinaryMask with_fill = segment(ph.image, frangi);

  frangi.max_hole = 0;  // no filling
  const BinaryMask without_fill = segment(ph.image, frangi);
  CHECK(with_fill.area() >= without_fill.area());
}
