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

#include "vesseltune/params.hpp"
#include "vesseltune/rng.hpp"

using namespace vtn;

TEST_CASE("published grid axes reproduce endpoints and steps") {
  const ParamGrid meij = default_grid(FilterKind::meijering);
  const auto& sig = meij.axis(AxisId::sigma).values;
  REQUIRE(sig.size() == 7);
  for (int i = 0; i < 7; ++i) CHECK(sig[i] == doctest::Approx(2.5 + 0.5 * i).epsilon(1e-12));
  CHECK(sig.back() == 5.5);
  CHECK(meij.axis(AxisId::threshold).values.size() == 8);
  CHECK(meij.axis(AxisId::threshold).values.front() == 0.05);
  CHECK(meij.axis(AxisId::threshold).values.back() == 0.12);
  CHECK(meij.axis(AxisId::disk_size).values == std::vector<double>{1, 2, 3});
  CHECK(meij.axis(AxisId::min_region).values.size() == 79);
  CHECK(meij.axis(AxisId::min_region).values.front() == 100);
  CHECK(meij.axis(AxisId::min_region).values.back() == 4000);

  const ParamGrid sato = default_grid(FilterKind::sato);
  CHECK(sato.axis(AxisId::sigma).values.size() == 10);
  CHECK(sato.axis(AxisId::sigma).values.front() == 2.0);
  CHECK(sato.axis(AxisId::sigma).values.back() == 6.5);
  CHECK(sato.axis(AxisId::threshold).values.size() == 22);
  CHECK(sato.axis(AxisId::threshold).values.front() == 0.010);
  CHECK(sato.axis(AxisId::threshold).values.back() == 0.031);
  CHECK(sato.axis(AxisId::disk_size).values.size() == 5);
  CHECK(sato.axis(AxisId::min_region).values.size() == 109);
  CHECK(sato.axis(AxisId::min_region).values.back() == 5500);

  const ParamGrid frangi = default_grid(FilterKind::frangi);
  CHECK(frangi.axis(AxisId::sigma).values.size() == 11);
  CHECK(frangi.axis(AxisId::sigma).values.front() == 1.0);
  CHECK(frangi.axis(AxisId::sigma).values.back() == 6.0);
  CHECK(frangi.axis(AxisId::threshold).values.size() == 9);
  CHECK(frangi.axis(AxisId::threshold).values.front() == 0.3);
  CHECK(frangi.axis(AxisId::threshold).values.back() == 0.7);
  CHECK(frangi.axis(AxisId::alpha).values.size() == 11);
  CHECK(frangi.axis(AxisId::beta).values.size() == 11);
  CHECK(frangi.axis(AxisId::max_hole).values.size() == 31);
  CHECK(frangi.axis(AxisId::max_hole).values.front() == 200);
  CHECK(frangi.axis(AxisId::max_hole).values.back() == 500);
  CHECK(frangi.axis(AxisId::min_region).values.size() == 11);
  CHECK(frangi.axis(AxisId::min_region).values.front() == 50);
  CHECK(frangi.axis(AxisId::min_region).values.back() == 100);

  // Axis declaration order fixes tie-breaking and serialization.
  CHECK(frangi.axes[0].id == AxisId::sigma);
  CHECK(frangi.axes[1].id == AxisId::threshold);
  CHECK(frangi.axes[2].id == AxisId::alpha);
  CHECK(frangi.axes[3].id == AxisId::beta);
  CHECK(frangi.axes[4].id == AxisId::max_hole);
  CHECK(frangi.axes[5].id == AxisId::min_region);
}

TEST_CASE("snap_to_grid clips and rounds with ties toward the smaller value") {
  const ParamGrid grid = default_grid(FilterKind::meijering);

  FilterParams p;
  p.kind = FilterKind::meijering;
  p.sigma = 3.76;  // globally averaged value; nearest of {3.5, 4.0} is 4.0
  p.threshold = 0.080;
  p.disk_size = 2.3;
  p.min_region = 2070;
  const FilterParams s = snap_to_grid(p, grid);
  CHECK(s.sigma == 4.0);
  CHECK(s.threshold == doctest::Approx(0.08));
  CHECK(s.disk_size == 2.0);
  CHECK(s.min_region == 2050);  // 2070 is 20 away from 2050, 30 from 2100

  p.sigma = -5.0;
  CHECK(snap_to_grid(p, grid).sigma == 2.5);  // clipped to axis min
  p.sigma = 99.0;
  CHECK(snap_to_grid(p, grid).sigma == 5.5);
  p.sigma = 3.75;  // equidistant between 3.5 and 4.0
  CHECK(snap_to_grid(p, grid).sigma == 3.5);
  p.sigma = 4.5;  // exact grid point is a fixed point
  CHECK(snap_to_grid(p, grid).sigma == 4.5);
}

TEST_CASE("snap_to_grid is idempotent and lands on grid members") {
  Rng rng(77);
  for (FilterKind kind : {FilterKind::meijering, FilterKind::frangi, FilterKind::sato}) {
    const ParamGrid grid = default_grid(kind);
    for (int trial = 0; trial < 50; ++trial) {
      FilterParams p;
      p.kind = kind;
      for (const auto& axis : grid.axes)
        p.set(axis.id, rng.uniform(axis.min() - 1.0, axis.max() + 1.0));
      const FilterParams snapped = snap_to_grid(p, grid);
      for (const auto& axis : grid.axes) {
        const double v = snapped.get(axis.id);
        CHECK(std::count(axis.values.begin(), axis.values.end(), v) == 1);
      }
      const FilterParams again = snap_to_grid(snapped, grid);
      for (const auto& axis : grid.axes) CHECK(again.get(axis.id) == snapped.get(axis.id));
    }
  }
}

TEST_CASE("filter and axis names round-trip") {
  for (FilterKind kind : {FilterKind::meijering, FilterKind::frangi, FilterKind::sato})
    CHECK(filter_from_string(to_string(kind)) == kind);
  CHECK_THROWS_AS(filter_from_string("sobel"), Error);
  CHECK(default_grid(FilterKind::frangi).total_points() == 11u * 9 * 11 * 11 * 31 * 11);
}
