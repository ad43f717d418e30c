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

#include "vesseltune/params.hpp"

#include <cmath>

namespace vtn {
namespace {

std::vector<double> range_axis(double min, double max, double step) {
  const int count = static_cast<int>(std::lround((max - min) / step)) + 1;
  std::vector<double> v(count);
  for (int i = 0; i < count; ++i) v[i] = min + i * step;
  v.back() = max;  // keep the printed endpoint exact
  return v;
}

}  // namespace

std::string to_string(FilterKind kind) {
  switch (kind) {
    case FilterKind::meijering: return "meijering";
    case FilterKind::frangi: return "frangi";
    case FilterKind::sato: return "sato";
  }
  return "?";
}

FilterKind filter_from_string(const std::string& name) {
  if (name == "meijering") return FilterKind::meijering;
  if (name == "frangi") return FilterKind::frangi;
  if (name == "sato") return FilterKind::sato;
  throw Error("unknown filter '" + name + "' (expected meijering|frangi|sato)");
}

std::string to_string(AxisId id) {
  switch (id) {
    case AxisId::sigma: return "sigma";
    case AxisId::threshold: return "threshold";
    case AxisId::alpha: return "alpha";
    case AxisId::beta: return "beta";
    case AxisId::disk_size: return "disk_size";
    case AxisId::max_hole: return "max_hole";
    case AxisId::min_region: return "min_region";
  }
  return "?";
}

double FilterParams::get(AxisId id) const {
  switch (id) {
    case AxisId::sigma: return sigma;
    case AxisId::threshold: return threshold;
    case AxisId::alpha: return alpha;
    case AxisId::beta: return beta;
    case AxisId::disk_size: return disk_size;
    case AxisId::max_hole: return max_hole;
    case AxisId::min_region: return min_region;
  }
  return 0.0;
}

void FilterParams::set(AxisId id, double v) {
  switch (id) {
    case AxisId::sigma: sigma = v; break;
    case AxisId::threshold: threshold = v; break;
    case AxisId::alpha: alpha = v; break;
    case AxisId::beta: beta = v; break;
    case AxisId::disk_size: disk_size = v; break;
    case AxisId::max_hole: max_hole = v; break;
    case AxisId::min_region: min_region = v; break;
  }
}

const GridAxis& ParamGrid::axis(AxisId id) const {
  for (const auto& a : axes)
    if (a.id == id) return a;
  throw Error("grid for " + to_string(kind) + " has no axis " + to_string(id));
}

size_t ParamGrid::total_points() const {
  size_t n = 1;
  for (const auto& a : axes) n *= a.values.size();
  return n;
}

ParamGrid default_grid(FilterKind kind) {
  ParamGrid g;
  g.kind = kind;
  switch (kind) {
    case FilterKind::meijering:
      g.axes = {
          {AxisId::sigma, range_axis(2.5, 5.5, 0.5), true, false},
          {AxisId::threshold, range_axis(0.05, 0.12, 0.01), false, false},
          {AxisId::disk_size, {1, 2, 3}, false, true},
          {AxisId::min_region, range_axis(100, 4000, 50), true, true},
      };
      break;
    case FilterKind::sato:
      g.axes = {
          {AxisId::sigma, range_axis(2.0, 6.5, 0.5), true, false},
          {AxisId::threshold, range_axis(0.010, 0.031, 0.001), false, false},
          {AxisId::disk_size, {1, 2, 3, 4, 5}, false, true},
          {AxisId::min_region, range_axis(100, 5500, 50), true, true},
      };
      break;
    case FilterKind::frangi:
      g.axes = {
          {AxisId::sigma, range_axis(1.0, 6.0, 0.5), true, false},
          {AxisId::threshold, range_axis(0.3, 0.7, 0.05), false, false},
          {AxisId::alpha, range_axis(0.5, 1.0, 0.05), false, false},
          {AxisId::beta, range_axis(0.5, 1.0, 0.05), false, false},
          {AxisId::max_hole, range_axis(200, 500, 10), true, true},
          {AxisId::min_region, range_axis(50, 100, 5), true, true},
      };
      break;
  }
  return g;
}

double snap_axis(double v, const GridAxis& axis) {
  if (v <= axis.min()) return axis.min();
  if (v >= axis.max()) return axis.max();
  double best = axis.values.front();
  double best_d = std::fabs(v - best);
  for (double g : axis.values) {
    const double d = std::fabs(v - g);
    if (d < best_d) {  // strict: ties keep the earlier (smaller) value
      best = g;
      best_d = d;
    }
  }
  return best;
}

FilterParams snap_to_grid(const FilterParams& params, const ParamGrid& grid) {
  FilterParams out;
  out.kind = grid.kind;
  for (const auto& a : grid.axes) out.set(a.id, snap_axis(params.get(a.id), a));
  return out;
}

}  // namespace vtn
