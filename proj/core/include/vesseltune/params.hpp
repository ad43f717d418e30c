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

#include "vesseltune/types.hpp"

namespace vtn {

enum class FilterKind { meijering, frangi, sato };

std::string to_string(FilterKind kind);
FilterKind filter_from_string(const std::string& name);

enum class AxisId { sigma, threshold, alpha, beta, disk_size, max_hole, min_region };

std::string to_string(AxisId id);

/// Per-filter hyperparameter vector. Only the fields applicable to the
/// filter variant are meaningful; the rest stay at zero.
struct FilterParams {
  FilterKind kind = FilterKind::frangi;
  double sigma = 0.0;
  double threshold = 0.0;
  double alpha = 0.0;      // frangi
  double beta = 0.0;       // frangi
  double disk_size = 0.0;  // meijering / sato
  double max_hole = 0.0;   // frangi
  double min_region = 0.0;

  double get(AxisId id) const;
  void set(AxisId id, double v);
};

/// One grid axis: ascending values, plus how the SVR treats the target.
struct GridAxis {
  AxisId id;
  std::vector<double> values;
  bool log_scale = false;  // strictly positive scale; SVR log-transforms it
  bool integer = false;    // snapped values are whole numbers

  double min() const { return values.front(); }
  double max() const { return values.back(); }
};

/// Grid-search ranges for one filter's hyperparameters, axes in the fixed
/// order used for lexicographic tie-breaking and record serialization.
struct ParamGrid {
  FilterKind kind = FilterKind::frangi;
  std::vector<GridAxis> axes;

  const GridAxis& axis(AxisId id) const;
  size_t total_points() const;
};

/// The published search ranges for each filter pipeline.
ParamGrid default_grid(FilterKind kind);

/// Clips each axis to [min,max], then rounds to the nearest grid value;
/// ties round toward the smaller value. Output is always a grid member.
FilterParams snap_to_grid(const FilterParams& params, const ParamGrid& grid);

/// Nearest grid value on one axis (same clip/tie rules as snap_to_grid).
double snap_axis(double v, const GridAxis& axis);

}  // namespace vtn
