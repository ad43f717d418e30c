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

#include "vesseltune/params.hpp"
#include "vesseltune/segment.hpp"
#include "vesseltune/types.hpp"

namespace vtn {

/// Per-image grid-search optimum against the ground-truth mask.
struct OracleRecord {
  std::string image_id;
  FilterKind filter = FilterKind::frangi;
  FilterParams best_params;
  double best_dice = 0.0;
};

/// Exhaustive Dice maximization of segment(img, theta) over the grid.
/// Equivalent to evaluating every grid point through the plain pipeline
/// (bit-identical to it), but responses are computed once per sigma (and per
/// (alpha, beta) factor for Frangi) and morphology sweeps reuse component
/// statistics instead of materializing every mask. Ties are broken
/// lexicographically by axis order, then ascending value.
OracleRecord oracle_search(const GrayImage& img, const BinaryMask& gt, FilterKind filter,
                           const ParamGrid& grid, const SegmentOptions& opts = {},
                           const std::string& image_id = "");

/// Arithmetic per-axis mean of per-image optima (unsnapped reals).
FilterParams mean_params(const std::vector<OracleRecord>& records, FilterKind filter);

/// CSV persistence: header "image_id,filter,<axes...>,dice", one row per record.
void save_oracle_records(const std::vector<OracleRecord>& records, const ParamGrid& grid,
                         const std::string& path);
std::vector<OracleRecord> load_oracle_records(const std::string& path);

}  // namespace vtn
