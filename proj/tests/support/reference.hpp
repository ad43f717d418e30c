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

// Independent reference implementations used as test oracles.
// Deliberately naive (flood fill, explicit structuring elements, dense QP
// iteration) and kept free of the library code paths they validate.

#pragma once

#include <cstdint>
#include <vector>

#include "vesseltune/params.hpp"
#include "vesseltune/segment.hpp"
#include "vesseltune/types.hpp"

namespace vtn::testsupport {

/// Flood-fill component count of `value` pixels under the connectivity.
/// Queue-based, no union-find.
int flood_count(const BinaryMask& mask, bool value, int connectivity);

/// beta0 (8-connected foreground), beta1 (4-connected bounded background).
void flood_betti(const BinaryMask& mask, int64_t& beta0, int64_t& beta1);

/// Dilation/erosion/closing with an explicit disk offset list.
BinaryMask brute_dilate(const BinaryMask& mask, int radius);
BinaryMask brute_erode_on_plane(const BinaryMask& mask, int radius, int pad);
BinaryMask brute_close(const BinaryMask& mask, int radius);

BinaryMask brute_remove_small(const BinaryMask& mask, int64_t min_size);
BinaryMask brute_fill_holes(const BinaryMask& mask, int64_t max_hole);

/// Exhaustive grid search calling the public segment() at every point:
/// the no-cache reference for oracle_search, identical tie-breaking.
struct NaiveOracleResult {
  FilterParams params;
  double dice = 0.0;
};
NaiveOracleResult naive_oracle(const GrayImage& img, const BinaryMask& gt, const ParamGrid& grid,
                               const SegmentOptions& opts);

/// Dense projected-gradient solver for the epsilon-SVR dual (the QP oracle).
/// Prediction uses its own kernel evaluation and bias recovery.
struct QpOracleModel {
  std::vector<std::vector<double>> X;  // training inputs (as given)
  std::vector<double> beta;
  double bias = 0.0;
  double gamma = 0.1;

  double predict(const std::vector<double>& x) const;
};
QpOracleModel qp_oracle_train(const std::vector<std::vector<double>>& X,
                              const std::vector<double>& y, double C, double epsilon,
                              double gamma, int iterations = 400000);

}  // namespace vtn::testsupport
