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

#include "vesseltune/hessian.hpp"
#include "vesseltune/params.hpp"
#include "vesseltune/types.hpp"

namespace vtn {

/// Per-pixel vesselness scores V(x, sigma) >= 0.
struct VesselnessResponse {
  int width = 0;
  int height = 0;
  std::vector<double> data;
  std::vector<double> sigmas_used;
  FilterKind filter = FilterKind::frangi;
};

/// Eigenvalues with flipped sign (image polarity inversion); ordering kept.
EigenField negated(const EigenField& e);

/// Whether the given vessel polarity requires feeding negated eigenvalues to
/// this filter's response. The Meijering and Sato forms natively select dark
/// ridges (positive dominant eigenvalue); Frangi selects bright ones.
bool response_uses_negated_eigen(FilterKind kind, bool dark_vessels);

/// Meijering neuriteness: V = max(0, lam1 + alpha*lam2) with |lam1| >= |lam2|.
/// Responds to ridges whose dominant eigenvalue is positive (dark tubes in
/// the raw Hessian).
VesselnessResponse meijering_response(const EigenField& eig, double alpha = -0.5);

/// Frangi tubularity with |lam1| >= |lam2|:
///   V = 0 where lam1 > 0, else exp(-R_A^2/2a^2) * (1 - exp(-S^2/2b^2)),
/// R_A = |lam2|/|lam1| (0 when lam1 = 0), S = sqrt(lam1^2 + lam2^2).
/// Responds to bright tubes (dominant eigenvalue negative); feed negated
/// eigenvalues for dark vessels.
VesselnessResponse frangi_response(const EigenField& eig, double alpha, double beta);

/// Sato tubularity with |lam1| < |lam2| and the scale reused as sensitivity:
///   V = 0 where lam2 <= 0, else
///   exp(-R_A^2/2s^2) * exp(-R_B^2/2s^2) * (1 - exp(-S^2/2s^2)),
/// R_A = |lam1|/|lam2|, R_B = |lam1+lam2|/S (0 when S = 0).
/// Responds to dark tubes in the raw Hessian.
VesselnessResponse sato_response(const EigenField& eig, double sigma);

struct ApplyOptions {
  bool dark_vessels = true;
  // Opt-in multiscale extension: when nonempty, the raw response is the
  // pixelwise max over these scales instead of the single params.sigma.
  std::vector<double> extra_scales;
};

/// Full response stage: Hessian at params.sigma, eigen-decomposition in the
/// filter's ordering, polarity adjustment, response evaluation, then min-max
/// normalization to [0,1] (a constant raw response maps to all zeros).
VesselnessResponse apply_filter(const GrayImage& img, const FilterParams& params,
                                const ApplyOptions& opts = {});

}  // namespace vtn
