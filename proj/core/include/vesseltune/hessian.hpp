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

#include "vesseltune/types.hpp"

namespace vtn {

/// Second Gaussian derivatives of the image at scale sigma, computed by
/// separable convolution with sampled Gaussian-derivative kernels.
/// Kernels are truncated at radius ceil(4*sigma); borders are handled by
/// reflection; entries are scale-normalized by sigma^2 (gamma = 2) so
/// responses are comparable across scales.
HessianField gaussian_hessian(const GrayImage& img, double sigma);

/// Closed-form eigenvalues of the symmetric 2x2 Hessian at every pixel.
/// by_abs_desc: |lam1| >= |lam2|; by_abs_asc: |lam1| < |lam2|.
/// Ties in |.| keep algebraic order lam1 <= lam2.
EigenField hessian_eigen(const HessianField& h, EigenOrder order);

}  // namespace vtn
