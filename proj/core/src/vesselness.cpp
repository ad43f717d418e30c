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

#include "vesseltune/vesselness.hpp"

#include <algorithm>
#include <cmath>

namespace vtn {
namespace {

VesselnessResponse make_response(const EigenField& eig, FilterKind kind) {
  VesselnessResponse r;
  r.width = eig.width;
  r.height = eig.height;
  r.data.resize(eig.lam1.size());
  r.filter = kind;
  return r;
}

void minmax_inplace(std::vector<double>& v) {
  double lo = 1e300, hi = -1e300;
  for (double x : v) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  if (hi - lo <= 0.0) {
    std::fill(v.begin(), v.end(), 0.0);
    return;
  }
  const double inv = 1.0 / (hi - lo);
  for (double& x : v) x = (x - lo) * inv;
}

}  // namespace

bool response_uses_negated_eigen(FilterKind kind, bool dark_vessels) {
  const bool formula_is_dark_native = kind != FilterKind::frangi;
  return dark_vessels != formula_is_dark_native;
}

EigenField negated(const EigenField& e) {
  EigenField out = e;
  for (double& v : out.lam1) v = -v;
  for (double& v : out.lam2) v = -v;
  return out;
}

VesselnessResponse meijering_response(const EigenField& eig, double alpha) {
  require(eig.order == EigenOrder::by_abs_desc, "meijering_response: needs |lam1| >= |lam2|");
  VesselnessResponse r = make_response(eig, FilterKind::meijering);
  const size_t n = r.data.size();
  for (size_t i = 0; i < n; ++i) r.data[i] = std::max(0.0, eig.lam1[i] + alpha * eig.lam2[i]);
  return r;
}

VesselnessResponse frangi_response(const EigenField& eig, double alpha, double beta) {
  require(eig.order == EigenOrder::by_abs_desc, "frangi_response: needs |lam1| >= |lam2|");
  require(alpha > 0.0 && beta > 0.0, "frangi_response: alpha and beta must be positive");
  VesselnessResponse r = make_response(eig, FilterKind::frangi);
  const double ka = 1.0 / (2.0 * alpha * alpha);
  const double kb = 1.0 / (2.0 * beta * beta);
  const size_t n = r.data.size();
  for (size_t i = 0; i < n; ++i) {
    const double l1 = eig.lam1[i], l2 = eig.lam2[i];
    if (l1 > 0.0) {
      r.data[i] = 0.0;
      continue;
    }
    const double ra2 = l1 == 0.0 ? 0.0 : (l2 * l2) / (l1 * l1);
    const double s2 = l1 * l1 + l2 * l2;
    r.data[i] = std::exp(-ra2 * ka) * (1.0 - std::exp(-s2 * kb));
  }
  return r;
}

VesselnessResponse sato_response(const EigenField& eig, double sigma) {
  require(eig.order == EigenOrder::by_abs_asc, "sato_response: needs |lam1| < |lam2|");
  require(sigma > 0.0, "sato_response: sigma must be positive");
  VesselnessResponse r = make_response(eig, FilterKind::sato);
  const double k = 1.0 / (2.0 * sigma * sigma);
  const size_t n = r.data.size();
  for (size_t i = 0; i < n; ++i) {
    const double l1 = eig.lam1[i], l2 = eig.lam2[i];
    if (l2 <= 0.0) {
      r.data[i] = 0.0;
      continue;
    }
    const double s2 = l1 * l1 + l2 * l2;
    const double ra2 = (l1 * l1) / (l2 * l2);
    const double sum = l1 + l2;
    const double rb2 = s2 == 0.0 ? 0.0 : (sum * sum) / s2;
    r.data[i] = std::exp(-ra2 * k) * std::exp(-rb2 * k) * (1.0 - std::exp(-s2 * k));
  }
  return r;
}

VesselnessResponse apply_filter(const GrayImage& img, const FilterParams& params,
                                const ApplyOptions& opts) {
  require(params.sigma > 0.0, "apply_filter: sigma must be positive");

  std::vector<double> scales{params.sigma};
  for (double s : opts.extra_scales)
    if (s != params.sigma) scales.push_back(s);

  VesselnessResponse acc;
  for (size_t si = 0; si < scales.size(); ++si) {
    const HessianField h = gaussian_hessian(img, scales[si]);
    const EigenOrder order = params.kind == FilterKind::sato ? EigenOrder::by_abs_asc
                                                             : EigenOrder::by_abs_desc;
    EigenField eig = hessian_eigen(h, order);
    if (response_uses_negated_eigen(params.kind, opts.dark_vessels)) eig = negated(eig);

    VesselnessResponse r;
    switch (params.kind) {
      case FilterKind::meijering: r = meijering_response(eig); break;
      case FilterKind::frangi: r = frangi_response(eig, params.alpha, params.beta); break;
      case FilterKind::sato: r = sato_response(eig, scales[si]); break;
    }
    if (si == 0) {
      acc = std::move(r);
    } else {
      for (size_t i = 0; i < acc.data.size(); ++i) acc.data[i] = std::max(acc.data[i], r.data[i]);
    }
  }
  acc.sigmas_used = scales;
  minmax_inplace(acc.data);
  return acc;
}

}  // namespace vtn
