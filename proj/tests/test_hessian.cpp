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

#include <cmath>

#include "vesseltune/hessian.hpp"
#include "vesseltune/rng.hpp"

using namespace vtn;

TEST_CASE("hessian of a constant image is exactly zero") {
  const GrayImage img(32, 24, 0.37);
  const HessianField h = gaussian_hessian(img, 2.0);
  for (double v : h.hxx) CHECK(v == 0.0);
  for (double v : h.hxy) CHECK(v == 0.0);
  for (double v : h.hyy) CHECK(v == 0.0);
}

TEST_CASE("hessian of quadratic ramps matches the analytic second derivative") {
  // I(x,y) = x^2/2 (unclamped synthetic values; the op itself is range-agnostic)
  const int n = 64;
  GrayImage img(n, n);
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) img.at(x, y) = 0.5 * x * x;

  for (double sigma : {1.0, 2.0, 3.5}) {
    const HessianField h = gaussian_hessian(img, sigma);
    const double expected = sigma * sigma;  // gamma=2 normalization of d2/dx2 = 1
    const int margin = static_cast<int>(std::ceil(4 * sigma)) + 1;
    for (int y = margin; y < n - margin; ++y) {
      for (int x = margin; x < n - margin; ++x) {
        CHECK(h.hxx[static_cast<size_t>(y) * n + x] ==
              doctest::Approx(expected).epsilon(1e-3));
        CHECK(h.hyy[static_cast<size_t>(y) * n + x] == doctest::Approx(0.0).scale(expected));
      }
    }
  }
}

TEST_CASE("hessian cross term on I = xy") {
  const int n = 48;
  GrayImage img(n, n);
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) img.at(x, y) = static_cast<double>(x) * y;
  const double sigma = 2.0;
  const HessianField h = gaussian_hessian(img, sigma);
  const int margin = static_cast<int>(std::ceil(4 * sigma)) + 1;
  for (int y = margin; y < n - margin; ++y)
    for (int x = margin; x < n - margin; ++x)
      CHECK(h.hxy[static_cast<size_t>(y) * n + x] ==
            doctest::Approx(sigma * sigma).epsilon(1e-3));
}

TEST_CASE("bright blob has negative curvature at its center") {
  const int n = 41;
  GrayImage img(n, n);
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) {
      const double dx = x - n / 2, dy = y - n / 2;
      img.at(x, y) = std::exp(-(dx * dx + dy * dy) / (2.0 * 9.0));
    }
  const HessianField h = gaussian_hessian(img, 2.0);
  CHECK(h.hxx[static_cast<size_t>(n / 2) * n + n / 2] < 0.0);
  CHECK(h.hyy[static_cast<size_t>(n / 2) * n + n / 2] < 0.0);
}

TEST_CASE("gaussian_hessian rejects non-positive sigma") {
  const GrayImage img(8, 8, 0.5);
  CHECK_THROWS_AS(gaussian_hessian(img, 0.0), Error);
  CHECK_THROWS_AS(gaussian_hessian(img, -1.0), Error);
}

TEST_CASE("gaussian_hessian is linear") {
  Rng rng(5);
  const int n = 40;
  GrayImage a(n, n), b(n, n);
  for (double& v : a.data) v = rng.uniform();
  for (double& v : b.data) v = rng.uniform();
  const double ca = 0.7, cb = -1.3;

  GrayImage combo(n, n);
  for (size_t i = 0; i < combo.size(); ++i) combo.data[i] = ca * a.data[i] + cb * b.data[i];

  const HessianField ha = gaussian_hessian(a, 1.5);
  const HessianField hb = gaussian_hessian(b, 1.5);
  const HessianField hc = gaussian_hessian(combo, 1.5);
  for (size_t i = 0; i < hc.hxx.size(); ++i) {
    CHECK(hc.hxx[i] == doctest::Approx(ca * ha.hxx[i] + cb * hb.hxx[i]).epsilon(1e-6));
    CHECK(hc.hxy[i] == doctest::Approx(ca * ha.hxy[i] + cb * hb.hxy[i]).epsilon(1e-6));
    CHECK(hc.hyy[i] == doctest::Approx(ca * ha.hyy[i] + cb * hb.hyy[i]).epsilon(1e-6));
  }
}

TEST_CASE("hessian_eigen closed form") {
  HessianField h;
  h.width = 2;
  h.height = 1;
  h.sigma = 1.0;
  h.hxx = {2.0, 0.0};
  h.hxy = {0.0, 1.0};
  h.hyy = {1.0, 0.0};

  const EigenField desc = hessian_eigen(h, EigenOrder::by_abs_desc);
  // Diagonal [[2,0],[0,1]]: |lam1| >= |lam2| gives (2, 1).
  CHECK(desc.lam1[0] == doctest::Approx(2.0));
  CHECK(desc.lam2[0] == doctest::Approx(1.0));
  // Off-diagonal [[0,1],[1,0]]: eigenvalues {+1,-1}; |.|-tie keeps lam1 <= lam2.
  CHECK(desc.lam1[1] == doctest::Approx(-1.0));
  CHECK(desc.lam2[1] == doctest::Approx(1.0));

  const EigenField asc = hessian_eigen(h, EigenOrder::by_abs_asc);
  CHECK(asc.lam1[0] == doctest::Approx(1.0));
  CHECK(asc.lam2[0] == doctest::Approx(2.0));
}

TEST_CASE("hessian_eigen satisfies trace and determinant identities") {
  Rng rng(11);
  HessianField h;
  h.width = 500;
  h.height = 1;
  h.sigma = 1.0;
  for (int i = 0; i < 500; ++i) {
    h.hxx.push_back(rng.uniform(-3.0, 3.0));
    h.hxy.push_back(rng.uniform(-3.0, 3.0));
    h.hyy.push_back(rng.uniform(-3.0, 3.0));
  }
  for (EigenOrder order : {EigenOrder::by_abs_desc, EigenOrder::by_abs_asc}) {
    const EigenField e = hessian_eigen(h, order);
    for (int i = 0; i < 500; ++i) {
      const double tr = h.hxx[i] + h.hyy[i];
      const double det = h.hxx[i] * h.hyy[i] - h.hxy[i] * h.hxy[i];
      CHECK(e.lam1[i] + e.lam2[i] == doctest::Approx(tr).epsilon(1e-9));
      CHECK(e.lam1[i] * e.lam2[i] == doctest::Approx(det).epsilon(1e-9).scale(1.0 + std::fabs(det)));
      if (order == EigenOrder::by_abs_desc)
        CHECK(std::fabs(e.lam1[i]) >= std::fabs(e.lam2[i]));
      else
        CHECK(std::fabs(e.lam1[i]) <= std::fabs(e.lam2[i]));
    }
  }
}
