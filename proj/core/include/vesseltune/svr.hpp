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

#include "vesseltune/descriptor.hpp"
#include "vesseltune/oracle.hpp"
#include "vesseltune/params.hpp"

namespace vtn {

/// Per-dimension z-scoring statistics; zero-variance dimensions keep unit
/// scale so they contribute nothing after centering.
struct FeatureScaler {
  std::vector<double> mean;
  std::vector<double> scale;

  void fit(const std::vector<std::vector<double>>& rows);
  std::vector<double> transform(const std::vector<double>& row) const;
};

/// Target transform: optional log (strictly positive scales), then
/// standardization.
struct TargetTransform {
  bool log_scale = false;
  double mean = 0.0;
  double scale = 1.0;

  void fit(const std::vector<double>& y, bool use_log);
  double forward(double y) const;
  double inverse(double t) const;
};

/// One trained epsilon-SVR with RBF kernel for a single hyperparameter axis.
struct SvrModel {
  double C = 1.0;
  double epsilon = 0.1;
  double gamma = 0.1;
  double bias = 0.0;
  FeatureScaler features;
  TargetTransform target;
  std::vector<std::vector<double>> support_vectors;  // stored in z-scored space
  std::vector<double> coefficients;                  // |coef| <= C

  /// Model output in the standardized target space.
  double predict_standardized(const std::vector<double>& x) const;
  /// Prediction on the original target scale (inverse transform applied).
  double predict(const std::vector<double>& x) const;
};

struct SmoDiagnostics {
  int iterations = 0;
  double kkt_violation = 0.0;  // final max violating pair gap
};

/// Trains an epsilon-SVR by sequential minimal optimization on the dual
/// (working set of two, maximal violating pair, with shrinking) to the given
/// KKT tolerance. Features are z-scored and the target is transformed with
/// statistics fit on this training set.
SvrModel train_svr(const std::vector<std::vector<double>>& X, const std::vector<double>& y,
                   double C, double epsilon, double gamma, bool log_target,
                   double kkt_tol = 1e-3, SmoDiagnostics* diag = nullptr);

struct SvrGrids {
  std::vector<double> C{0.1, 1.0, 10.0, 100.0};
  std::vector<double> epsilon{0.01, 0.05, 0.1};
  // gamma <= 0 entries are replaced by the variance-scaled heuristic
  // 1/(d * mean feature variance) computed on the training features.
  std::vector<double> gamma{-1.0, 0.001, 0.01, 0.1};
};

struct SvrSelection {
  double C = 1.0;
  double epsilon = 0.1;
  double gamma = 0.1;
  double inner_mae = 0.0;  // mean inner-CV MAE of the winning combination
};

/// Nested cross-validation: inner folds pick the (C, epsilon, gamma) with
/// minimal mean absolute error on the standardized target; the modal winner
/// across outer folds is returned. Ties prefer smaller C, then larger
/// epsilon, then smaller gamma.
SvrSelection select_hyperparams(const std::vector<std::vector<double>>& X,
                                const std::vector<double>& y, bool log_target,
                                const SvrGrids& grids = {}, int outer_folds = 5,
                                int inner_folds = 3, uint64_t seed = 1);

/// One regressor per hyperparameter axis of one filter, plus everything
/// needed to map a descriptor to valid grid parameters.
struct SvrEnsemble {
  FilterKind filter = FilterKind::frangi;
  std::string descriptor_layout;
  ParamGrid grid;
  std::vector<SvrModel> models;          // aligned with grid.axes
  std::vector<SvrSelection> selections;  // aligned with grid.axes
};

struct EnsembleTrainConfig {
  SvrGrids grids;
  int outer_folds = 5;
  int inner_folds = 3;
  uint64_t seed = 1;
  double kkt_tol = 1e-3;
};

/// Trains one SVR per grid axis from per-image descriptors and their oracle
/// optima (records[i] corresponds to descriptors[i]).
SvrEnsemble train_svr_ensemble(const std::vector<Descriptor140>& descriptors,
                               const std::vector<OracleRecord>& records, FilterKind filter,
                               const ParamGrid& grid, const EnsembleTrainConfig& cfg = {});

/// Per-axis prediction -> inverse target transform -> clip to grid bounds ->
/// snap to the nearest grid value.
FilterParams predict_params(const SvrEnsemble& ensemble, const Descriptor140& phi);

/// Versioned JSON model document; reloading reproduces predictions
/// bit-identically.
void save_svr_ensemble(const SvrEnsemble& ensemble, const std::string& path);
SvrEnsemble load_svr_ensemble(const std::string& path);

}  // namespace vtn
