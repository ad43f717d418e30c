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

#include "vesseltune/svr.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>

#include <json.hpp>

#include "vesseltune/rng.hpp"

namespace vtn {
namespace {

double sq_dist(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

double rbf(const std::vector<double>& a, const std::vector<double>& b, double gamma) {
  return std::exp(-gamma * sq_dist(a, b));
}

// Dual solver for the epsilon-SVR QP in the doubled formulation:
//   min 1/2 a^T Q a + p^T a,  0 <= a <= C,  sum_s z_s a_s = 0,
// with z_s = +1 for s < n, -1 otherwise, Q_st = z_s z_t K(s%n, t%n),
// p_s = eps - y_s (s < n) and eps + y_(s-n) (s >= n).
// Working set of two by maximal violating pair, with shrinking; shrinking is
// validated by a full-gradient recheck before convergence is declared.
class SmoSolver {
 public:
  SmoSolver(const std::vector<std::vector<double>>& X, const std::vector<double>& y, double C,
            double eps, double gamma, double tol)
      : n_(X.size()), C_(C), tol_(tol) {
    kernel_.assign(n_ * n_, 0.0);
    for (size_t i = 0; i < n_; ++i)
      for (size_t j = i; j < n_; ++j)
        kernel_[i * n_ + j] = kernel_[j * n_ + i] = rbf(X[i], X[j], gamma);

    alpha_.assign(2 * n_, 0.0);
    grad_.resize(2 * n_);
    for (size_t s = 0; s < 2 * n_; ++s) grad_[s] = p(s, y, eps);
    p_.resize(2 * n_);
    for (size_t s = 0; s < 2 * n_; ++s) p_[s] = grad_[s];
    active_.resize(2 * n_);
    for (size_t s = 0; s < 2 * n_; ++s) active_[s] = s;
  }

  void solve(SmoDiagnostics* diag) {
    const int max_iter = std::max<int>(10000000, static_cast<int>(n_) * 20000);
    int iter = 0;
    int since_shrink = 0;
    const int shrink_interval = std::max<size_t>(50, n_);
    bool unshrunk_final = false;

    while (iter < max_iter) {
      int i, j;
      double gap;
      if (!select_pair(i, j, gap)) {
        // Active set converged: verify against the full problem.
        if (active_.size() == 2 * n_) break;
        unshrink();
        unshrunk_final = true;
        if (!select_pair(i, j, gap)) break;
      }
      update_pair(i, j);
      ++iter;
      if (++since_shrink >= shrink_interval && !unshrunk_final) {
        shrink();
        since_shrink = 0;
      }
    }
    if (diag) {
      diag->iterations = iter;
      int i, j;
      double gap = 0.0;
      if (active_.size() != 2 * n_) unshrink();
      select_pair(i, j, gap);
      diag->kkt_violation = std::max(0.0, gap);
    }
  }

  // beta_i = alpha_i^+ - alpha_i^-
  std::vector<double> beta() const {
    std::vector<double> b(n_);
    for (size_t i = 0; i < n_; ++i) b[i] = alpha_[i] - alpha_[n_ + i];
    return b;
  }

  double bias() const {
    // For free variables, -z_s G_s equals the bias; otherwise use the
    // midpoint of the KKT interval.
    double sum = 0.0;
    int free_count = 0;
    double up = -1e300, low = 1e300;
    for (size_t s = 0; s < 2 * n_; ++s) {
      const double zg = -z(s) * grad_[s];
      const bool lower = alpha_[s] <= 0.0;
      const bool upper = alpha_[s] >= C_;
      if (!lower && !upper) {
        sum += zg;
        ++free_count;
      }
      if ((z(s) > 0 && !upper) || (z(s) < 0 && !lower)) up = std::max(up, zg);
      if ((z(s) < 0 && !upper) || (z(s) > 0 && !lower)) low = std::min(low, zg);
    }
    if (free_count > 0) return sum / free_count;
    return 0.5 * (up + low);
  }

 private:
  static double p(size_t s, const std::vector<double>& y, double eps) {
    return s < y.size() ? eps - y[s] : eps + y[s - y.size()];
  }
  double z(size_t s) const { return s < n_ ? 1.0 : -1.0; }
  double q(size_t s, size_t t) const {
    const double k = kernel_[(s % n_) * n_ + (t % n_)];
    return z(s) * z(t) * k;
  }

  // Maximal violating pair over the active set. Returns false when the KKT
  // gap is within tolerance.
  bool select_pair(int& i_out, int& j_out, double& gap) {
    double m = -1e300, M = 1e300;
    int i = -1, j = -1;
    for (size_t idx = 0; idx < active_.size(); ++idx) {
      const size_t s = active_[idx];
      const double zg = -z(s) * grad_[s];
      const bool can_up = (z(s) > 0 && alpha_[s] < C_) || (z(s) < 0 && alpha_[s] > 0.0);
      const bool can_low = (z(s) < 0 && alpha_[s] < C_) || (z(s) > 0 && alpha_[s] > 0.0);
      if (can_up && zg > m) {
        m = zg;
        i = static_cast<int>(s);
      }
      if (can_low && zg < M) {
        M = zg;
        j = static_cast<int>(s);
      }
    }
    gap = (i >= 0 && j >= 0) ? m - M : 0.0;
    if (i < 0 || j < 0 || gap <= tol_) return false;
    i_out = i;
    j_out = j;
    return true;
  }

  void update_pair(int i, int j) {
    const double zi = z(i), zj = z(j);
    const double qii = q(i, i), qjj = q(j, j), qij = q(i, j);
    double quad = qii + qjj - 2.0 * zi * zj * qij;
    if (quad <= 1e-12) quad = 1e-12;

    // Move along the feasible direction d_i = zi, d_j = -zj scaled by step.
    const double step_unclipped = (-zi * grad_[i] + zj * grad_[j]) / quad;

    // Box limits for: alpha_i += zi*zi*step = step along its own sign...
    // Working in the "nu" parametrization: alpha_i_new = alpha_i + zi*delta,
    // alpha_j_new = alpha_j - zj*delta keeps the equality constraint.
    double lo = -1e300, hi = 1e300;
    if (zi > 0) {
      hi = std::min(hi, C_ - alpha_[i]);
      lo = std::max(lo, -alpha_[i]);
    } else {
      hi = std::min(hi, alpha_[i]);
      lo = std::max(lo, alpha_[i] - C_);
    }
    if (zj > 0) {
      hi = std::min(hi, alpha_[j]);
      lo = std::max(lo, alpha_[j] - C_);
    } else {
      hi = std::min(hi, C_ - alpha_[j]);
      lo = std::max(lo, -alpha_[j]);
    }
    const double delta = std::clamp(step_unclipped, lo, hi);
    if (delta == 0.0) return;

    const double dai = zi * delta;
    const double daj = -zj * delta;
    alpha_[i] += dai;
    alpha_[j] += daj;
    // Clamp residual round-off at the box.
    alpha_[i] = std::clamp(alpha_[i], 0.0, C_);
    alpha_[j] = std::clamp(alpha_[j], 0.0, C_);

    for (size_t idx = 0; idx < active_.size(); ++idx) {
      const size_t s = active_[idx];
      grad_[s] += q(s, i) * dai + q(s, j) * daj;
    }
  }

  void shrink() {
    double m = -1e300, M = 1e300;
    for (size_t idx = 0; idx < active_.size(); ++idx) {
      const size_t s = active_[idx];
      const double zg = -z(s) * grad_[s];
      const bool can_up = (z(s) > 0 && alpha_[s] < C_) || (z(s) < 0 && alpha_[s] > 0.0);
      const bool can_low = (z(s) < 0 && alpha_[s] < C_) || (z(s) > 0 && alpha_[s] > 0.0);
      if (can_up) m = std::max(m, zg);
      if (can_low) M = std::min(M, zg);
    }
    const double margin = 10.0 * tol_;
    std::vector<size_t> keep;
    keep.reserve(active_.size());
    for (size_t idx = 0; idx < active_.size(); ++idx) {
      const size_t s = active_[idx];
      const bool lower = alpha_[s] <= 0.0;
      const bool upper = alpha_[s] >= C_;
      if (!lower && !upper) {
        keep.push_back(s);
        continue;
      }
      const double zg = -z(s) * grad_[s];
      const bool in_up = (z(s) > 0 && !upper) || (z(s) < 0 && !lower);
      const bool in_low = (z(s) < 0 && !upper) || (z(s) > 0 && !lower);
      bool removable = true;
      if (in_up && zg > M - margin) removable = false;
      if (in_low && zg < m + margin) removable = false;
      if (removable) shrunk_.push_back(s);
      else keep.push_back(s);
    }
    if (keep.size() >= 2) active_ = std::move(keep);
  }

  void unshrink() {
    active_.resize(2 * n_);
    for (size_t s = 0; s < 2 * n_; ++s) active_[s] = s;
    shrunk_.clear();
    // Recompute the gradient from scratch; only nonzero alphas contribute.
    for (size_t s = 0; s < 2 * n_; ++s) grad_[s] = p_[s];
    for (size_t t = 0; t < 2 * n_; ++t) {
      if (alpha_[t] == 0.0) continue;
      for (size_t s = 0; s < 2 * n_; ++s) grad_[s] += q(s, t) * alpha_[t];
    }
  }

  size_t n_;
  double C_;
  double tol_;
  std::vector<double> kernel_;
  std::vector<double> alpha_;
  std::vector<double> grad_;
  std::vector<double> p_;
  std::vector<size_t> active_;
  std::vector<size_t> shrunk_;
};

std::vector<size_t> fold_of_samples(size_t n, int folds, Rng& rng) {
  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  rng.shuffle(order);
  std::vector<size_t> fold(n);
  for (size_t i = 0; i < n; ++i) fold[order[i]] = i % folds;
  return fold;
}

struct ComboKey {
  double C, epsilon, gamma;
  // Preference order for ties: smaller C, larger epsilon, smaller gamma.
  bool preferred_over(const ComboKey& o) const {
    if (C != o.C) return C < o.C;
    if (epsilon != o.epsilon) return epsilon > o.epsilon;
    return gamma < o.gamma;
  }
  bool operator<(const ComboKey& o) const {
    if (C != o.C) return C < o.C;
    if (epsilon != o.epsilon) return epsilon < o.epsilon;
    return gamma < o.gamma;
  }
};

double variance_scaled_gamma(const std::vector<std::vector<double>>& X) {
  if (X.empty() || X[0].empty()) return 1.0;
  const size_t d = X[0].size();
  double total_var = 0.0;
  for (size_t j = 0; j < d; ++j) {
    double mean = 0.0;
    for (const auto& row : X) mean += row[j];
    mean /= static_cast<double>(X.size());
    double var = 0.0;
    for (const auto& row : X) var += (row[j] - mean) * (row[j] - mean);
    total_var += var / static_cast<double>(X.size());
  }
  const double mean_var = total_var / static_cast<double>(d);
  if (mean_var <= 0.0) return 1.0;
  return 1.0 / (static_cast<double>(d) * mean_var);
}

}  // namespace

void FeatureScaler::fit(const std::vector<std::vector<double>>& rows) {
  require(!rows.empty(), "FeatureScaler: no rows");
  const size_t d = rows[0].size();
  mean.assign(d, 0.0);
  scale.assign(d, 1.0);
  for (const auto& r : rows)
    for (size_t j = 0; j < d; ++j) mean[j] += r[j];
  for (size_t j = 0; j < d; ++j) mean[j] /= static_cast<double>(rows.size());
  std::vector<double> var(d, 0.0);
  for (const auto& r : rows)
    for (size_t j = 0; j < d; ++j) var[j] += (r[j] - mean[j]) * (r[j] - mean[j]);
  for (size_t j = 0; j < d; ++j) {
    const double sd = std::sqrt(var[j] / static_cast<double>(rows.size()));
    scale[j] = sd > 0.0 ? sd : 1.0;  // zero-variance dimensions keep unit scale
  }
}

std::vector<double> FeatureScaler::transform(const std::vector<double>& row) const {
  require(row.size() == mean.size(), "FeatureScaler: dimension mismatch");
  std::vector<double> out(row.size());
  for (size_t j = 0; j < row.size(); ++j) out[j] = (row[j] - mean[j]) / scale[j];
  return out;
}

void TargetTransform::fit(const std::vector<double>& y, bool use_log) {
  log_scale = use_log;
  require(!y.empty(), "TargetTransform: no targets");
  double m = 0.0;
  for (double v : y) {
    if (use_log) require(v > 0.0, "TargetTransform: log transform needs positive targets");
    m += use_log ? std::log(v) : v;
  }
  m /= static_cast<double>(y.size());
  double var = 0.0;
  for (double v : y) {
    const double t = (use_log ? std::log(v) : v) - m;
    var += t * t;
  }
  mean = m;
  const double sd = std::sqrt(var / static_cast<double>(y.size()));
  scale = sd > 0.0 ? sd : 1.0;
}

double TargetTransform::forward(double y) const {
  return ((log_scale ? std::log(y) : y) - mean) / scale;
}

double TargetTransform::inverse(double t) const {
  const double y = t * scale + mean;
  return log_scale ? std::exp(y) : y;
}

double SvrModel::predict_standardized(const std::vector<double>& x) const {
  const std::vector<double> xs = features.transform(x);
  double f = bias;
  for (size_t i = 0; i < support_vectors.size(); ++i)
    f += coefficients[i] * rbf(support_vectors[i], xs, gamma);
  return f;
}

double SvrModel::predict(const std::vector<double>& x) const {
  return target.inverse(predict_standardized(x));
}

SvrModel train_svr(const std::vector<std::vector<double>>& X, const std::vector<double>& y,
                   double C, double epsilon, double gamma, bool log_target, double kkt_tol,
                   SmoDiagnostics* diag) {
  require(X.size() == y.size() && X.size() >= 2, "train_svr: need at least 2 aligned samples");
  require(C > 0.0 && gamma > 0.0 && epsilon >= 0.0, "train_svr: invalid C/epsilon/gamma");
  for (const auto& row : X)
    for (double v : row) require(std::isfinite(v), "train_svr: non-finite feature");
  for (double v : y) require(std::isfinite(v), "train_svr: non-finite target");

  SvrModel model;
  model.C = C;
  model.epsilon = epsilon;
  model.gamma = gamma;
  model.features.fit(X);
  model.target.fit(y, log_target);

  std::vector<std::vector<double>> Xs(X.size());
  for (size_t i = 0; i < X.size(); ++i) Xs[i] = model.features.transform(X[i]);
  std::vector<double> ys(y.size());
  for (size_t i = 0; i < y.size(); ++i) ys[i] = model.target.forward(y[i]);

  SmoSolver solver(Xs, ys, C, epsilon, gamma, kkt_tol);
  solver.solve(diag);
  model.bias = solver.bias();

  const std::vector<double> beta = solver.beta();
  for (size_t i = 0; i < beta.size(); ++i) {
    if (beta[i] != 0.0) {
      model.support_vectors.push_back(Xs[i]);  // stored in scaled space
      model.coefficients.push_back(beta[i]);
    }
  }
  return model;
}

SvrSelection select_hyperparams(const std::vector<std::vector<double>>& X,
                                const std::vector<double>& y, bool log_target,
                                const SvrGrids& grids, int outer_folds, int inner_folds,
                                uint64_t seed) {
  const size_t n = X.size();
  require(n >= static_cast<size_t>(outer_folds) && outer_folds >= 2 && inner_folds >= 2,
          "select_hyperparams: too few samples for the fold structure");

  std::vector<double> gammas = grids.gamma;
  const double heuristic = variance_scaled_gamma(X);
  for (double& g : gammas)
    if (g <= 0.0) g = heuristic;

  Rng rng(seed);
  const std::vector<size_t> outer_fold = fold_of_samples(n, outer_folds, rng);

  std::map<ComboKey, int> votes;
  std::map<ComboKey, double> maes;
  for (int o = 0; o < outer_folds; ++o) {
    std::vector<size_t> train_idx;
    for (size_t i = 0; i < n; ++i)
      if (outer_fold[i] != static_cast<size_t>(o)) train_idx.push_back(i);

    Rng inner_rng = rng.fork(static_cast<uint64_t>(o));
    const std::vector<size_t> inner_fold = fold_of_samples(train_idx.size(), inner_folds,
                                                           inner_rng);

    ComboKey best{};
    double best_mae = 1e300;
    bool have_best = false;
    for (double C : grids.C) {
      for (double eps : grids.epsilon) {
        for (double gamma : gammas) {
          double mae_sum = 0.0;
          int mae_count = 0;
          for (int f = 0; f < inner_folds; ++f) {
            std::vector<std::vector<double>> Xt, Xv;
            std::vector<double> yt, yv;
            for (size_t k = 0; k < train_idx.size(); ++k) {
              if (inner_fold[k] == static_cast<size_t>(f)) {
                Xv.push_back(X[train_idx[k]]);
                yv.push_back(y[train_idx[k]]);
              } else {
                Xt.push_back(X[train_idx[k]]);
                yt.push_back(y[train_idx[k]]);
              }
            }
            if (Xt.size() < 2 || Xv.empty()) continue;
            const SvrModel m = train_svr(Xt, yt, C, eps, gamma, log_target);
            for (size_t k = 0; k < Xv.size(); ++k) {
              mae_sum += std::fabs(m.predict_standardized(Xv[k]) - m.target.forward(yv[k]));
              ++mae_count;
            }
          }
          if (mae_count == 0) continue;
          const double mae = mae_sum / mae_count;
          const ComboKey key{C, eps, gamma};
          if (!have_best || mae < best_mae ||
              (mae == best_mae && key.preferred_over(best))) {
            best = key;
            best_mae = mae;
            have_best = true;
          }
        }
      }
    }
    require(have_best, "select_hyperparams: inner folds produced no evaluations");
    ++votes[best];
    maes[best] += best_mae;
  }

  ComboKey winner{};
  int winner_votes = -1;
  for (const auto& [key, count] : votes) {
    if (count > winner_votes || (count == winner_votes && key.preferred_over(winner))) {
      winner = key;
      winner_votes = count;
    }
  }
  SvrSelection sel;
  sel.C = winner.C;
  sel.epsilon = winner.epsilon;
  sel.gamma = winner.gamma;
  sel.inner_mae = maes[winner] / winner_votes;
  return sel;
}

SvrEnsemble train_svr_ensemble(const std::vector<Descriptor140>& descriptors,
                               const std::vector<OracleRecord>& records, FilterKind filter,
                               const ParamGrid& grid, const EnsembleTrainConfig& cfg) {
  require(descriptors.size() == records.size() && !descriptors.empty(),
          "train_svr_ensemble: descriptors and records must be aligned and nonempty");
  for (const auto& r : records)
    require(r.filter == filter, "train_svr_ensemble: record filter mismatch");

  std::vector<std::vector<double>> X(descriptors.size());
  for (size_t i = 0; i < descriptors.size(); ++i)
    X[i].assign(descriptors[i].values.begin(), descriptors[i].values.end());

  SvrEnsemble ens;
  ens.filter = filter;
  ens.descriptor_layout = Descriptor140::layout_tag();
  ens.grid = grid;

  for (const auto& axis : grid.axes) {
    std::vector<double> y(records.size());
    for (size_t i = 0; i < records.size(); ++i) y[i] = records[i].best_params.get(axis.id);

    const SvrSelection sel = select_hyperparams(X, y, axis.log_scale, cfg.grids, cfg.outer_folds,
                                                cfg.inner_folds, cfg.seed);
    ens.selections.push_back(sel);
    ens.models.push_back(
        train_svr(X, y, sel.C, sel.epsilon, sel.gamma, axis.log_scale, cfg.kkt_tol));
  }
  return ens;
}

FilterParams predict_params(const SvrEnsemble& ensemble, const Descriptor140& phi) {
  require(ensemble.descriptor_layout == Descriptor140::layout_tag(),
          "predict_params: descriptor layout mismatch (model has '" + ensemble.descriptor_layout +
              "', runtime is '" + Descriptor140::layout_tag() + "')");
  const std::vector<double> x(phi.values.begin(), phi.values.end());
  FilterParams out;
  out.kind = ensemble.filter;
  for (size_t a = 0; a < ensemble.grid.axes.size(); ++a) {
    const GridAxis& axis = ensemble.grid.axes[a];
    double v = ensemble.models[a].predict(x);
    v = std::clamp(v, axis.min(), axis.max());
    out.set(axis.id, snap_axis(v, axis));
  }
  return out;
}

namespace {

using nlohmann::json;

json axis_to_json(const GridAxis& a) {
  return json{{"name", to_string(a.id)},
              {"values", a.values},
              {"log_scale", a.log_scale},
              {"integer", a.integer}};
}

AxisId axis_id_from_string(const std::string& s) {
  for (AxisId id : {AxisId::sigma, AxisId::threshold, AxisId::alpha, AxisId::beta,
                    AxisId::disk_size, AxisId::max_hole, AxisId::min_region})
    if (to_string(id) == s) return id;
  throw Error("unknown axis name '" + s + "'");
}

}  // namespace

void save_svr_ensemble(const SvrEnsemble& ensemble, const std::string& path) {
  json doc;
  doc["format"] = "vesseltune-svr-ensemble";
  doc["version"] = 1;
  doc["filter"] = to_string(ensemble.filter);
  doc["descriptor_layout"] = ensemble.descriptor_layout;
  doc["axes"] = json::array();
  for (size_t a = 0; a < ensemble.grid.axes.size(); ++a) {
    const SvrModel& m = ensemble.models[a];
    json jm{{"C", m.C},
            {"epsilon", m.epsilon},
            {"gamma", m.gamma},
            {"bias", m.bias},
            {"feature_mean", m.features.mean},
            {"feature_scale", m.features.scale},
            {"target_log", m.target.log_scale},
            {"target_mean", m.target.mean},
            {"target_scale", m.target.scale},
            {"support_vectors", m.support_vectors},
            {"coefficients", m.coefficients}};
    json ja = axis_to_json(ensemble.grid.axes[a]);
    ja["model"] = std::move(jm);
    ja["selection_inner_mae"] = ensemble.selections.size() > a
                                    ? ensemble.selections[a].inner_mae
                                    : 0.0;
    doc["axes"].push_back(std::move(ja));
  }
  std::ofstream out(path);
  if (!out) throw Error(path + ": cannot open for writing");
  out << doc.dump(2) << "\n";
  if (!out) throw Error(path + ": write failed");
}

SvrEnsemble load_svr_ensemble(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(path + ": cannot open file");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw Error(path + ": invalid JSON (" + e.what() + ")");
  }
  if (doc.value("format", "") != "vesseltune-svr-ensemble")
    throw Error(path + ": not a vesseltune SVR ensemble file");
  if (doc.value("version", 0) != 1)
    throw Error(path + ": unsupported model version");

  SvrEnsemble ens;
  ens.filter = filter_from_string(doc.at("filter").get<std::string>());
  ens.descriptor_layout = doc.at("descriptor_layout").get<std::string>();
  ens.grid.kind = ens.filter;
  for (const auto& ja : doc.at("axes")) {
    GridAxis axis;
    axis.id = axis_id_from_string(ja.at("name").get<std::string>());
    axis.values = ja.at("values").get<std::vector<double>>();
    axis.log_scale = ja.at("log_scale").get<bool>();
    axis.integer = ja.at("integer").get<bool>();
    ens.grid.axes.push_back(axis);

    const auto& jm = ja.at("model");
    SvrModel m;
    m.C = jm.at("C").get<double>();
    m.epsilon = jm.at("epsilon").get<double>();
    m.gamma = jm.at("gamma").get<double>();
    m.bias = jm.at("bias").get<double>();
    m.features.mean = jm.at("feature_mean").get<std::vector<double>>();
    m.features.scale = jm.at("feature_scale").get<std::vector<double>>();
    m.target.log_scale = jm.at("target_log").get<bool>();
    m.target.mean = jm.at("target_mean").get<double>();
    m.target.scale = jm.at("target_scale").get<double>();
    m.support_vectors = jm.at("support_vectors").get<std::vector<std::vector<double>>>();
    m.coefficients = jm.at("coefficients").get<std::vector<double>>();
    ens.models.push_back(std::move(m));

    SvrSelection sel;
    sel.C = ens.models.back().C;
    sel.epsilon = ens.models.back().epsilon;
    sel.gamma = ens.models.back().gamma;
    sel.inner_mae = ja.value("selection_inner_mae", 0.0);
    ens.selections.push_back(sel);
  }
  return ens;
}

}  // namespace vtn
