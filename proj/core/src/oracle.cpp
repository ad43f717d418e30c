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

#include "vesseltune/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <sstream>

#include "vesseltune/hessian.hpp"
#include "vesseltune/morphology.hpp"
#include "vesseltune/preprocess.hpp"
#include "vesseltune/vesselness.hpp"

namespace vtn {
namespace {

constexpr int kMaxAxes = 6;

// Exact Dice comparison: dice = num/den with num = 2*|pred & gt|,
// den = |pred| + |gt| (num=den=1 for the empty/empty convention).
struct Candidate {
  int64_t num = -1;  // invalid until first evaluation
  int64_t den = 1;
  std::array<int, kMaxAxes> idx{};

  bool better_than(const Candidate& o) const {
    if (o.num < 0) return true;
    const int64_t lhs = num * o.den;
    const int64_t rhs = o.num * den;
    if (lhs != rhs) return lhs > rhs;
    return idx < o.idx;  // lexicographic by axis order, ascending values
  }
};

void note(Candidate& best, int64_t inter2, int64_t den, const std::array<int, kMaxAxes>& idx) {
  Candidate c;
  if (den == 0) {
    c.num = 1;
    c.den = 1;
  } else {
    c.num = inter2;
    c.den = den;
  }
  c.idx = idx;
  if (c.better_than(best)) best = c;
}

// Region statistics of one binarized mask: 8-connected foreground components
// and 4-connected background components with ground-truth overlaps, plus the
// containment links needed to replay hole filling without materializing masks.
struct RegionStats {
  int fg_count = 0;
  std::vector<int64_t> fg_area, fg_gt;
  std::vector<int32_t> fg_parent_hole;  // -1 when not enclosed by a hole

  int hole_count = 0;                    // bounded background components
  std::vector<int64_t> hole_area, hole_gt;
  std::vector<int32_t> hole_parent_fg;  // enclosing foreground component
};

class LabelScratch {
 public:
  void label(const std::vector<uint8_t>& cells, int w, int h, bool value, int connectivity,
             std::vector<int32_t>& labels_out, std::vector<size_t>& first_pixel,
             std::vector<uint8_t>& touches_border, int& count) {
    const size_t n = cells.size();
    labels_out.assign(n, -1);
    parent_.clear();

    auto find = [this](int32_t a) {
      while (parent_[a] != a) {
        parent_[a] = parent_[parent_[a]];
        a = parent_[a];
      }
      return a;
    };

    for (int y = 0; y < h; ++y) {
      const size_t row = static_cast<size_t>(y) * w;
      for (int x = 0; x < w; ++x) {
        if ((cells[row + x] != 0) != value) continue;
        int32_t lbl = -1;
        auto consider = [&](size_t nidx) {
          const int32_t nl = labels_out[nidx];
          if (nl < 0) return;
          const int32_t r = find(nl);
          if (lbl < 0) {
            lbl = r;
          } else if (lbl != r) {
            const int32_t a = std::min(lbl, r), b = std::max(lbl, r);
            parent_[b] = a;
            lbl = a;
          }
        };
        if (x > 0) consider(row + x - 1);
        if (y > 0) {
          consider(row + x - w);
          if (connectivity == 8) {
            if (x > 0) consider(row + x - w - 1);
            if (x < w - 1) consider(row + x - w + 1);
          }
        }
        if (lbl < 0) {
          lbl = static_cast<int32_t>(parent_.size());
          parent_.push_back(lbl);
        }
        labels_out[row + x] = lbl;
      }
    }

    remap_.assign(parent_.size(), -1);
    count = 0;
    first_pixel.clear();
    for (size_t i = 0; i < n; ++i) {
      int32_t& l = labels_out[i];
      if (l < 0) continue;
      const int32_t root = find(l);
      int32_t m = remap_[root];
      if (m < 0) {
        m = count++;
        remap_[root] = m;
        first_pixel.push_back(i);  // scan order: topmost-leftmost pixel
      }
      l = m;
    }
    touches_border.assign(count, 0);
    for (int x = 0; x < w; ++x) {
      if (labels_out[x] >= 0) touches_border[labels_out[x]] = 1;
      const size_t bottom = static_cast<size_t>(h - 1) * w + x;
      if (labels_out[bottom] >= 0) touches_border[labels_out[bottom]] = 1;
    }
    for (int y = 0; y < h; ++y) {
      const size_t row = static_cast<size_t>(y) * w;
      if (labels_out[row] >= 0) touches_border[labels_out[row]] = 1;
      if (labels_out[row + w - 1] >= 0) touches_border[labels_out[row + w - 1]] = 1;
    }
  }

 private:
  std::vector<int32_t> parent_;
  std::vector<int32_t> remap_;
};

class StatsBuilder {
 public:
  // gt is a 0/1 raster of the cropped frame.
  void build(const std::vector<uint8_t>& mask, const std::vector<uint8_t>& gt, int w, int h,
             RegionStats& out) {
    fg_.label(mask, w, h, true, 8, fg_labels_, fg_first_, fg_border_, out.fg_count);
    bg_.label(mask, w, h, false, 4, bg_labels_, bg_first_, bg_border_, bg_count_);

    out.fg_area.assign(out.fg_count, 0);
    out.fg_gt.assign(out.fg_count, 0);
    out.fg_parent_hole.assign(out.fg_count, -1);

    // Compact bounded background components into hole ids.
    hole_id_.assign(bg_count_, -1);
    out.hole_count = 0;
    for (int b = 0; b < bg_count_; ++b)
      if (!bg_border_[b]) hole_id_[b] = out.hole_count++;
    out.hole_area.assign(out.hole_count, 0);
    out.hole_gt.assign(out.hole_count, 0);
    out.hole_parent_fg.assign(out.hole_count, -1);

    const size_t n = mask.size();
    for (size_t i = 0; i < n; ++i) {
      const int32_t f = fg_labels_[i];
      if (f >= 0) {
        ++out.fg_area[f];
        out.fg_gt[f] += gt[i];
      } else {
        const int32_t hid = hole_id_[bg_labels_[i]];
        if (hid >= 0) {
          ++out.hole_area[hid];
          out.hole_gt[hid] += gt[i];
        }
      }
    }

    // Containment: the pixel directly above a region's topmost-leftmost pixel
    // belongs to the region that directly encloses it.
    for (int b = 0; b < bg_count_; ++b) {
      const int32_t hid = hole_id_[b];
      if (hid < 0) continue;
      out.hole_parent_fg[hid] = fg_labels_[bg_first_[b] - w];
    }
    for (int f = 0; f < out.fg_count; ++f) {
      const size_t p = fg_first_[f];
      if (p < static_cast<size_t>(w)) continue;  // touches the top row
      out.fg_parent_hole[f] = hole_id_[bg_labels_[p - w]];
    }
  }

 private:
  LabelScratch fg_, bg_;
  std::vector<int32_t> fg_labels_, bg_labels_;
  std::vector<size_t> fg_first_, bg_first_;
  std::vector<uint8_t> fg_border_, bg_border_;
  std::vector<int32_t> hole_id_;
  int bg_count_ = 0;
};

// Replays fill_small_holes(max_hole) + remove_small_objects(min_region) over
// ascending max_hole values using a union-find over components and holes.
class HoleFillSweep {
 public:
  void reset(const RegionStats& s) {
    stats_ = &s;
    const int n = s.fg_count + s.hole_count;
    parent_.resize(n);
    area_.resize(n);
    gt_.resize(n);
    for (int i = 0; i < s.fg_count; ++i) {
      parent_[i] = i;
      area_[i] = s.fg_area[i];
      gt_[i] = s.fg_gt[i];
    }
    for (int j = 0; j < s.hole_count; ++j) {
      const int id = s.fg_count + j;
      parent_[id] = id;
      area_[id] = 0;  // hole area joins a component only when filled
      gt_[id] = 0;
    }

    holes_by_area_.resize(s.hole_count);
    for (int j = 0; j < s.hole_count; ++j) holes_by_area_[j] = j;
    std::sort(holes_by_area_.begin(), holes_by_area_.end(),
              [&s](int a, int b) { return s.hole_area[a] < s.hole_area[b]; });

    islands_of_hole_.assign(s.hole_count, {});
    dynamic_.clear();
    is_dynamic_.assign(s.fg_count, 0);
    for (int f = 0; f < s.fg_count; ++f) {
      const int32_t h = s.fg_parent_hole[f];
      if (h >= 0) {
        islands_of_hole_[h].push_back(f);
        mark_dynamic(f);
      }
    }
    for (int j = 0; j < s.hole_count; ++j) mark_dynamic(s.hole_parent_fg[j]);

    // Static components never change; sort once for suffix sums.
    static_area_.clear();
    for (int f = 0; f < s.fg_count; ++f)
      if (!is_dynamic_[f]) static_area_.push_back(f);
    std::sort(static_area_.begin(), static_area_.end(),
              [&s](int a, int b) { return s.fg_area[a] < s.fg_area[b]; });
    static_sorted_areas_.resize(static_area_.size());
    suffix_area_.assign(static_area_.size() + 1, 0);
    suffix_gt_.assign(static_area_.size() + 1, 0);
    for (size_t i = 0; i < static_area_.size(); ++i)
      static_sorted_areas_[i] = s.fg_area[static_area_[i]];
    for (size_t i = static_area_.size(); i-- > 0;) {
      suffix_area_[i] = suffix_area_[i + 1] + s.fg_area[static_area_[i]];
      suffix_gt_[i] = suffix_gt_[i + 1] + s.fg_gt[static_area_[i]];
    }
    next_hole_ = 0;
  }

  // Advances the fill frontier to max_hole (values must be non-decreasing
  // between calls), then reports kept-area sums for each min_region.
  void advance(int64_t max_hole) {
    const RegionStats& s = *stats_;
    while (next_hole_ < holes_by_area_.size() &&
           s.hole_area[holes_by_area_[next_hole_]] <= max_hole) {
      const int j = holes_by_area_[next_hole_++];
      const int hole_node = s.fg_count + j;
      unite(hole_node, s.hole_parent_fg[j]);
      area_[find(hole_node)] += s.hole_area[j];
      gt_[find(hole_node)] += s.hole_gt[j];
      for (int island : islands_of_hole_[j]) unite(hole_node, island);
    }
  }

  // Sum of (area, gt) over kept components with area >= min_region.
  void kept(int64_t min_region, int64_t& area_out, int64_t& gt_out) {
    // Dynamic roots, deduplicated per call.
    area_out = 0;
    gt_out = 0;
    ++stamp_;
    if (seen_.size() != parent_.size()) seen_.assign(parent_.size(), 0);
    for (int f : dynamic_) {
      const int r = find(f);
      if (seen_[r] == stamp_) continue;
      seen_[r] = stamp_;
      if (area_[r] >= min_region) {
        area_out += area_[r];
        gt_out += gt_[r];
      }
    }
    const auto it = std::lower_bound(static_sorted_areas_.begin(), static_sorted_areas_.end(),
                                     min_region);
    const size_t k = static_cast<size_t>(it - static_sorted_areas_.begin());
    area_out += suffix_area_[k];
    gt_out += suffix_gt_[k];
  }

 private:
  void mark_dynamic(int f) {
    if (!is_dynamic_[f]) {
      is_dynamic_[f] = 1;
      dynamic_.push_back(f);
    }
  }
  int find(int a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    area_[a] += area_[b];
    gt_[a] += gt_[b];
  }

  const RegionStats* stats_ = nullptr;
  std::vector<int> parent_;
  std::vector<int64_t> area_, gt_;
  std::vector<int> holes_by_area_;
  std::vector<std::vector<int>> islands_of_hole_;
  std::vector<int> dynamic_;
  std::vector<uint8_t> is_dynamic_;
  std::vector<int> static_area_;
  std::vector<int64_t> static_sorted_areas_, suffix_area_, suffix_gt_;
  std::vector<uint64_t> seen_;
  uint64_t stamp_ = 0;
  size_t next_hole_ = 0;
};

// Normalization identical to apply_filter's minmax_inplace.
void normalize_like_apply_filter(const std::vector<double>& raw, std::vector<double>& out) {
  double lo = 1e300, hi = -1e300;
  for (double x : raw) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  out.resize(raw.size());
  if (hi - lo <= 0.0) {
    std::fill(out.begin(), out.end(), 0.0);
    return;
  }
  const double inv = 1.0 / (hi - lo);
  for (size_t i = 0; i < raw.size(); ++i) out[i] = (raw[i] - lo) * inv;
}

struct CroppedProblem {
  GrayImage work;
  std::vector<uint8_t> gt;  // cropped to the working frame
  int64_t gt_total = 0;     // over the full original frame
};

CroppedProblem prepare(const GrayImage& img, const BinaryMask& gt, const SegmentOptions& opts) {
  require(img.width == gt.width && img.height == gt.height,
          "oracle_search: image and ground truth dimensions differ");
  CroppedProblem p;
  p.gt_total = gt.area();

  const int max_band = (std::min(img.width, img.height) - 1) / 2;
  const int band = std::min(opts.border_band, max_band);
  CropRecord crop;
  if (band >= 1) {
    auto [cropped, c] = strip_dark_borders(img, band, opts.border_cutoff);
    p.work = std::move(cropped);
    crop = c;
  } else {
    p.work = img;
    crop.orig_width = img.width;
    crop.orig_height = img.height;
  }
  p.gt.resize(p.work.size());
  for (int y = 0; y < p.work.height; ++y)
    for (int x = 0; x < p.work.width; ++x)
      p.gt[static_cast<size_t>(y) * p.work.width + x] =
          gt.at(x + crop.left, y + crop.top) ? 1 : 0;
  return p;
}

EigenField eigen_for(const GrayImage& work, double sigma, FilterKind kind, bool dark_vessels) {
  const HessianField h = gaussian_hessian(work, sigma);
  const EigenOrder order =
      kind == FilterKind::sato ? EigenOrder::by_abs_asc : EigenOrder::by_abs_desc;
  EigenField eig = hessian_eigen(h, order);
  if (response_uses_negated_eigen(kind, dark_vessels)) eig = negated(eig);
  return eig;
}

// Meijering / Sato: closing + small-object removal. Component areas are
// sorted per closed mask; the min_region axis is then a suffix-sum lookup.
Candidate search_close_filter(const CroppedProblem& p, FilterKind kind, const ParamGrid& grid,
                              const SegmentOptions& opts) {
  const auto& sigmas = grid.axis(AxisId::sigma).values;
  const auto& thresholds = grid.axis(AxisId::threshold).values;
  const auto& disks = grid.axis(AxisId::disk_size).values;
  const auto& regions = grid.axis(AxisId::min_region).values;

  Candidate best;
  std::vector<double> norm;
  const int w = p.work.width, h = p.work.height;

  for (size_t si = 0; si < sigmas.size(); ++si) {
    const EigenField eig = eigen_for(p.work, sigmas[si], kind, opts.dark_vessels);
    const VesselnessResponse resp = kind == FilterKind::meijering
                                        ? meijering_response(eig)
                                        : sato_response(eig, sigmas[si]);
    normalize_like_apply_filter(resp.data, norm);

    for (size_t ti = 0; ti < thresholds.size(); ++ti) {
      BinaryMask mask(w, h);
      for (size_t i = 0; i < norm.size(); ++i) mask.data[i] = norm[i] >= thresholds[ti] ? 1 : 0;

      for (size_t di = 0; di < disks.size(); ++di) {
        const int radius = std::max(1, static_cast<int>(std::lround(disks[di])));
        const BinaryMask closed = binary_close(mask, radius);
        const Labeling lab = label_components(closed, 8);

        // (area, gt) per component, sorted by area for the region sweep.
        std::vector<std::pair<int64_t, int64_t>> comps(lab.count, {0, 0});
        for (size_t i = 0; i < closed.data.size(); ++i) {
          const int32_t l = lab.labels[i];
          if (l < 0) continue;
          ++comps[l].first;
          comps[l].second += p.gt[i];
        }
        std::sort(comps.begin(), comps.end());
        std::vector<int64_t> suffix_area(comps.size() + 1, 0), suffix_gt(comps.size() + 1, 0);
        for (size_t i = comps.size(); i-- > 0;) {
          suffix_area[i] = suffix_area[i + 1] + comps[i].first;
          suffix_gt[i] = suffix_gt[i + 1] + comps[i].second;
        }

        for (size_t ri = 0; ri < regions.size(); ++ri) {
          const int64_t min_region = static_cast<int64_t>(std::llround(regions[ri]));
          const auto it = std::lower_bound(
              comps.begin(), comps.end(), std::make_pair(min_region, INT64_MIN));
          const size_t k = static_cast<size_t>(it - comps.begin());
          const int64_t kept_area = suffix_area[k];
          const int64_t kept_gt = suffix_gt[k];
          note(best, 2 * kept_gt, kept_area + p.gt_total,
               {static_cast<int>(si), static_cast<int>(ti), static_cast<int>(di),
                static_cast<int>(ri), 0, 0});
        }
      }
    }
  }
  return best;
}

// Frangi: hole filling + small-object removal, swept over the containment
// tree. The (alpha, beta) response factors are cached per sigma.
Candidate search_frangi(const CroppedProblem& p, const ParamGrid& grid,
                        const SegmentOptions& opts) {
  const auto& sigmas = grid.axis(AxisId::sigma).values;
  const auto& thresholds = grid.axis(AxisId::threshold).values;
  const auto& alphas = grid.axis(AxisId::alpha).values;
  const auto& betas = grid.axis(AxisId::beta).values;
  const auto& holes = grid.axis(AxisId::max_hole).values;
  const auto& regions = grid.axis(AxisId::min_region).values;

  Candidate best;
  const size_t n = p.work.size();
  const int w = p.work.width, h = p.work.height;

  std::vector<double> ra2(n), s2(n), raw(n), norm(n);
  std::vector<uint8_t> nonpos(n);
  std::vector<std::vector<double>> f1(alphas.size()), f2(betas.size());
  std::vector<uint8_t> mask(n);
  StatsBuilder builder;
  RegionStats stats;
  HoleFillSweep sweep;

  for (size_t si = 0; si < sigmas.size(); ++si) {
    const EigenField eig = eigen_for(p.work, sigmas[si], FilterKind::frangi, opts.dark_vessels);
    for (size_t i = 0; i < n; ++i) {
      const double l1 = eig.lam1[i], l2 = eig.lam2[i];
      nonpos[i] = l1 <= 0.0 ? 1 : 0;
      ra2[i] = l1 == 0.0 ? 0.0 : (l2 * l2) / (l1 * l1);
      s2[i] = l1 * l1 + l2 * l2;
    }
    for (size_t ai = 0; ai < alphas.size(); ++ai) {
      const double ka = 1.0 / (2.0 * alphas[ai] * alphas[ai]);
      f1[ai].resize(n);
      for (size_t i = 0; i < n; ++i) f1[ai][i] = nonpos[i] ? std::exp(-ra2[i] * ka) : 0.0;
    }
    for (size_t bi = 0; bi < betas.size(); ++bi) {
      const double kb = 1.0 / (2.0 * betas[bi] * betas[bi]);
      f2[bi].resize(n);
      for (size_t i = 0; i < n; ++i) f2[bi][i] = 1.0 - std::exp(-s2[i] * kb);
    }

    for (size_t ai = 0; ai < alphas.size(); ++ai) {
      for (size_t bi = 0; bi < betas.size(); ++bi) {
        const double* a = f1[ai].data();
        const double* b = f2[bi].data();
        for (size_t i = 0; i < n; ++i) raw[i] = a[i] * b[i];
        normalize_like_apply_filter(raw, norm);

        for (size_t ti = 0; ti < thresholds.size(); ++ti) {
          for (size_t i = 0; i < n; ++i) mask[i] = norm[i] >= thresholds[ti] ? 1 : 0;
          builder.build(mask, p.gt, w, h, stats);
          sweep.reset(stats);
          for (size_t hi = 0; hi < holes.size(); ++hi) {
            sweep.advance(static_cast<int64_t>(std::llround(holes[hi])));
            for (size_t ri = 0; ri < regions.size(); ++ri) {
              int64_t kept_area = 0, kept_gt = 0;
              sweep.kept(static_cast<int64_t>(std::llround(regions[ri])), kept_area, kept_gt);
              note(best, 2 * kept_gt, kept_area + p.gt_total,
                   {static_cast<int>(si), static_cast<int>(ti), static_cast<int>(ai),
                    static_cast<int>(bi), static_cast<int>(hi), static_cast<int>(ri)});
            }
          }
        }
      }
    }
  }
  return best;
}

}  // namespace

OracleRecord oracle_search(const GrayImage& img, const BinaryMask& gt, FilterKind filter,
                           const ParamGrid& grid, const SegmentOptions& opts,
                           const std::string& image_id) {
  require(grid.kind == filter, "oracle_search: grid does not match filter");
  const CroppedProblem p = prepare(img, gt, opts);

  const Candidate best = filter == FilterKind::frangi ? search_frangi(p, grid, opts)
                                                      : search_close_filter(p, filter, grid, opts);

  OracleRecord rec;
  rec.image_id = image_id;
  rec.filter = filter;
  rec.best_dice = best.den == 0 ? 1.0 : static_cast<double>(best.num) / best.den;
  rec.best_params.kind = filter;
  for (size_t a = 0; a < grid.axes.size(); ++a)
    rec.best_params.set(grid.axes[a].id, grid.axes[a].values[best.idx[a]]);
  return rec;
}

FilterParams mean_params(const std::vector<OracleRecord>& records, FilterKind filter) {
  const ParamGrid grid = default_grid(filter);
  FilterParams mean;
  mean.kind = filter;
  int count = 0;
  for (const auto& rec : records) {
    if (rec.filter != filter) continue;
    ++count;
    for (const auto& axis : grid.axes)
      mean.set(axis.id, mean.get(axis.id) + rec.best_params.get(axis.id));
  }
  require(count > 0, "mean_params: no records for filter " + to_string(filter));
  for (const auto& axis : grid.axes) mean.set(axis.id, mean.get(axis.id) / count);
  return mean;
}

void save_oracle_records(const std::vector<OracleRecord>& records, const ParamGrid& grid,
                         const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(path + ": cannot open for writing");
  out << "image_id,filter";
  for (const auto& axis : grid.axes) out << "," << to_string(axis.id);
  out << ",dice\n";
  out.precision(17);
  for (const auto& rec : records) {
    require(rec.filter == grid.kind, "save_oracle_records: mixed filters");
    out << rec.image_id << "," << to_string(rec.filter);
    for (const auto& axis : grid.axes) out << "," << rec.best_params.get(axis.id);
    out << "," << rec.best_dice << "\n";
  }
  if (!out) throw Error(path + ": write failed");
}

std::vector<OracleRecord> load_oracle_records(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(path + ": cannot open file");
  std::string line;
  if (!std::getline(in, line)) throw Error(path + ": empty records file");

  std::vector<std::string> header;
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) header.push_back(cell);
  }
  require(header.size() >= 4 && header.front() == "image_id" && header.back() == "dice" &&
              header[1] == "filter",
          path + ": malformed oracle records header");

  std::vector<OracleRecord> records;
  size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    require(cells.size() == header.size(),
            path + ": wrong column count at line " + std::to_string(line_no));
    OracleRecord rec;
    rec.image_id = cells[0];
    rec.filter = filter_from_string(cells[1]);
    rec.best_params.kind = rec.filter;
    for (size_t c = 2; c + 1 < cells.size(); ++c) {
      bool known = false;
      for (AxisId id : {AxisId::sigma, AxisId::threshold, AxisId::alpha, AxisId::beta,
                        AxisId::disk_size, AxisId::max_hole, AxisId::min_region}) {
        if (to_string(id) == header[c]) {
          rec.best_params.set(id, std::stod(cells[c]));
          known = true;
          break;
        }
      }
      require(known, path + ": unknown axis column '" + header[c] + "'");
    }
    rec.best_dice = std::stod(cells.back());
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace vtn
