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

#include "vesseltune/eval.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "vesseltune/image_io.hpp"
#include "vesseltune/parallel.hpp"
#include "vesseltune/rng.hpp"
#include "vesseltune/segment.hpp"

namespace vtn {

using nlohmann::json;

double dice(const BinaryMask& pred, const BinaryMask& gt) {
  require(pred.same_shape(gt), "dice: mask dimensions differ");
  int64_t inter = 0, a = 0, b = 0;
  for (size_t i = 0; i < pred.size(); ++i) {
    const bool pa = pred.data[i] != 0;
    const bool pb = gt.data[i] != 0;
    a += pa;
    b += pb;
    inter += pa && pb;
  }
  if (a + b == 0) return 1.0;
  return 2.0 * static_cast<double>(inter) / static_cast<double>(a + b);
}

std::vector<ManifestEntry> DatasetManifest::with_split(const std::string& split) const {
  if (split == "all") return entries;
  std::vector<ManifestEntry> out;
  for (const auto& e : entries)
    if (e.split == split) out.push_back(e);
  return out;
}

void save_manifest(const DatasetManifest& manifest, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(path + ": cannot open for writing");
  out << "image,mask,subject,split\n";
  for (const auto& e : manifest.entries)
    out << e.image_path << "," << e.mask_path << "," << e.subject_id << "," << e.split << "\n";
  if (!out) throw Error(path + ": write failed");
}

DatasetManifest load_manifest(const std::string& path, const std::string& name) {
  std::ifstream in(path);
  if (!in) throw Error(path + ": cannot open file");
  std::string line;
  if (!std::getline(in, line) || line != "image,mask,subject,split")
    throw Error(path + ": expected manifest header 'image,mask,subject,split'");
  DatasetManifest m;
  m.name = name;
  size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::stringstream ss(line);
    ManifestEntry e;
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != 4)
      throw Error(path + ": wrong column count at line " + std::to_string(line_no));
    e.image_path = cells[0];
    e.mask_path = cells[1];
    e.subject_id = cells[2];
    e.split = cells[3];
    require(!e.subject_id.empty(), path + ": empty subject id at line " + std::to_string(line_no));
    if (!std::filesystem::exists(e.image_path))
      throw Error(path + ": missing image file " + e.image_path);
    if (!std::filesystem::exists(e.mask_path))
      throw Error(path + ": missing mask file " + e.mask_path);
    m.entries.push_back(std::move(e));
  }
  return m;
}

IngestResult ingest_dca1(const std::string& root) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(root)) throw Error(root + ": not a directory");

  IngestResult result;
  result.manifest.name = "dca1";

  std::map<long long, fs::path> images;
  std::map<long long, fs::path> masks;
  for (const auto& entry : fs::directory_iterator(root)) {
    if (!entry.is_regular_file()) continue;
    const fs::path p = entry.path();
    if (p.extension() != ".pgm") continue;
    std::string stem = p.stem().string();
    const bool is_mask = stem.size() > 3 && stem.substr(stem.size() - 3) == "_gt";
    if (is_mask) stem = stem.substr(0, stem.size() - 3);
    if (stem.empty() || !std::all_of(stem.begin(), stem.end(),
                                     [](char c) { return std::isdigit(c); })) {
      result.warnings.push_back("unrecognized file name: " + p.filename().string());
      continue;
    }
    const long long id = std::stoll(stem);
    (is_mask ? masks : images)[id] = p;
  }

  for (const auto& [id, img] : images) {
    const auto it = masks.find(id);
    if (it == masks.end()) {
      result.warnings.push_back("image without ground truth: " + img.filename().string());
      continue;
    }
    ManifestEntry e;
    e.image_path = img.string();
    e.mask_path = it->second.string();
    e.subject_id = std::to_string(id);  // DCA1 publishes no subject ids
    e.split = id <= 100 ? "train" : (id <= 130 ? "test" : "extra");
    result.manifest.entries.push_back(std::move(e));
  }
  for (const auto& [id, mask] : masks)
    if (!images.count(id))
      result.warnings.push_back("ground truth without image: " + mask.filename().string());

  if (result.manifest.entries.empty())
    result.warnings.push_back("no image/ground-truth pairs found under " + root);
  return result;
}

std::vector<int> make_folds(const DatasetManifest& manifest, int k, uint64_t seed) {
  require(k >= 1, "make_folds: k must be >= 1");
  std::set<std::string> subject_set;
  for (const auto& e : manifest.entries) subject_set.insert(e.subject_id);
  require(static_cast<int>(subject_set.size()) >= k,
          "make_folds: fewer subjects (" + std::to_string(subject_set.size()) + ") than folds (" +
              std::to_string(k) + ")");

  std::vector<std::string> subjects(subject_set.begin(), subject_set.end());
  Rng rng(seed);
  rng.shuffle(subjects);
  std::map<std::string, int> fold_of;
  for (size_t i = 0; i < subjects.size(); ++i)
    fold_of[subjects[i]] = static_cast<int>(i % static_cast<size_t>(k));

  std::vector<int> out(manifest.entries.size());
  for (size_t i = 0; i < manifest.entries.size(); ++i)
    out[i] = fold_of[manifest.entries[i].subject_id];
  return out;
}

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::oracle: return "oracle";
    case Strategy::mean: return "mean";
    case Strategy::svr: return "svr";
  }
  return "?";
}

Strategy strategy_from_string(const std::string& s) {
  if (s == "oracle") return Strategy::oracle;
  if (s == "mean") return Strategy::mean;
  if (s == "svr") return Strategy::svr;
  throw Error("unknown strategy '" + s + "' (expected oracle|mean|svr)");
}

std::vector<FoldStats> EvalReport::fold_stats() const {
  std::map<int, std::vector<double>> by_fold;
  for (const auto& e : per_image) by_fold[e.fold].push_back(e.dice);
  std::vector<FoldStats> out;
  for (const auto& [fold, values] : by_fold) {
    FoldStats s;
    s.fold = fold;
    s.count = static_cast<int>(values.size());
    for (double v : values) s.mean += v;
    s.mean /= values.size();
    for (double v : values) s.sd += (v - s.mean) * (v - s.mean);
    s.sd = values.size() > 1 ? std::sqrt(s.sd / (values.size() - 1)) : 0.0;
    out.push_back(s);
  }
  return out;
}

double EvalReport::mean_dice() const {
  if (per_image.empty()) return 0.0;
  double m = 0.0;
  for (const auto& e : per_image) m += e.dice;
  return m / per_image.size();
}

namespace {

json params_to_json(const FilterParams& p) {
  json j;
  j["filter"] = to_string(p.kind);
  const ParamGrid grid = default_grid(p.kind);
  for (const auto& axis : grid.axes) j[to_string(axis.id)] = p.get(axis.id);
  return j;
}

}  // namespace

std::string EvalReport::to_jsonl() const {
  std::ostringstream out;
  json config;
  config["record"] = "config";
  config["dataset"] = dataset;
  config["filter"] = to_string(filter);
  config["strategy"] = to_string(strategy);
  config["split"] = split;
  config["folds"] = folds;
  config["seed"] = seed;
  config["dark_vessels"] = dark_vessels;
  config["params_source"] = params_source;
  out << config.dump() << "\n";

  for (const auto& e : per_image) {
    json j;
    j["record"] = "image";
    j["image_id"] = e.image_id;
    j["subject"] = e.subject_id;
    j["fold"] = e.fold;
    j["dice"] = e.dice;
    j["params"] = params_to_json(e.params);
    out << j.dump() << "\n";
  }

  json summary;
  summary["record"] = "summary";
  summary["images"] = per_image.size();
  summary["mean_dice"] = mean_dice();
  json folds_json = json::array();
  for (const auto& s : fold_stats()) {
    folds_json.push_back(
        json{{"fold", s.fold}, {"count", s.count}, {"mean", s.mean}, {"sd", s.sd}});
  }
  summary["folds"] = folds_json;
  double fold_mean = 0.0, fold_sd = 0.0;
  const auto fs = fold_stats();
  if (!fs.empty()) {
    for (const auto& s : fs) fold_mean += s.mean;
    fold_mean /= fs.size();
    for (const auto& s : fs) fold_sd += (s.mean - fold_mean) * (s.mean - fold_mean);
    fold_sd = fs.size() > 1 ? std::sqrt(fold_sd / (fs.size() - 1)) : 0.0;
  }
  summary["fold_mean"] = fold_mean;
  summary["fold_sd"] = fold_sd;
  out << summary.dump() << "\n";
  return out.str();
}

void save_report(const EvalReport& report, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(path + ": cannot open for writing");
  const std::string body = report.to_jsonl();
  out.write(body.data(), static_cast<std::streamsize>(body.size()));
  if (!out) throw Error(path + ": write failed");
}

EvalReport run_experiment(const DatasetManifest& manifest, const EvalConfig& config) {
  const std::vector<ManifestEntry> entries = manifest.with_split(config.split);
  require(!entries.empty(), "run_experiment: no entries for split '" + config.split + "'");

  const ParamGrid grid = config.grid.axes.empty() ? default_grid(config.filter) : config.grid;
  require(grid.kind == config.filter, "run_experiment: grid does not match filter");

  if (config.strategy == Strategy::svr)
    require(config.ensemble != nullptr, "run_experiment: svr strategy requires a trained ensemble");
  if (config.strategy == Strategy::mean)
    require(config.mean_parameters.has_value(),
            "run_experiment: mean strategy requires mean parameters");

  DatasetManifest eval_subset;
  eval_subset.name = manifest.name;
  eval_subset.entries = entries;
  const std::vector<int> folds = make_folds(eval_subset, config.folds, config.seed);

  FilterParams snapped_mean;
  if (config.strategy == Strategy::mean) snapped_mean = snap_to_grid(*config.mean_parameters, grid);

  EvalReport report;
  report.dataset = manifest.name;
  report.filter = config.filter;
  report.strategy = config.strategy;
  report.split = config.split;
  report.folds = config.folds;
  report.seed = config.seed;
  report.dark_vessels = config.segment.dark_vessels;
  report.params_source = config.params_source;
  report.per_image.resize(entries.size());

  parallel_for(entries.size(), config.threads, [&](size_t i) {
    const ManifestEntry& entry = entries[i];
    const GrayImage img = load_image(entry.image_path);
    const BinaryMask gt = load_mask(entry.mask_path);
    require(img.width == gt.width && img.height == gt.height,
            entry.image_path + ": ground-truth dimensions differ from image");

    FilterParams params;
    switch (config.strategy) {
      case Strategy::oracle: {
        const OracleRecord rec = oracle_search(img, gt, config.filter, grid, config.segment,
                                               std::filesystem::path(entry.image_path)
                                                   .filename()
                                                   .string());
        params = rec.best_params;
        break;
      }
      case Strategy::mean:
        params = snapped_mean;
        break;
      case Strategy::svr: {
        const Descriptor140 phi = extract_descriptor(img);
        params = predict_params(*config.ensemble, phi);
        break;
      }
    }

    ImageEval ev;
    ev.image_id = std::filesystem::path(entry.image_path).filename().string();
    ev.subject_id = entry.subject_id;
    ev.fold = folds[i];
    ev.params = params;
    ev.dice = dice(segment(img, params, config.segment), gt);
    report.per_image[i] = std::move(ev);
  });

  return report;
}

}  // namespace vtn
