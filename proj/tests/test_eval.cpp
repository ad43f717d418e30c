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

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "support/phantom.hpp"
#include "support/tempdir.hpp"
#include "vesseltune/eval.hpp"
#include "vesseltune/image_io.hpp"
#include "vesseltune/rng.hpp"

using namespace vtn;
using namespace vtn::testsupport;

TEST_CASE("dice identities and conventions") {
  BinaryMask a(8, 8, 0), b(8, 8, 0);
  for (int i = 0; i < 16; ++i) a.data[i] = 1;
  CHECK(dice(a, a) == 1.0);
  CHECK(dice(a, b) == 0.0);     // empty vs nonempty
  CHECK(dice(b, b) == 1.0);     // empty vs empty

  // Nested: |A| = 100, |B| = 50, B inside A -> 2*50/150.
  BinaryMask big(20, 20, 0), small(20, 20, 0);
  for (int i = 0; i < 100; ++i) big.data[i] = 1;
  for (int i = 0; i < 50; ++i) small.data[i] = 1;
  CHECK(dice(big, small) == doctest::Approx(2.0 / 3.0));

  BinaryMask other(5, 5, 0);
  CHECK_THROWS_AS(dice(a, other), Error);
}

TEST_CASE("dice is symmetric on random masks") {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    BinaryMask a(16, 16), b(16, 16);
    for (auto& v : a.data) v = rng.uniform() < 0.4;
    for (auto& v : b.data) v = rng.uniform() < 0.4;
    CHECK(dice(a, b) == dice(b, a));
    CHECK(dice(a, b) >= 0.0);
    CHECK(dice(a, b) <= 1.0);
  }
}

namespace {

DatasetManifest synthetic_manifest(int subjects, int images_per_subject = 1) {
  DatasetManifest m;
  m.name = "synthetic";
  for (int s = 0; s < subjects; ++s)
    for (int i = 0; i < images_per_subject; ++i) {
      ManifestEntry e;
      e.image_path = "img" + std::to_string(s) + "_" + std::to_string(i) + ".pgm";
      e.mask_path = e.image_path;
      e.subject_id = "subject" + std::to_string(s);
      e.split = "train";
      m.entries.push_back(e);
    }
  return m;
}

}  // namespace

TEST_CASE("make_folds partitions subjects") {
  const DatasetManifest five = synthetic_manifest(5);
  const std::vector<int> folds = make_folds(five, 5, 1);
  std::set<int> seen(folds.begin(), folds.end());
  CHECK(seen.size() == 5);  // one subject per fold

  // No subject in two folds, even with several images per subject.
  const DatasetManifest multi = synthetic_manifest(7, 3);
  const std::vector<int> f2 = make_folds(multi, 3, 9);
  for (size_t i = 0; i < multi.entries.size(); ++i)
    for (size_t j = 0; j < multi.entries.size(); ++j)
      if (multi.entries[i].subject_id == multi.entries[j].subject_id) CHECK(f2[i] == f2[j]);

  // 407 subjects into 5 folds: sizes differ by at most one subject.
  const DatasetManifest big = synthetic_manifest(407);
  const std::vector<int> f3 = make_folds(big, 5, 7);
  std::map<int, int> sizes;
  for (int f : f3) ++sizes[f];
  int lo = 1 << 30, hi = 0;
  for (const auto& [fold, n] : sizes) {
    lo = std::min(lo, n);
    hi = std::max(hi, n);
  }
  CHECK(hi - lo <= 1);

  CHECK(make_folds(big, 5, 7) == f3);  // deterministic per seed
  CHECK(make_folds(big, 5, 8) != f3);

  CHECK_THROWS_AS(make_folds(synthetic_manifest(3), 5, 1), Error);
}

TEST_CASE("ingest_dca1 pairs images with ground truth and splits 100/30") {
  TempDir dir;
  CohortOptions opts;
  opts.images = 130;
  opts.size = 48;  // small files; the split logic is what matters here
  write_dca1_style_cohort(dir.path().string(), opts);

  const IngestResult result = ingest_dca1(dir.path().string());
  CHECK(result.manifest.entries.size() == 130);
  int train = 0, test = 0;
  for (const auto& e : result.manifest.entries) {
    train += e.split == "train";
    test += e.split == "test";
    CHECK(!e.subject_id.empty());
  }
  CHECK(train == 100);
  CHECK(test == 30);
  CHECK(result.warnings.empty());
}

TEST_CASE("ingest_dca1 reports unpaired and unknown files") {
  TempDir dir;
  save_pgm(GrayImage(4, 4, 0.5), dir.file("7.pgm"));          // image without mask
  save_pgm(GrayImage(4, 4, 0.5), dir.file("9_gt.pgm"));       // mask without image
  save_pgm(GrayImage(4, 4, 0.5), dir.file("notes.pgm"));      // unrecognized name
  save_pgm(GrayImage(4, 4, 0.5), dir.file("3.pgm"));
  save_pgm(GrayImage(4, 4, 0.5), dir.file("3_gt.pgm"));

  const IngestResult result = ingest_dca1(dir.path().string());
  CHECK(result.manifest.entries.size() == 1);
  REQUIRE(result.warnings.size() == 3);

  TempDir empty;
  const IngestResult nothing = ingest_dca1(empty.path().string());
  CHECK(nothing.manifest.entries.empty());
  CHECK(!nothing.warnings.empty());  // empty manifest comes with a warning

  CHECK_THROWS_AS(ingest_dca1(dir.file("missing-subdir")), Error);
}

TEST_CASE("manifest CSV round-trip and validation") {
  TempDir dir;
  CohortOptions opts;
  opts.images = 4;
  opts.size = 32;
  write_dca1_style_cohort(dir.path().string(), opts);
  const DatasetManifest m = ingest_dca1(dir.path().string()).manifest;

  save_manifest(m, dir.file("manifest.csv"));
  const DatasetManifest back = load_manifest(dir.file("manifest.csv"), "dca1");
  REQUIRE(back.entries.size() == m.entries.size());
  for (size_t i = 0; i < m.entries.size(); ++i) {
    CHECK(back.entries[i].image_path == m.entries[i].image_path);
    CHECK(back.entries[i].subject_id == m.entries[i].subject_id);
    CHECK(back.entries[i].split == m.entries[i].split);
  }

  std::ofstream bad(dir.file("bad.csv"));
  bad << "image,mask,subject,split\n/nonexistent.pgm,/nonexistent.pgm,s,train\n";
  bad.close();
  CHECK_THROWS_AS(load_manifest(dir.file("bad.csv")), Error);
}

TEST_CASE("run_experiment: oracle dominates mean pointwise and reruns are byte-identical") {
  TempDir dir;
  CohortOptions opts;
  opts.images = 6;
  opts.size = 72;
  write_dca1_style_cohort(dir.path().string(), opts);
  DatasetManifest manifest = ingest_dca1(dir.path().string()).manifest;
  for (auto& e : manifest.entries) e.split = "train";

  // A deliberately small grid keeps the oracle affordable here.
  ParamGrid grid;
  grid.kind = FilterKind::frangi;
  grid.axes = {{AxisId::sigma, {1.5, 2.5}, true, false},
               {AxisId::threshold, {0.4, 0.6}, false, false},
               {AxisId::alpha, {0.65}, false, false},
               {AxisId::beta, {0.9}, false, false},
               {AxisId::max_hole, {470}, true, true},
               {AxisId::min_region, {75}, true, true}};

  EvalConfig oracle_cfg;
  oracle_cfg.filter = FilterKind::frangi;
  oracle_cfg.strategy = Strategy::oracle;
  oracle_cfg.split = "train";
  oracle_cfg.folds = 3;
  oracle_cfg.seed = 5;
  oracle_cfg.grid = grid;
  const EvalReport oracle_report = run_experiment(manifest, oracle_cfg);

  EvalConfig mean_cfg = oracle_cfg;
  mean_cfg.strategy = Strategy::mean;
  FilterParams mean;
  mean.kind = FilterKind::frangi;
  mean.sigma = 2.1;
  mean.threshold = 0.5;
  mean.alpha = 0.65;
  mean.beta = 0.9;
  mean.max_hole = 470;
  mean.min_region = 75;
  mean_cfg.mean_parameters = mean;
  const EvalReport mean_report = run_experiment(manifest, mean_cfg);

  REQUIRE(oracle_report.per_image.size() == mean_report.per_image.size());
  for (size_t i = 0; i < oracle_report.per_image.size(); ++i)
    CHECK(oracle_report.per_image[i].dice >= mean_report.per_image[i].dice);

  // Determinism: same config and seed, any thread count.
  EvalConfig threaded = mean_cfg;
  threaded.threads = 3;
  CHECK(run_experiment(manifest, threaded).to_jsonl() == mean_report.to_jsonl());
  const EvalReport again = run_experiment(manifest, mean_cfg);
  CHECK(again.to_jsonl() == mean_report.to_jsonl());
}

TEST_CASE("report aggregates are recomputable from per-image records") {
  TempDir dir;
  CohortOptions opts;
  opts.images = 5;
  opts.size = 64;
  write_dca1_style_cohort(dir.path().string(), opts);
  DatasetManifest manifest = ingest_dca1(dir.path().string()).manifest;
  for (auto& e : manifest.entries) e.split = "train";

  EvalConfig cfg;
  cfg.filter = FilterKind::meijering;
  cfg.strategy = Strategy::mean;
  cfg.split = "train";
  cfg.folds = 2;
  FilterParams mean;
  mean.kind = FilterKind::meijering;
  mean.sigma = 2.5;
  mean.threshold = 0.08;
  mean.disk_size = 1;
  mean.min_region = 100;
  cfg.mean_parameters = mean;

  const EvalReport report = run_experiment(manifest, cfg);
  const std::string jsonl = report.to_jsonl();

  // Recompute fold means from the serialized per-image lines.
  std::map<int, std::vector<double>> by_fold;
  nlohmann::json summary;
  std::istringstream in(jsonl);
  std::string line;
  while (std::getline(in, line)) {
    const auto j = nlohmann::json::parse(line);
    if (j.at("record") == "image") by_fold[j.at("fold")].push_back(j.at("dice"));
    if (j.at("record") == "summary") summary = j;
  }
  for (const auto& jf : summary.at("folds")) {
    const auto& values = by_fold.at(jf.at("fold").get<int>());
    double mean_v = 0.0;
    for (double v : values) mean_v += v;
    mean_v /= values.size();
    CHECK(jf.at("mean").get<double>() == doctest::Approx(mean_v).epsilon(1e-12));
  }
}
