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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "support/phantom.hpp"
#include "support/tempdir.hpp"
#include "vesseltune/eval.hpp"
#include "vesseltune/image_io.hpp"

using namespace vtn;
using namespace vtn::testsupport;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliResult r;
  r.code = vtn::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

// Shared small cohort; built once.
const TempDir& cohort_dir() {
  static TempDir dir("cli-cohort");
  static bool built = false;
  if (!built) {
    CohortOptions opts;
    opts.images = 8;
    opts.size = 72;
    write_dca1_style_cohort(dir.path().string(), opts);
    built = true;
  }
  return dir;
}

std::string make_toy_manifest(const TempDir& dir, int count, const std::string& split) {
  const IngestResult ingest = ingest_dca1(cohort_dir().path().string());
  DatasetManifest m;
  m.name = "toy";
  for (int i = 0; i < count; ++i) {
    ManifestEntry e = ingest.manifest.entries[i];
    e.split = split;
    m.entries.push_back(e);
  }
  const std::string path = dir.file("manifest_" + split + std::to_string(count) + ".csv");
  save_manifest(m, path);
  return path;
}

}  // namespace

TEST_CASE("help lists every subcommand") {
  const CliResult r = run_cli({"--help"});
  CHECK(r.code == 0);
  for (const char* name : {"best-frame", "segment", "features", "tune-oracle", "train-svr",
                           "predict-params", "evaluate", "ingest-dca1"})
    CHECK(r.out.find(name) != std::string::npos);
}

TEST_CASE("unknown flags and invalid values are usage errors") {
  CHECK(run_cli({"segment", "--no-such-flag"}).code == 2);
  TempDir dir;
  save_pgm(GrayImage(16, 16, 0.5), dir.file("img.pgm"));
  const CliResult r = run_cli({"segment", "--image", dir.file("img.pgm"), "--filter", "sobel",
                               "--out", dir.file("m.pgm")});
  CHECK(r.code == 2);
  CHECK(r.err.find("sobel") != std::string::npos);
}

TEST_CASE("best-frame prints the selected index") {
  TempDir dir;
  const CineSequence cine = bolus_cine(10, 6, 64, 77);
  for (size_t t = 0; t < cine.frames.size(); ++t)
    save_pgm(cine.frames[t], dir.file(std::to_string(t) + ".pgm"));

  const CliResult r = run_cli({"best-frame", "--frames-dir", dir.path().string(), "--low-band",
                               "0:63", "--bins", "256", "--copy-to", dir.file("best.pgm")});
  CHECK(r.code == 0);
  CHECK(r.out == "6\n");
  CHECK(std::filesystem::exists(dir.file("best.pgm")));

  CHECK(run_cli({"best-frame", "--frames-dir", dir.file("missing")}).code == 1);
}

TEST_CASE("bin merging keeps the selection on 8-bit quantized frames") {
  TempDir dir;
  const CineSequence cine = bolus_cine(12, 4, 64, 31);
  for (size_t t = 0; t < cine.frames.size(); ++t)
    save_pgm(cine.frames[t], dir.file(std::to_string(t) + ".pgm"));  // 8-bit quantization

  const CliResult full = run_cli({"best-frame", "--frames-dir", dir.path().string(), "--low-band",
                                  "0:63", "--bins", "256"});
  const CliResult merged = run_cli({"best-frame", "--frames-dir", dir.path().string(),
                                    "--low-band", "0:31", "--bins", "128"});
  CHECK(full.code == 0);
  CHECK(full.out == merged.out);
}

TEST_CASE("segment writes a mask; explicit params default to the tuned averages") {
  TempDir dir;
  const auto& cohort = cohort_dir();
  const CliResult r = run_cli({"segment", "--image", cohort.file("1.pgm"), "--filter", "frangi",
                               "--out", dir.file("mask.pgm"), "--response-out",
                               dir.file("resp.pgm")});
  CHECK(r.code == 0);
  const BinaryMask mask = load_mask(dir.file("mask.pgm"));
  CHECK(mask.area() > 0);  // tuned-average defaults segment a phantom
  CHECK(std::filesystem::exists(dir.file("resp.pgm")));
}

TEST_CASE("features emits the layout header and 140 values") {
  TempDir dir;
  const CliResult r = run_cli({"features", "--image", cohort_dir().file("2.pgm"), "--out",
                               dir.file("f.csv")});
  CHECK(r.code == 0);
  std::ifstream in(dir.file("f.csv"));
  std::string header, values;
  std::getline(in, header);
  std::getline(in, values);
  CHECK(header.find("hist32-mink16x3-betti20x3/v1") != std::string::npos);
  CHECK(std::count(values.begin(), values.end(), ',') == 139);
}

TEST_CASE("tune-oracle, train-svr, predict-params and evaluate compose") {
  TempDir dir;
  const std::string manifest = make_toy_manifest(dir, 8, "train");

  // The full published grid is deliberately large; shrink the run by tuning
  // on two images only for the record-count check.
  const std::string manifest2 = make_toy_manifest(dir, 2, "train");
  CliResult r = run_cli({"tune-oracle", "--manifest", manifest2, "--filter", "meijering", "--out",
                         dir.file("rec2.csv"), "--split", "train"});
  CHECK(r.code == 0);
  CHECK(load_oracle_records(dir.file("rec2.csv")).size() == 2);

  r = run_cli({"tune-oracle", "--manifest", manifest, "--filter", "meijering", "--out",
               dir.file("records.csv"), "--mean-out", dir.file("mean.json")});
  REQUIRE(r.code == 0);

  r = run_cli({"train-svr", "--records", dir.file("records.csv"), "--manifest", manifest,
               "--filter", "meijering", "--out", dir.file("model.json"), "--seed", "3"});
  REQUIRE(r.code == 0);

  r = run_cli({"predict-params", "--model", dir.file("model.json"), "--image",
               cohort_dir().file("3.pgm")});
  CHECK(r.code == 0);
  CHECK(r.out.find("sigma") != std::string::npos);

  // segment via the model equals predict-params + explicit segmentation.
  r = run_cli({"segment", "--image", cohort_dir().file("3.pgm"), "--filter", "meijering",
               "--params-source", "svr-model", "--model", dir.file("model.json"), "--out",
               dir.file("svr_mask.pgm")});
  REQUIRE(r.code == 0);
  const SvrEnsemble ens = load_svr_ensemble(dir.file("model.json"));
  const GrayImage img = load_image(cohort_dir().file("3.pgm"));
  const FilterParams p = predict_params(ens, extract_descriptor(img));
  CHECK(load_mask(dir.file("svr_mask.pgm")) == segment(img, p));

  // evaluate with all three strategies; oracle summary >= mean summary.
  r = run_cli({"evaluate", "--manifest", manifest, "--filter", "meijering", "--strategy", "mean",
               "--records", dir.file("records.csv"), "--split", "train", "--folds", "2", "--out",
               dir.file("mean.jsonl")});
  REQUIRE(r.code == 0);
  r = run_cli({"evaluate", "--manifest", manifest, "--filter", "meijering", "--strategy", "svr",
               "--model", dir.file("model.json"), "--split", "train", "--folds", "2", "--out",
               dir.file("svr.jsonl")});
  REQUIRE(r.code == 0);
  r = run_cli({"evaluate", "--manifest", manifest, "--filter", "meijering", "--strategy",
               "oracle", "--split", "train", "--folds", "2", "--out", dir.file("oracle.jsonl")});
  REQUIRE(r.code == 0);

  auto mean_dice_of = [](const std::string& path) {
    std::ifstream in(path);
    std::string line, last;
    while (std::getline(in, line))
      if (!line.empty()) last = line;
    const auto j = nlohmann::json::parse(last);
    return j.at("mean_dice").get<double>();
  };
  CHECK(mean_dice_of(dir.file("oracle.jsonl")) >= mean_dice_of(dir.file("mean.jsonl")));

  // Missing strategy inputs are errors.
  CHECK(run_cli({"evaluate", "--manifest", manifest, "--filter", "meijering", "--strategy",
                 "mean", "--out", dir.file("x.jsonl")})
            .code == 1);
}

TEST_CASE("ingest-dca1 writes a manifest and reports pairing warnings") {
  TempDir dir;
  const CliResult r = run_cli({"ingest-dca1", "--root", cohort_dir().path().string(), "--out",
                               dir.file("manifest.csv")});
  CHECK(r.code == 0);
  const DatasetManifest m = load_manifest(dir.file("manifest.csv"), "dca1");
  CHECK(m.entries.size() == 8);
}
