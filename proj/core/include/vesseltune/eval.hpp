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

#include <optional>
#include <string>
#include <vector>

#include "vesseltune/oracle.hpp"
#include "vesseltune/params.hpp"
#include "vesseltune/svr.hpp"
#include "vesseltune/types.hpp"

namespace vtn {

/// Dice similarity coefficient 2|A&B| / (|A|+|B|).
/// Empty/empty -> 1; empty/nonempty -> 0.
double dice(const BinaryMask& pred, const BinaryMask& gt);

struct ManifestEntry {
  std::string image_path;
  std::string mask_path;
  std::string subject_id;
  std::string split;  // "train" / "test" / other tags
};

struct DatasetManifest {
  std::string name;
  std::vector<ManifestEntry> entries;

  std::vector<ManifestEntry> with_split(const std::string& split) const;
};

/// CSV with header "image,mask,subject,split".
void save_manifest(const DatasetManifest& manifest, const std::string& path);
DatasetManifest load_manifest(const std::string& path, const std::string& name = "dataset");

struct IngestResult {
  DatasetManifest manifest;
  std::vector<std::string> warnings;  // unpaired or skipped files, by name
};

/// Pairs <id>.pgm with <id>_gt.pgm under the root directory. Numeric ids
/// 1-100 are tagged "train" and 101-130 "test" per the published benchmark
/// division; other ids get "extra". Each image is its own subject.
IngestResult ingest_dca1(const std::string& root);

/// Partitions subjects (not images) into k folds, balanced by subject count,
/// deterministically per seed. Returns the fold id of every manifest entry.
std::vector<int> make_folds(const DatasetManifest& manifest, int k, uint64_t seed);

enum class Strategy { oracle, mean, svr };

std::string to_string(Strategy s);
Strategy strategy_from_string(const std::string& s);

struct EvalConfig {
  FilterKind filter = FilterKind::frangi;
  Strategy strategy = Strategy::mean;
  std::string split = "all";  // evaluate entries with this split tag ("all" = every entry)
  int folds = 5;
  uint64_t seed = 1;
  int threads = 1;  // not part of the report; any value yields identical bytes
  SegmentOptions segment;
  ParamGrid grid;  // defaults to default_grid(filter) when axes are empty

  // Strategy inputs.
  std::optional<FilterParams> mean_parameters;  // snapped to the grid before use
  const SvrEnsemble* ensemble = nullptr;        // required for Strategy::svr
  std::string params_source;                    // free-form provenance note for the report
};

struct ImageEval {
  std::string image_id;
  std::string subject_id;
  int fold = 0;
  double dice = 0.0;
  FilterParams params;
};

struct FoldStats {
  int fold = 0;
  int count = 0;
  double mean = 0.0;
  double sd = 0.0;
};

struct EvalReport {
  std::string dataset;
  FilterKind filter = FilterKind::frangi;
  Strategy strategy = Strategy::mean;
  std::string split;
  int folds = 0;
  uint64_t seed = 0;
  bool dark_vessels = true;
  std::string params_source;
  std::vector<ImageEval> per_image;

  std::vector<FoldStats> fold_stats() const;
  double mean_dice() const;  // over all evaluated images

  /// JSON-lines: one config record, one record per image, one summary record.
  /// Byte-identical across runs with the same config and seed.
  std::string to_jsonl() const;
};

void save_report(const EvalReport& report, const std::string& path);

/// Segments every evaluation image under the strategy and aggregates Dice
/// per fold. Ground truth is read for every image (oracle needs it for the
/// search; the others only for scoring).
EvalReport run_experiment(const DatasetManifest& manifest, const EvalConfig& config);

}  // namespace vtn
