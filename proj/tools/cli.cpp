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

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "vesseltune/cine.hpp"
#include "vesseltune/descriptor.hpp"
#include "vesseltune/eval.hpp"
#include "vesseltune/image_io.hpp"
#include "vesseltune/oracle.hpp"
#include "vesseltune/parallel.hpp"
#include "vesseltune/segment.hpp"
#include "vesseltune/svr.hpp"

namespace vtn::cli {
namespace {

using nlohmann::json;

/// Errors of the "wrong invocation" kind; mapped to exit code 2.
struct UsageError : Error {
  using Error::Error;
};

FilterKind parse_filter(const std::string& name) {
  try {
    return filter_from_string(name);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

struct GlobalOptions {
  uint64_t seed = 1;
  int threads = 1;
  std::string out_dir;
  bool bright_vessels = false;

  SegmentOptions segment_options() const {
    SegmentOptions opts;
    opts.dark_vessels = !bright_vessels;
    return opts;
  }
  std::string resolve(const std::string& path) const {
    if (out_dir.empty() || path.empty() || std::filesystem::path(path).is_absolute()) return path;
    return (std::filesystem::path(out_dir) / path).string();
  }
};

/// Globally averaged tuning values, used as the explicit-parameter defaults.
FilterParams default_params(FilterKind kind) {
  FilterParams p;
  p.kind = kind;
  switch (kind) {
    case FilterKind::meijering:
      p.sigma = 3.76;
      p.threshold = 0.080;
      p.disk_size = 1;
      p.min_region = 2070;
      break;
    case FilterKind::sato:
      p.sigma = 4.14;
      p.threshold = 0.0195;
      p.disk_size = 2.3;
      p.min_region = 2128;
      break;
    case FilterKind::frangi:
      p.sigma = 2.5;
      p.threshold = 0.60;
      p.alpha = 0.65;
      p.beta = 0.90;
      p.max_hole = 470;
      p.min_region = 75;
      break;
  }
  return p;
}

json params_to_json(const FilterParams& p) {
  json j;
  j["filter"] = to_string(p.kind);
  for (const auto& axis : default_grid(p.kind).axes) j[to_string(axis.id)] = p.get(axis.id);
  return j;
}

FilterParams params_from_json(const json& j) {
  FilterParams p;
  p.kind = filter_from_string(j.at("filter").get<std::string>());
  for (const auto& axis : default_grid(p.kind).axes)
    p.set(axis.id, j.at(to_string(axis.id)).get<double>());
  return p;
}

void write_params_file(const FilterParams& p, const std::string& path, const json& config) {
  json doc;
  doc["format"] = "vesseltune-params";
  doc["params"] = params_to_json(p);
  doc["config"] = config;
  std::ofstream out(path);
  if (!out) throw Error(path + ": cannot open for writing");
  out << doc.dump(2) << "\n";
}

FilterParams read_params_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(path + ": cannot open file");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw Error(path + ": invalid JSON (" + e.what() + ")");
  }
  if (doc.value("format", "") != "vesseltune-params")
    throw Error(path + ": not a vesseltune params file");
  return params_from_json(doc.at("params"));
}

BinRange parse_band(const std::string& text, int bins) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw Error("--low-band expects first:last, got '" + text + "'");
  BinRange band;
  band.first = std::stoi(text.substr(0, colon));
  band.last = std::stoi(text.substr(colon + 1));
  require(band.first >= 0 && band.last < bins && band.first <= band.last,
          "--low-band " + text + " out of range for " + std::to_string(bins) + " bins");
  return band;
}

std::string image_id_of(const std::string& path) {
  return std::filesystem::path(path).filename().string();
}

// Aligns oracle records with manifest entries by image id; returns indices
// into `manifest.entries` for each record.
std::vector<size_t> align_records(const DatasetManifest& manifest,
                                  const std::vector<OracleRecord>& records) {
  std::vector<size_t> indices;
  indices.reserve(records.size());
  for (const auto& rec : records) {
    bool found = false;
    for (size_t i = 0; i < manifest.entries.size(); ++i) {
      if (image_id_of(manifest.entries[i].image_path) == rec.image_id) {
        indices.push_back(i);
        found = true;
        break;
      }
    }
    require(found, "record image '" + rec.image_id + "' not present in the manifest");
  }
  return indices;
}

json invocation_config(const GlobalOptions& g, const json& extra) {
  json j = extra;
  j["seed"] = g.seed;
  j["dark_vessels"] = !g.bright_vessels;
  return j;
}

int run_impl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"vesseltune: vesselness segmentation of angiograms with learned per-image tuning"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from an INI/TOML file (flags take precedence)");

  GlobalOptions global;
  if (const char* env = std::getenv("VESSELTUNE_OUT_DIR")) global.out_dir = env;
  app.add_option("--seed", global.seed, "Seed for all randomized steps")->capture_default_str();
  app.add_option("--threads", global.threads, "Worker threads (results are thread-count invariant)")
      ->capture_default_str();
  app.add_option("--out-dir", global.out_dir,
                 "Directory prefix for relative output paths (env VESSELTUNE_OUT_DIR)");
  app.add_flag("--bright-vessels", global.bright_vessels,
               "Treat vessels as bright-on-dark instead of the default dark-on-bright");

  // ---- best-frame ----
  auto* cmd_best = app.add_subcommand("best-frame",
                                      "Select the frame with the tallest low-intensity peak");
  std::string frames_dir, band_text = "0:63", copy_to;
  int bins = 256;
  cmd_best->add_option("--frames-dir", frames_dir, "Directory of numbered frame images")
      ->required();
  cmd_best->add_option("--low-band", band_text, "Inclusive bin range first:last")
      ->capture_default_str();
  cmd_best->add_option("--bins", bins, "Histogram bins")->capture_default_str();
  cmd_best->add_option("--copy-to", copy_to, "Copy the selected frame to this path");

  // ---- segment ----
  auto* cmd_segment = app.add_subcommand("segment", "Segment one image into a binary vessel mask");
  std::string seg_image, seg_filter = "frangi", seg_out, seg_response_out, seg_source = "explicit";
  std::string seg_params_file, seg_model_file;
  std::optional<double> opt_sigma, opt_threshold, opt_alpha, opt_beta, opt_disk, opt_hole,
      opt_region;
  cmd_segment->add_option("--image", seg_image, "Input image (PGM or PNG)")->required();
  cmd_segment->add_option("--filter", seg_filter, "meijering|frangi|sato")
      ->capture_default_str();
  cmd_segment->add_option("--out", seg_out, "Output mask (8-bit PGM, 0/255)")->required();
  cmd_segment->add_option("--response-out", seg_response_out,
                          "Optional vesselness heatmap output (8-bit PGM)");
  cmd_segment
      ->add_option("--params-source", seg_source,
                   "explicit|mean-file|svr-model (explicit uses the axis flags)")
      ->capture_default_str();
  cmd_segment->add_option("--params-file", seg_params_file, "Params JSON for --params-source mean-file");
  cmd_segment->add_option("--model", seg_model_file, "Model JSON for --params-source svr-model");
  cmd_segment->add_option("--sigma", opt_sigma, "Gaussian scale in pixels");
  cmd_segment->add_option("--threshold", opt_threshold, "Binarization threshold in [0,1]");
  cmd_segment->add_option("--alpha", opt_alpha, "Frangi alpha");
  cmd_segment->add_option("--beta", opt_beta, "Frangi beta");
  cmd_segment->add_option("--disk-size", opt_disk, "Closing disk radius (meijering/sato)");
  cmd_segment->add_option("--max-hole", opt_hole, "Maximum hole area to fill (frangi)");
  cmd_segment->add_option("--min-region", opt_region, "Minimum component area to keep");

  // ---- features ----
  auto* cmd_features = app.add_subcommand("features", "Emit the 140-D image descriptor as CSV");
  std::string feat_image, feat_out;
  cmd_features->add_option("--image", feat_image, "Input image")->required();
  cmd_features->add_option("--out", feat_out, "Output CSV (layout header + 140 values)")
      ->required();

  // ---- tune-oracle ----
  auto* cmd_tune = app.add_subcommand("tune-oracle",
                                      "Per-image exhaustive grid search against ground truth");
  std::string tune_manifest, tune_filter = "frangi", tune_out, tune_split = "train", tune_mean_out;
  cmd_tune->add_option("--manifest", tune_manifest, "Dataset manifest CSV")->required();
  cmd_tune->add_option("--filter", tune_filter, "meijering|frangi|sato")->capture_default_str();
  cmd_tune->add_option("--out", tune_out, "Oracle records CSV")->required();
  cmd_tune->add_option("--split", tune_split, "Manifest split to tune on (all|train|test|...)")
      ->capture_default_str();
  cmd_tune->add_option("--mean-out", tune_mean_out,
                       "Also write the unsnapped per-axis mean of the optima (params JSON)");

  // ---- train-svr ----
  auto* cmd_train = app.add_subcommand("train-svr",
                                       "Train per-axis SVR regressors from oracle records");
  std::string train_records, train_manifest, train_filter = "frangi", train_out;
  cmd_train->add_option("--records", train_records, "Oracle records CSV")->required();
  cmd_train->add_option("--manifest", train_manifest, "Manifest CSV with the record images")
      ->required();
  cmd_train->add_option("--filter", train_filter, "meijering|frangi|sato")->capture_default_str();
  cmd_train->add_option("--out", train_out, "Output model JSON")->required();

  // ---- predict-params ----
  auto* cmd_predict = app.add_subcommand("predict-params",
                                         "Predict per-image parameters with a trained model");
  std::string pred_model, pred_image, pred_out;
  cmd_predict->add_option("--model", pred_model, "Model JSON")->required();
  cmd_predict->add_option("--image", pred_image, "Input image")->required();
  cmd_predict->add_option("--out", pred_out, "Optional params JSON output");

  // ---- evaluate ----
  auto* cmd_eval = app.add_subcommand("evaluate", "Segment a dataset split and report Dice");
  std::string eval_manifest, eval_filter = "frangi", eval_strategy = "mean", eval_split = "all";
  std::string eval_model, eval_params_file, eval_records, eval_out;
  int eval_folds = 5;
  cmd_eval->add_option("--manifest", eval_manifest, "Dataset manifest CSV")->required();
  cmd_eval->add_option("--filter", eval_filter, "meijering|frangi|sato")->capture_default_str();
  cmd_eval->add_option("--strategy", eval_strategy, "oracle|mean|svr")->capture_default_str();
  cmd_eval->add_option("--split", eval_split, "Manifest split to evaluate")->capture_default_str();
  cmd_eval->add_option("--model", eval_model, "Model JSON (strategy svr)");
  cmd_eval->add_option("--params-file", eval_params_file, "Params JSON (strategy mean)");
  cmd_eval->add_option("--records", eval_records,
                       "Oracle records CSV; their mean feeds strategy mean");
  cmd_eval->add_option("--out", eval_out, "Report output (JSON lines)")->required();
  cmd_eval->add_option("--folds", eval_folds, "Subject-level folds for the summary")
      ->capture_default_str();

  // ---- ingest-dca1 ----
  auto* cmd_ingest = app.add_subcommand("ingest-dca1",
                                        "Build a manifest from a DCA1-style directory");
  std::string ingest_root, ingest_out;
  cmd_ingest->add_option("--root", ingest_root, "Directory with <id>.pgm / <id>_gt.pgm pairs")
      ->required();
  cmd_ingest->add_option("--out", ingest_out, "Manifest CSV output")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  if (cmd_best->parsed()) {
    const CineSequence cine = load_cine_dir(frames_dir);
    const BinRange band = parse_band(band_text, bins);
    const int index = best_frame(cine, band, bins);
    out << index << "\n";
    if (!copy_to.empty()) save_pgm(cine.frames[index], global.resolve(copy_to));
    return 0;
  }

  if (cmd_segment->parsed()) {
    const FilterKind kind = parse_filter(seg_filter);
    const GrayImage img = load_image(seg_image);

    FilterParams params;
    if (seg_source == "explicit") {
      params = default_params(kind);
      if (opt_sigma) params.sigma = *opt_sigma;
      if (opt_threshold) params.threshold = *opt_threshold;
      if (opt_alpha) params.alpha = *opt_alpha;
      if (opt_beta) params.beta = *opt_beta;
      if (opt_disk) params.disk_size = *opt_disk;
      if (opt_hole) params.max_hole = *opt_hole;
      if (opt_region) params.min_region = *opt_region;
    } else if (seg_source == "mean-file") {
      require(!seg_params_file.empty(), "--params-source mean-file requires --params-file");
      params = snap_to_grid(read_params_file(seg_params_file), default_grid(kind));
      require(params.kind == kind, "params file filter does not match --filter");
    } else if (seg_source == "svr-model") {
      require(!seg_model_file.empty(), "--params-source svr-model requires --model");
      const SvrEnsemble ensemble = load_svr_ensemble(seg_model_file);
      require(ensemble.filter == kind, "model filter does not match --filter");
      params = predict_params(ensemble, extract_descriptor(img));
    } else {
      throw UsageError("--params-source: expected explicit|mean-file|svr-model");
    }

    const SegmentResult res = segment_full(img, params, global.segment_options());
    save_mask_pgm(res.mask, global.resolve(seg_out));
    if (!seg_response_out.empty()) {
      GrayImage heat(res.response.width, res.response.height);
      heat.data = res.response.data;
      save_pgm(heat, global.resolve(seg_response_out));
    }
    out << "wrote " << global.resolve(seg_out) << " (" << res.mask.area() << " px foreground)\n";
    return 0;
  }

  if (cmd_features->parsed()) {
    const Descriptor140 d = extract_descriptor(load_image(feat_image));
    std::ofstream f(global.resolve(feat_out));
    if (!f) throw Error(feat_out + ": cannot open for writing");
    f << "# layout " << Descriptor140::layout_tag() << "\n";
    f.precision(17);
    for (int i = 0; i < Descriptor140::kSize; ++i)
      f << d.values[i] << (i + 1 == Descriptor140::kSize ? '\n' : ',');
    out << "wrote " << global.resolve(feat_out) << "\n";
    return 0;
  }

  if (cmd_tune->parsed()) {
    const FilterKind kind = parse_filter(tune_filter);
    const ParamGrid grid = default_grid(kind);
    const DatasetManifest manifest = load_manifest(tune_manifest);
    const auto entries = manifest.with_split(tune_split);
    require(!entries.empty(), "no manifest entries for split '" + tune_split + "'");

    std::vector<OracleRecord> records(entries.size());
    parallel_for(entries.size(), global.threads, [&](size_t i) {
      const GrayImage img = load_image(entries[i].image_path);
      const BinaryMask gt = load_mask(entries[i].mask_path);
      records[i] = oracle_search(img, gt, kind, grid, global.segment_options(),
                                 image_id_of(entries[i].image_path));
    });

    save_oracle_records(records, grid, global.resolve(tune_out));
    out << "wrote " << records.size() << " oracle records to " << global.resolve(tune_out) << "\n";
    if (!tune_mean_out.empty()) {
      const FilterParams mean = mean_params(records, kind);
      write_params_file(mean, global.resolve(tune_mean_out),
                        invocation_config(global, {{"command", "tune-oracle"},
                                                   {"filter", tune_filter},
                                                   {"split", tune_split}}));
      out << "wrote mean parameters to " << global.resolve(tune_mean_out) << "\n";
    }
    return 0;
  }

  if (cmd_train->parsed()) {
    const FilterKind kind = parse_filter(train_filter);
    const DatasetManifest manifest = load_manifest(train_manifest);
    std::vector<OracleRecord> records = load_oracle_records(train_records);
    for (const auto& rec : records)
      require(rec.filter == kind, "records filter does not match --filter");
    const std::vector<size_t> indices = align_records(manifest, records);

    std::vector<Descriptor140> descriptors(records.size());
    parallel_for(records.size(), global.threads, [&](size_t i) {
      descriptors[i] = extract_descriptor(load_image(manifest.entries[indices[i]].image_path));
    });

    EnsembleTrainConfig cfg;
    cfg.seed = global.seed;
    const SvrEnsemble ensemble = train_svr_ensemble(descriptors, records, kind,
                                                    default_grid(kind), cfg);
    save_svr_ensemble(ensemble, global.resolve(train_out));
    out << "trained " << ensemble.models.size() << " regressors -> " << global.resolve(train_out)
        << "\n";
    return 0;
  }

  if (cmd_predict->parsed()) {
    const SvrEnsemble ensemble = load_svr_ensemble(pred_model);
    const FilterParams params = predict_params(ensemble, extract_descriptor(load_image(pred_image)));
    const json j = params_to_json(params);
    out << j.dump() << "\n";
    if (!pred_out.empty())
      write_params_file(params, global.resolve(pred_out),
                        invocation_config(global, {{"command", "predict-params"},
                                                   {"model", pred_model},
                                                   {"image", pred_image}}));
    return 0;
  }

  if (cmd_eval->parsed()) {
    EvalConfig config;
    config.filter = parse_filter(eval_filter);
    config.strategy = strategy_from_string(eval_strategy);
    config.split = eval_split;
    config.folds = eval_folds;
    config.seed = global.seed;
    config.threads = global.threads;
    config.segment = global.segment_options();

    const DatasetManifest manifest = load_manifest(eval_manifest);
    SvrEnsemble ensemble;
    if (config.strategy == Strategy::svr) {
      require(!eval_model.empty(), "--strategy svr requires --model");
      ensemble = load_svr_ensemble(eval_model);
      require(ensemble.filter == config.filter, "model filter does not match --filter");
      config.ensemble = &ensemble;
      config.params_source = "svr-model:" + image_id_of(eval_model);
    } else if (config.strategy == Strategy::mean) {
      if (!eval_params_file.empty()) {
        config.mean_parameters = read_params_file(eval_params_file);
        config.params_source = "mean-file:" + image_id_of(eval_params_file);
      } else if (!eval_records.empty()) {
        config.mean_parameters = mean_params(load_oracle_records(eval_records), config.filter);
        config.params_source = "mean-of-records:" + image_id_of(eval_records);
      } else {
        throw Error("--strategy mean requires --params-file or --records");
      }
      require(config.mean_parameters->kind == config.filter,
              "mean parameters filter does not match --filter");
    } else {
      config.params_source = "oracle-grid-search";
    }

    const EvalReport report = run_experiment(manifest, config);
    save_report(report, global.resolve(eval_out));
    out << "evaluated " << report.per_image.size() << " images: mean dice " << report.mean_dice()
        << " -> " << global.resolve(eval_out) << "\n";
    return 0;
  }

  if (cmd_ingest->parsed()) {
    const IngestResult result = ingest_dca1(ingest_root);
    for (const auto& w : result.warnings) err << "warning: " << w << "\n";
    save_manifest(result.manifest, global.resolve(ingest_out));
    int train = 0, test = 0;
    for (const auto& e : result.manifest.entries) {
      train += e.split == "train";
      test += e.split == "test";
    }
    out << "wrote " << result.manifest.entries.size() << " entries (" << train << " train, "
        << test << " test) to " << global.resolve(ingest_out) << "\n";
    return 0;
  }

  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run_impl(args, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace vtn::cli
