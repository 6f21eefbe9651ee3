#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "tvr/image.hpp"
#include "tvr/operators.hpp"
#include "tvr/solver.hpp"

namespace tvr {

/// One experiment cell: an image source, a seeded measurement operator, a
/// noise model and the decoders to run. Every random quantity carries an
/// explicit seed; parsing rejects configs that omit one.
struct ExperimentConfig {
  json_t image;
  json_t operator_spec;
  json_t noise;  // {"kind":"none"} when absent
  SolverConfig solver;
  std::vector<std::string> decoders;  // subset of {"tv", "haar_l1"}
  std::string output_prefix = "run";

  static ExperimentConfig from_json(const json_t& j);
};

struct MetricsRow {
  std::string decoder;
  double rel_l2_error = 0;
  double grad_l2_error = 0;  // ||grad X - grad Xhat||_2
  double tv_error = 0;       // ||X - Xhat||_TV
  double residual = 0;
  double eps = 0;
  int iterations = 0;
  double wall_time_sec = 0;
  bool converged = false;

  /// Frozen CSV schema v1. Wall time lives in the run log, not the CSV, so
  /// identical configs produce identical CSV bytes.
  static std::string csv_header();
  std::string csv_row() const;
  json_t to_json() const;
};

struct ExperimentOutput {
  std::vector<MetricsRow> rows;
  std::filesystem::path csv_path;
  std::filesystem::path run_log_path;
  std::vector<std::filesystem::path> image_paths;
};

Image build_image(const json_t& spec);
OpPtr build_operator(const json_t& spec, Index n);

/// Runs every decoder of the config, writes one 16-bit PGM per decoder, a
/// metrics CSV in decoder order and a run log holding the full operator
/// descriptor, the noise realization and timings. Solver failures are
/// recorded in the row; the run continues.
ExperimentOutput run_experiment(const ExperimentConfig& config,
                                const std::filesystem::path& out_root);

}  // namespace tvr
