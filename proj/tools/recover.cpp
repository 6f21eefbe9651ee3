// Command line front end: experiment runner, property suites, phantom
// rasterizer and RIP probing.
//
//   recover run <config.json>
//   recover suite <name> [--n N --seed S]     (name "all" runs every suite)
//   recover phantom --n N --out file.pgm
//   recover rip --kind K --m M --s S [--d D | --n N] [--seed S] [--trials T]
//
// Output files land under --out-root, or $RECOVER_OUT when set, else ".".
// Exit code is 0 iff every asserted suite passes.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tvr/experiment.hpp"
#include "tvr/pgm.hpp"
#include "tvr/phantom.hpp"
#include "tvr/rip.hpp"
#include "tvr/suites.hpp"

namespace {

std::filesystem::path default_out_root() {
  if (const char* env = std::getenv("RECOVER_OUT")) return env;
  return ".";
}

int cmd_run(const std::string& config_path, const std::filesystem::path& out_root) {
  std::ifstream f(config_path);
  if (!f) {
    std::cerr << "cannot open config: " << config_path << "\n";
    return 2;
  }
  const auto config = tvr::ExperimentConfig::from_json(nlohmann::json::parse(f));
  const auto out = tvr::run_experiment(config, out_root);
  std::cout << tvr::MetricsRow::csv_header() << "\n";
  for (const auto& row : out.rows) std::cout << row.csv_row() << "\n";
  std::cerr << "wrote " << out.csv_path.string() << " and " << out.image_paths.size()
            << " image(s)\n";
  return 0;
}

int cmd_suite(const std::string& name, tvr::Index n, std::uint64_t seed) {
  tvr::SuiteParams params;
  params.n = n;
  params.seed = seed;
  bool all_pass = true;
  nlohmann::json reports = nlohmann::json::array();
  const auto names =
      name == "all" ? tvr::property_suite_names() : std::vector<std::string>{name};
  for (const auto& s : names) {
    const auto rep = tvr::run_property_suite(s, params);
    all_pass = all_pass && rep.at("pass").get<bool>();
    reports.push_back(rep);
  }
  std::cout << (reports.size() == 1 ? reports[0].dump(2) : reports.dump(2)) << "\n";
  return all_pass ? 0 : 1;
}

int cmd_phantom(tvr::Index n, const std::string& out_path) {
  tvr::write_pgm16(out_path, tvr::phantom(n));
  std::cerr << "wrote " << out_path << "\n";
  return 0;
}

int cmd_rip(const std::string& kind, tvr::Index m, int s, tvr::Index d, tvr::Index n,
            std::uint64_t seed, std::int64_t trials) {
  tvr::OpPtr op;
  if (kind == "gaussian") {
    op = tvr::gaussian_op(m, d, 1, seed);
  } else if (kind == "fourier_signed" || kind == "fourier_plain") {
    op = tvr::fourier_signed_op(m, n, seed, kind == "fourier_signed");
  } else if (kind == "identity") {
    op = tvr::dense_op(tvr::CMat::Identity(d, d), tvr::Shape{d, 1});
  } else {
    std::cerr << "unknown kind: " << kind << "\n";
    return 2;
  }
  tvr::RipEstimate est;
  try {
    est = tvr::estimate_rip_exhaustive(*op, s);
  } catch (const tvr::RipBudgetError&) {
    est = tvr::estimate_rip_sampled(*op, s, trials, seed);
  }
  nlohmann::json out = est.to_json();
  out["operator"] = op->descriptor();
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compressed-sensing image recovery toolkit"};
  app.require_subcommand(1);

  std::string out_root = default_out_root().string();
  app.add_option("--out-root", out_root, "output directory (default $RECOVER_OUT or .)");

  auto* run = app.add_subcommand("run", "run an experiment config");
  std::string config_path;
  run->add_option("config", config_path, "experiment config JSON")->required();

  auto* suite = app.add_subcommand("suite", "run a property suite");
  std::string suite_name;
  tvr::Index suite_n = 0;
  std::uint64_t suite_seed = 1;
  suite->add_option("name", suite_name, "suite name or 'all'")->required();
  suite->add_option("--n", suite_n, "size parameter (suite default if omitted)");
  suite->add_option("--seed", suite_seed, "random seed");

  auto* ph = app.add_subcommand("phantom", "rasterize the head phantom");
  tvr::Index ph_n = 256;
  std::string ph_out = "phantom.pgm";
  ph->add_option("--n", ph_n, "side length");
  ph->add_option("--out", ph_out, "output PGM path")->required();

  auto* rip = app.add_subcommand("rip", "estimate a restricted isometry constant");
  std::string rip_kind = "gaussian";
  tvr::Index rip_m = 40, rip_d = 64, rip_n = 16;
  int rip_s = 2;
  std::uint64_t rip_seed = 1;
  std::int64_t rip_trials = 500;
  rip->add_option("--kind", rip_kind, "gaussian | fourier_signed | fourier_plain | identity");
  rip->add_option("--m", rip_m, "measurement count")->required();
  rip->add_option("--s", rip_s, "sparsity order")->required();
  rip->add_option("--d", rip_d, "ambient dimension (gaussian/identity)");
  rip->add_option("--n", rip_n, "image side (fourier kinds)");
  rip->add_option("--seed", rip_seed, "seed");
  rip->add_option("--trials", rip_trials, "probes for the sampled fallback");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(config_path, out_root);
    if (suite->parsed()) return cmd_suite(suite_name, suite_n, suite_seed);
    if (ph->parsed()) return cmd_phantom(ph_n, ph_out);
    if (rip->parsed()) return cmd_rip(rip_kind, rip_m, rip_s, rip_d, rip_n, rip_seed, rip_trials);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
