#include "tvr/experiment.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>

#include <nlohmann/json.hpp>

#include "tvr/gradient.hpp"
#include "tvr/pgm.hpp"
#include "tvr/phantom.hpp"
#include "tvr/synthetic.hpp"

namespace tvr {

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

SolverConfig parse_solver(const json_t& j) {
  SolverConfig c;
  if (j.contains("max_iters")) c.max_iters = j.at("max_iters").get<int>();
  if (j.contains("rel_tol")) c.rel_tol = j.at("rel_tol").get<double>();
  if (j.contains("feas_slack")) c.feas_slack = j.at("feas_slack").get<double>();
  if (j.contains("step_scale")) c.step_scale = j.at("step_scale").get<double>();
  if (j.contains("tv_mode")) {
    const std::string m = j.at("tv_mode").get<std::string>();
    if (m == "anisotropic")
      c.tv_mode = TvMode::anisotropic;
    else if (m == "isotropic")
      c.tv_mode = TvMode::isotropic;
    else
      throw std::invalid_argument("solver.tv_mode must be anisotropic or isotropic");
  }
  if (j.contains("real_valued")) c.real_valued = j.at("real_valued").get<bool>();
  c.validate();
  return c;
}

void require_seed(const json_t& spec, const char* what) {
  if (!spec.contains("seed"))
    throw std::invalid_argument(std::string(what) + ": explicit seed required");
}

}  // namespace

ExperimentConfig ExperimentConfig::from_json(const json_t& j) {
  ExperimentConfig c;
  c.image = j.at("image");
  c.operator_spec = j.at("operator");
  c.noise = j.contains("noise") ? j.at("noise") : json_t{{"kind", "none"}};
  c.solver = j.contains("solver") ? parse_solver(j.at("solver")) : SolverConfig{};
  c.decoders = j.at("decoders").get<std::vector<std::string>>();
  for (const auto& d : c.decoders)
    if (d != "tv" && d != "haar_l1")
      throw std::invalid_argument("decoders must be a subset of {tv, haar_l1}");
  if (j.contains("output_prefix")) c.output_prefix = j.at("output_prefix").get<std::string>();
  return c;
}

Image build_image(const json_t& spec) {
  const std::string source = spec.at("source").get<std::string>();
  if (source == "phantom") return phantom(spec.at("n").get<Index>());
  if (source == "file") return read_pgm16(spec.at("path").get<std::string>());
  if (source == "synthetic_gradient_sparse") {
    require_seed(spec, "image");
    return synthetic_gradient_sparse(spec.at("n").get<Index>(), spec.at("s").get<int>(),
                                     spec.at("seed").get<std::uint64_t>())
        .image;
  }
  throw std::invalid_argument("image.source unknown: " + source);
}

OpPtr build_operator(const json_t& spec, Index n) {
  const std::string kind = spec.at("kind").get<std::string>();
  if (kind == "gaussian") {
    require_seed(spec, "operator");
    return gaussian_op(spec.at("m").get<Index>(), n, n, spec.at("seed").get<std::uint64_t>());
  }
  if (kind == "fourier_signed" || kind == "fourier_plain") {
    require_seed(spec, "operator");
    Index m;
    if (spec.contains("m")) {
      m = spec.at("m").get<Index>();
    } else {
      const double f = spec.at("fraction").get<double>();
      if (!(f > 0.0 && f <= 1.0))
        throw std::invalid_argument("operator.fraction must lie in (0, 1]");
      m = static_cast<Index>(std::floor(f * static_cast<double>(n * n)));
    }
    return fourier_signed_op(m, n, spec.at("seed").get<std::uint64_t>(),
                             kind == "fourier_signed");
  }
  if (kind == "composite_tv") {
    const Index m1 = spec.at("m1").get<Index>();
    const Index m2 = spec.at("m2").get<Index>();
    for (const char* key : {"seed_a", "seed_a_prime", "seed_b"})
      if (!spec.contains(key))
        throw std::invalid_argument("operator: composite_tv needs seed_a/seed_a_prime/seed_b");
    return composite_tv_op(
        gaussian_op(m1, n - 1, n, spec.at("seed_a").get<std::uint64_t>()),
        gaussian_op(m1, n - 1, n, spec.at("seed_a_prime").get<std::uint64_t>()),
        gaussian_op(m2, n, n, spec.at("seed_b").get<std::uint64_t>()));
  }
  throw std::invalid_argument("operator.kind unknown: " + kind);
}

std::string MetricsRow::csv_header() {
  return "schema,decoder,rel_l2_error,grad_l2_error,tv_error,residual,eps,iterations,converged";
}

std::string MetricsRow::csv_row() const {
  std::string out = "1," + decoder;
  for (double v : {rel_l2_error, grad_l2_error, tv_error, residual, eps})
    out += "," + fmt_double(v);
  out += "," + std::to_string(iterations);
  out += converged ? ",1" : ",0";
  return out;
}

json_t MetricsRow::to_json() const {
  return json_t{{"decoder", decoder},
                {"rel_l2_error", rel_l2_error},
                {"grad_l2_error", grad_l2_error},
                {"tv_error", tv_error},
                {"residual", residual},
                {"eps", eps},
                {"iterations", iterations},
                {"wall_time_sec", wall_time_sec},
                {"converged", converged}};
}

ExperimentOutput run_experiment(const ExperimentConfig& config,
                                const std::filesystem::path& out_root) {
  std::filesystem::create_directories(out_root);

  const Image truth = build_image(config.image);
  if (!truth.is_square()) throw std::invalid_argument("run_experiment: image must be square");
  const Index n = truth.rows();
  const OpPtr op = build_operator(config.operator_spec, n);

  const CVec y_clean = op->apply(truth);
  CVec y = y_clean;
  double eps = 0.0;
  const std::string noise_kind = config.noise.at("kind").get<std::string>();
  if (noise_kind == "gaussian") {
    require_seed(config.noise, "noise");
    const auto noisy = add_noise(
        y_clean, NoiseModel::gaussian_noise(config.noise.at("sigma").get<double>(),
                                            config.noise.at("seed").get<std::uint64_t>()));
    y = noisy.y_noisy;
    eps = noisy.eps;
  } else if (noise_kind == "quantization") {
    const auto noisy =
        add_noise(y_clean, NoiseModel::quantization(config.noise.at("delta").get<double>()));
    y = noisy.y_noisy;
    eps = noisy.eps;
  } else if (noise_kind != "none") {
    throw std::invalid_argument("noise.kind unknown: " + noise_kind);
  }

  ExperimentOutput out;
  const GradientField truth_grad = discrete_gradient(truth);
  const double truth_norm = truth.norm();

  json_t decoder_log = json_t::array();
  for (const std::string& decoder : config.decoders) {
    const auto t0 = std::chrono::steady_clock::now();
    const ReconstructionResult res = decoder == "tv" ? solve_tv(*op, y, eps, config.solver)
                                                     : solve_l1_haar(*op, y, eps, config.solver);
    const auto t1 = std::chrono::steady_clock::now();

    MetricsRow row;
    row.decoder = decoder;
    const CMat diff = truth.mat() - res.estimate.mat();
    row.rel_l2_error = diff.norm() / truth_norm;
    const GradientField est_grad = discrete_gradient(res.estimate);
    row.grad_l2_error = GradientField{truth_grad.gx - est_grad.gx, truth_grad.gy - est_grad.gy}
                            .l2_norm();
    row.tv_error = tv_norm(Image(diff), config.solver.tv_mode);
    row.residual = res.residual;
    row.eps = eps;
    row.iterations = res.iterations;
    row.wall_time_sec = std::chrono::duration<double>(t1 - t0).count();
    row.converged = res.converged;
    out.rows.push_back(row);

    const auto img_path = out_root / (config.output_prefix + "_" + decoder + ".pgm");
    write_pgm16(img_path, res.estimate);
    out.image_paths.push_back(img_path);
    decoder_log.push_back(row.to_json());
  }

  // CSV in config order, frozen schema
  std::string csv = MetricsRow::csv_header() + "\n";
  for (const auto& row : out.rows) csv += row.csv_row() + "\n";
  out.csv_path = out_root / (config.output_prefix + "_metrics.csv");
  {
    const auto tmp = out.csv_path.string() + ".tmp";
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    f << csv;
    f.close();
    std::filesystem::rename(tmp, out.csv_path);
  }

  json_t run_log{{"image", config.image},
                 {"operator", op->descriptor()},
                 {"noise", config.noise},
                 {"eps", eps},
                 {"decoders", decoder_log}};
  out.run_log_path = out_root / (config.output_prefix + "_run.json");
  {
    const auto tmp = out.run_log_path.string() + ".tmp";
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    f << run_log.dump(2) << "\n";
    f.close();
    std::filesystem::rename(tmp, out.run_log_path);
  }
  return out;
}

}  // namespace tvr
