#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "simspec/io.hpp"
#include "simspec/simspec.hpp"

namespace fs = std::filesystem;
using namespace simspec;
using simspec::io::json;

namespace {

constexpr int kExitHypothesis = 3;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 1;

struct HypothesisFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Writes to a sibling temporary file and renames it into place.
void write_atomically(const std::string& path, const std::string& content) {
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << content;
  }
  fs::rename(tmp, target);
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty() || out_path == "-")
    std::cout << content;
  else
    write_atomically(out_path, content);
}

io::ExperimentConfig table1_config() {
  io::ExperimentConfig cfg{
      .model = MixtureModel({GaussianComponent{{-10.0}, {1.0}}, GaussianComponent{{15.0}, {1.0}}}, {0.98, 0.02}),
      .kernel = KernelConfig{.omega = 1.0, .convention = Convention::operator_form}};
  cfg.n = 50;
  cfg.seed = 0;
  cfg.iters = 5;
  return cfg;
}

io::ExperimentConfig load(const std::string& path, const std::string& convention) {
  io::ExperimentConfig cfg = path.empty() ? table1_config() : io::load_config(path);
  if (!convention.empty()) cfg.kernel.convention = parse_convention(convention);
  return cfg;
}

io::SpectrumRun spectrum_run(const io::ExperimentConfig& cfg, std::size_t seeds, std::size_t top,
                             std::vector<std::string>& failures) {
  io::SpectrumRun run;
  for (std::size_t s = 0; s < seeds; ++s) {
    const std::uint64_t seed = cfg.seed + s;
    const KernelMatrix k = build_kernel_matrix(sample(cfg.model, cfg.n, seed), cfg.kernel);
    const Eigen::VectorXd ev = symmetric_eigenvalues(k.entries);
    const RowSumBounds rb = row_sum_bounds(k);
    if (ev(0) < rb.min_row_sum - 1e-10 || ev(0) > rb.max_row_sum + 1e-10)
      failures.push_back("seed " + std::to_string(seed) + ": top eigenvalue outside the row-sum bracket");
    const std::size_t kk = std::min<std::size_t>(top, static_cast<std::size_t>(ev.size()));
    run.seeds.push_back(seed);
    run.top.emplace_back(ev.data(), ev.data() + kk);
  }
  return run;
}

Trajectory simulate(const io::ExperimentConfig& cfg, std::vector<std::string>& failures) {
  const SampleSet s = sample(cfg.model, cfg.n, cfg.seed);
  Eigen::MatrixXd initial;
  if (cfg.layout) {
    initial = line_layout(cfg.n, cfg.layout->start, cfg.layout->end);
  } else {
    initial = s.points;
  }
  const RowSumBounds rb = row_sum_bounds(build_kernel_matrix(s, cfg.kernel));
  if (!(rb.max_row_sum < 1.0)) failures.push_back("kernel is not a contraction: all parameters coincide");
  return run(s, initial, cfg.kernel, cfg.iters, cfg.tau);
}

std::string to_string(const json& j) { return j.dump(2) + "\n"; }

void require(const std::vector<std::string>& failures) {
  if (failures.empty()) return;
  std::string msg;
  for (const auto& f : failures) msg += (msg.empty() ? "" : "; ") + f;
  throw HypothesisFailure(msg);
}

std::vector<std::size_t> parse_ns(const std::string& s) {
  std::vector<std::size_t> ns;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      ns.push_back(static_cast<std::size_t>(std::stoull(item)));
    } catch (const std::exception&) {
      throw InputError("--ns: '" + item + "' is not a count");
    }
  }
  return ns;
}

std::string reproduce_report(const io::SpectrumRun& spec, const BoundReport& b, double nys0, double nys1,
                             const Trajectory& t) {
  const auto mean = spec.mean();
  const double ref_lambda[] = {0.62, 0.22, 0.08};
  const double tol_lambda[] = {0.03, 0.04, 0.03};
  std::ostringstream md;
  auto mark = [](bool ok) { return ok ? "yes" : "no"; };
  md << "# Reference mixture reproduction\n\n";
  md << "Mixture 0.98 N(-10, 1) + 0.02 N(15, 1), kernel exp(-(x - z)^2 / 2), n = 50, "
     << spec.seeds.size() << " seeds.\n\n";
  md << "## Empirical spectrum\n\n| k | mean | reference | tolerance | within |\n|---|---|---|---|---|\n";
  for (std::size_t k = 0; k < 3 && k < mean.size(); ++k)
    md << "| " << k << " | " << io::fmt(mean[k]) << " | " << ref_lambda[k] << " | " << tol_lambda[k] << " | "
       << mark(std::abs(mean[k] - ref_lambda[k]) <= tol_lambda[k]) << " |\n";
  md << "\n## Operator eigenvalues (512-point Nystrom)\n\n";
  md << "- lambda_0 = " << io::fmt(nys0) << ", sandwich [" << io::fmt(b.lambda0_sandwich.lower) << ", "
     << io::fmt(b.lambda0_sandwich.upper) << "], inside: " << mark(b.lambda0_sandwich.contains(nys0, 1e-8)) << "\n";
  md << "- lambda_1 = " << io::fmt(nys1) << "\n\n";
  md << "## Second-eigenvalue interval\n\n";
  md << "- certified: " << mark(b.certified) << "\n";
  md << "- interval: [" << io::fmt(b.lambda1_interval.lower) << ", " << io::fmt(b.lambda1_interval.upper) << "]\n";
  md << "- upper bound, statement form: " << io::fmt(b.upper_statement_form) << "\n";
  md << "- reference interval: (0.18, 0.33)\n";
  md << "- contains operator lambda_1: " << mark(b.lambda1_interval.contains(nys1, 1e-8)) << "\n";
  md << "- contains empirical 0.22: " << mark(b.lambda1_interval.contains(0.22)) << "\n";
  md << "- lower endpoint within 0.05 of 0.18: " << mark(std::abs(b.lambda1_interval.lower - 0.18) <= 0.05) << "\n";
  md << "- upper endpoint within 0.05 of 0.33: " << mark(std::abs(b.lambda1_interval.upper - 0.33) <= 0.05) << "\n\n";
  md << "## Dynamics\n\n| iter | diameter | centroid norm | clusters |\n|---|---|---|---|\n";
  for (std::size_t k = 0; k < t.states.size(); ++k)
    md << "| " << k << " | " << io::fmt(t.diameters[k]) << " | " << io::fmt(t.centroid_norms[k]) << " | "
       << cluster_count(t.cluster_labels[k]) << " |\n";
  return md.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kernel-matrix spectra, Gaussian-mixture bounds and clustering dynamics"};
  app.require_subcommand(1);

  std::string config_path, out_path, convention, ns_text = "50,100,200,400";
  std::string out_dir = "table1_out";
  std::size_t seeds = 100, top = 3, count = 10;
  std::optional<double> t_override;
  double sigma = 1.0, omega = 1.0;
  bool no_oracle = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "Experiment config (JSON); defaults to the reference mixture");
    sub->add_option("--out", out_path, "Output file (stdout if omitted)");
    sub->add_option("--kernel-convention", convention, "matrix or operator")
        ->check(CLI::IsMember({"matrix", "operator"}));
  };

  auto* spectrum = app.add_subcommand("spectrum", "Top eigenvalues of the kernel matrix per seed");
  add_common(spectrum);
  spectrum->add_option("--seeds", seeds, "Number of seeds")->check(CLI::PositiveNumber);
  spectrum->add_option("--top", top, "Eigenvalues per seed")->check(CLI::PositiveNumber);

  auto* bounds = app.add_subcommand("bounds", "Bounds on the top two operator eigenvalues (JSON)");
  add_common(bounds);
  bounds->add_option("--t-override", t_override, "Eigen-gap t to use instead of the computed proxy");
  bounds->add_flag("--no-oracle", no_oracle, "Skip the quadrature cross-checks");

  auto* simulate_cmd = app.add_subcommand("simulate", "Iterate the dynamical system (trajectory CSV)");
  add_common(simulate_cmd);

  auto* analytic = app.add_subcommand("analytic", "Closed-form operator eigenvalues (CSV)");
  analytic->add_option("--sigma", sigma, "Component standard deviation")->check(CLI::PositiveNumber);
  analytic->add_option("--omega", omega, "Kernel width")->check(CLI::PositiveNumber);
  analytic->add_option("--count", count, "Number of eigenvalues")->check(CLI::Range(1, 61));
  analytic->add_option("--out", out_path, "Output file (stdout if omitted)");
  analytic->add_option("--kernel-convention", convention, "matrix or operator (default operator)")
      ->check(CLI::IsMember({"matrix", "operator"}));

  auto* convergence = app.add_subcommand("convergence", "Matrix-to-operator spectral distance vs n (CSV)");
  add_common(convergence);
  convergence->add_option("--ns", ns_text, "Comma-separated increasing sample sizes");
  convergence->add_option("--seeds", seeds, "Seeds per n (>= 10)");

  auto* reproduce = app.add_subcommand("reproduce-table1", "Spectrum, bounds and dynamics for the reference mixture");
  reproduce->add_option("--config", config_path, "Override the built-in reference config");
  reproduce->add_option("--out", out_dir, "Output directory")->capture_default_str();
  reproduce->add_option("--seeds", seeds, "Seeds for the spectrum run")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*spectrum) {
      const auto cfg = load(config_path, convention);
      std::vector<std::string> failures;
      const auto run = spectrum_run(cfg, seeds, top, failures);
      std::ostringstream csv;
      io::write_spectrum_csv(csv, run);
      emit(out_path, csv.str());
      require(failures);
    } else if (*bounds) {
      const auto cfg = load(config_path, convention);
      const BoundReport b = second_eigenvalue_interval(cfg.model, cfg.kernel, {t_override, !no_oracle});
      emit(out_path, to_string(io::to_json(b)));
      require(b.reasons);
    } else if (*simulate_cmd) {
      const auto cfg = load(config_path, convention);
      std::vector<std::string> failures;
      const Trajectory t = simulate(cfg, failures);
      std::ostringstream csv;
      io::write_trajectory_csv(csv, t);
      emit(out_path, csv.str());
      require(failures);
    } else if (*analytic) {
      const Convention c = convention.empty() ? Convention::operator_form : parse_convention(convention);
      const double w = Bandwidth::of(omega, c).operator_omega();
      std::vector<double> lambdas;
      for (std::size_t i = 0; i < count; ++i) lambdas.push_back(analytic_eigenvalue(static_cast<int>(i), sigma, w));
      std::ostringstream csv;
      io::write_analytic_csv(csv, lambdas);
      emit(out_path, csv.str());
      const double ratio = decay_ratio(2.0 * sigma * sigma / (w * w));
      std::vector<std::string> failures;
      for (std::size_t i = 1; i < lambdas.size(); ++i)
        if (std::abs(lambdas[i] / lambdas[i - 1] - ratio) > 1e-12) failures.push_back("non-geometric decay");
      require(failures);
    } else if (*convergence) {
      const auto cfg = load(config_path, convention);
      const auto rows = convergence_experiment(cfg.model, cfg.kernel, parse_ns(ns_text), seeds, cfg.seed);
      std::ostringstream csv;
      io::write_convergence_csv(csv, rows);
      emit(out_path, csv.str());
    } else if (*reproduce) {
      const auto cfg = load(config_path, "");
      std::vector<std::string> failures;
      const auto spec = spectrum_run(cfg, seeds, 3, failures);
      const BoundReport b = second_eigenvalue_interval(cfg.model, cfg.kernel, {std::nullopt, true});
      const NystromOperator op(cfg.model, cfg.kernel);
      const double nys0 = op.eigenvalues()(0);
      const double nys1 = op.eigenvalues()(1);
      const Trajectory t = simulate(cfg, failures);

      std::ostringstream spectrum_csv, trajectory_csv;
      io::write_spectrum_csv(spectrum_csv, spec);
      io::write_trajectory_csv(trajectory_csv, t);
      const fs::path dir(out_dir);
      write_atomically((dir / "spectrum.csv").string(), spectrum_csv.str());
      write_atomically((dir / "bounds.json").string(), to_string(io::to_json(b)));
      write_atomically((dir / "trajectory.csv").string(), trajectory_csv.str());
      write_atomically((dir / "report.md").string(), reproduce_report(spec, b, nys0, nys1, t));

      for (const auto& r : b.reasons) failures.push_back(r);
      if (!b.lambda0_sandwich.contains(nys0, 1e-8)) failures.push_back("operator lambda_0 outside the sandwich");
      if (!b.lambda1_interval.contains(nys1, 1e-8)) failures.push_back("operator lambda_1 outside the interval");
      require(failures);
      std::cout << "wrote " << dir.string() << "\n";
    }
  } catch (const HypothesisFailure& e) {
    std::cerr << io::error_json("hypothesis", e.what()).dump() << "\n";
    return kExitHypothesis;
  } catch (const std::invalid_argument& e) {
    std::cerr << io::error_json("input", e.what()).dump() << "\n";
    return kExitInput;
  } catch (const UnsupportedError& e) {
    std::cerr << io::error_json("unsupported", e.what()).dump() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << io::error_json("internal", e.what()).dump() << "\n";
    return kExitInternal;
  }
  return 0;
}
