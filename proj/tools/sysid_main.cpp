// sysid: simulate systems, run estimator sweeps and report spectral quantities.

#include "sysid/bench/config.hpp"
#include "sysid/bench/csv.hpp"
#include "sysid/bench/presets.hpp"
#include "sysid/bench/sweep.hpp"
#include "sysid/errors.hpp"
#include "sysid/estimators.hpp"
#include "sysid/jordan.hpp"
#include "sysid/phase_rank.hpp"
#include "sysid/polynomial.hpp"
#include "sysid/system_io.hpp"
#include "sysid/theory.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace sysid;
using nlohmann::json;

namespace {

StateSpace load_system_arg(const std::string& arg) {
  if (bench::is_preset(arg)) return bench::preset(arg);
  return load_system(arg);
}

std::vector<Index> n_grid(const std::vector<Index>& explicit_grid, int lo, int hi) {
  if (!explicit_grid.empty()) return explicit_grid;
  std::vector<Index> out;
  for (int e = lo; e <= hi; ++e) out.push_back(Index{1} << e);
  return out;
}

std::vector<std::uint64_t> seed_list(std::uint64_t count, std::uint64_t start) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(start + i);
  return out;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    bench::write_atomic(path, text);
  }
}

json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json finite_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

std::string trajectory_csv(const Trajectory& traj) {
  std::ostringstream os;
  os << "t";
  for (Index i = 0; i < traj.u.cols(); ++i) os << ",u" << i;
  for (Index i = 0; i < traj.y.cols(); ++i) os << ",y" << i;
  for (Index i = 0; i < traj.x.cols(); ++i) os << ",x" << i;
  os << '\n';
  for (Index t = 0; t < traj.N(); ++t) {
    os << t + 1;
    for (Index i = 0; i < traj.u.cols(); ++i) os << ',' << bench::format_double(traj.u(t, i));
    for (Index i = 0; i < traj.y.cols(); ++i) os << ',' << bench::format_double(traj.y(t, i));
    for (Index i = 0; i < traj.x.cols(); ++i) os << ',' << bench::format_double(traj.x(t, i));
    os << '\n';
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Markov-parameter estimation for partially observed linear systems"};
  app.require_subcommand(1);

  // simulate
  std::string sim_system = "double-integrator";
  Index sim_N = 1000;
  std::uint64_t sim_seed = 0;
  std::string sim_noise = "gaussian";
  std::string sim_out;
  auto* simulate_cmd = app.add_subcommand("simulate", "Simulate a trajectory and print it as CSV");
  simulate_cmd->add_option("-s,--system", sim_system, "Preset name or system JSON file");
  simulate_cmd->add_option("-N", sim_N, "Horizon")->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--seed", sim_seed, "Random seed");
  simulate_cmd->add_option("--noise", sim_noise, "Noise model JSON, or none/gaussian");
  simulate_cmd->add_option("-o,--output", sim_out, "Output CSV (default stdout)");

  // sweep
  std::string sweep_config;
  std::string sweep_out;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run an estimator sweep from a JSON config");
  sweep_cmd->add_option("-c,--config", sweep_config, "Experiment config")->required()->check(CLI::ExistingFile);
  sweep_cmd->add_option("-o,--output", sweep_out, "Output CSV (overrides the config)");

  // lowerbound
  std::string lb_system = "double-integrator";
  std::vector<Index> lb_grid;
  int lb_lo = 10, lb_hi = 15;
  std::uint64_t lb_seeds = 20, lb_seed_start = 0;
  Index lb_T = 5;
  std::string lb_out;
  auto* lb_cmd = app.add_subcommand("lowerbound", "Noiseless OLS error next to the Gramian growth term");
  lb_cmd->add_option("-s,--system", lb_system, "Preset name or system JSON file");
  lb_cmd->add_option("--N", lb_grid, "Explicit horizons");
  lb_cmd->add_option("--log2-min", lb_lo, "Smallest horizon exponent");
  lb_cmd->add_option("--log2-max", lb_hi, "Largest horizon exponent");
  lb_cmd->add_option("--seeds", lb_seeds, "Number of seeds");
  lb_cmd->add_option("--seed-start", lb_seed_start, "First seed");
  lb_cmd->add_option("-T", lb_T, "Response length")->check(CLI::PositiveNumber);
  lb_cmd->add_option("-o,--output", lb_out, "Output CSV (default stdout)");

  // analyze
  std::string an_spec;
  double an_alpha = 1.0;
  Index an_T = 1;
  Index an_dmax = 12;
  double an_N = 1000;
  std::string an_system;
  std::string an_similarity;
  Index an_grid = 512;
  auto* an_cmd = app.add_subcommand("analyze", "Phase rank, polynomial filter and K1/K2 report for a Jordan spec");
  an_cmd->add_option("--spec", an_spec, "Jordan spec JSON file")->required()->check(CLI::ExistingFile);
  an_cmd->add_option("--alpha", an_alpha, "Covering width parameter (>= 1)");
  an_cmd->add_option("-T", an_T, "Subsampling spacing")->check(CLI::PositiveNumber);
  an_cmd->add_option("--d-max", an_dmax, "Phase-rank search budget (<= 12)");
  an_cmd->add_option("-N", an_N, "Horizon for K2 and Mbar");
  an_cmd->add_option("--system", an_system, "System (preset or JSON) for the M constants");
  an_cmd->add_option("--similarity", an_similarity, "Real similarity matrix JSON (A = S J S^-1)");
  an_cmd->add_option("--grid", an_grid, "Boundary grid size for disc maxima");

  // selectl
  std::string sl_system = "double-integrator";
  Index sl_N = 4096;
  std::uint64_t sl_seed = 0;
  Index sl_T = 5, sl_Lmax = 6;
  double sl_mu = 1.0, sl_delta = 0.1;
  auto* sl_cmd = app.add_subcommand("selectl", "Choose the filter length by structural risk minimization");
  sl_cmd->add_option("-s,--system", sl_system, "Preset name or system JSON file");
  sl_cmd->add_option("-N", sl_N, "Horizon")->check(CLI::PositiveNumber);
  sl_cmd->add_option("--seed", sl_seed, "Random seed");
  sl_cmd->add_option("-T", sl_T, "Response length")->check(CLI::PositiveNumber);
  sl_cmd->add_option("--L-max", sl_Lmax, "Largest candidate length")->check(CLI::PositiveNumber);
  sl_cmd->add_option("--mu", sl_mu, "Ridge parameter");
  sl_cmd->add_option("--delta", sl_delta, "Confidence level");

  // preset
  std::string pr_name;
  auto* pr_cmd = app.add_subcommand("preset", "Print a built-in system as JSON");
  pr_cmd->add_option("name", pr_name, "Preset name")->required()->check(CLI::IsMember(bench::preset_names()));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*simulate_cmd) {
      const StateSpace sys = load_system_arg(sim_system);
      const NoiseModel noise = bench::noise_from_json_text(
          sim_noise.front() == '{' ? sim_noise : json(sim_noise).dump());
      emit(trajectory_csv(simulate(sys, sim_N, noise, sim_seed)), sim_out);
    } else if (*sweep_cmd) {
      bench::ExperimentConfig config = bench::load_config(sweep_config);
      if (!sweep_out.empty()) config.output = sweep_out;
      const auto rows = bench::run_sweep(config);
      std::size_t failed = 0;
      for (const auto& r : rows) failed += r.error.empty() ? 0 : 1;
      emit(bench::results_csv(rows), config.output);
      std::fprintf(stderr, "%zu rows (%zu with errors)\n", rows.size(), failed);
    } else if (*lb_cmd) {
      const StateSpace sys = load_system_arg(lb_system);
      const auto rows = bench::run_lowerbound(sys, n_grid(lb_grid, lb_lo, lb_hi),
                                              seed_list(lb_seeds, lb_seed_start), lb_T);
      emit(bench::lowerbound_csv(rows), lb_out);
    } else if (*an_cmd) {
      const JordanSpec spec = load_jordan_spec(an_spec);
      json report;
      const auto cert = phase_rank(spec, an_alpha, an_T, an_dmax);
      if (cert) {
        json w = json::array();
        for (const auto& mu : cert->witnesses) w.push_back(complex_json(mu));
        report["phase_rank"] = {{"d", cert->d()}, {"witnesses", w}};
        report["K1_hinf"] = analysis::k1(spec, cert->d(), an_T, an_alpha, analysis::NormKind::Hinf);
        report["K1_h2"] = analysis::k1(spec, cert->d(), an_T, an_alpha, analysis::NormKind::H2);
        try {
          const MonicPolynomial f = poly_from_witnesses(*cert);
          report["witness_polynomial"] = {{"coefficients", f.coefficients()}, {"l1_norm", f.l1_norm()}};
          const auto h = analysis::eval_Hf(f, spec, an_T, analysis::NormKind::Hinf, an_grid);
          report["Hf_hinf_witness"] = finite_or_null(h.value);
        } catch (const NonRealCoefficients& e) {
          report["witness_polynomial"] = {{"error", e.what()}};
        }
      } else {
        report["phase_rank"] = {{"d", nullptr}, {"note", "no certificate within budget"}};
      }
      report["K2"] = analysis::k2(spec, an_N);
      try {
        const MonicPolynomial f = minimal_polynomial(spec, an_T);
        report["minimal_polynomial"] = {{"coefficients", f.coefficients()}, {"l1_norm", f.l1_norm()}};
        const auto h = analysis::eval_Hf(f, spec, an_T, analysis::NormKind::Hinf, an_grid);
        report["Hf_hinf_minimal"] = finite_or_null(h.value);
      } catch (const NonRealCoefficients& e) {
        report["minimal_polynomial"] = {{"error", e.what()}};
      }
      if (!an_system.empty()) {
        const StateSpace sys = load_system_arg(an_system);
        const Matrix S = an_similarity.empty()
                             ? Matrix::Identity(sys.n(), sys.n())
                             : matrix_from_json_text(read_text_file(an_similarity));
        const auto check = validate_against(spec, sys.A());
        report["spectrum_matches_system"] = check.ok;
        if (!check.ok) report["spectrum_mismatch"] = check.message;
        const auto mc = analysis::m_constants(sys, S.cast<Complex>(), an_N);
        report["M"] = {{"M0", mc.M0}, {"MB", mc.MB}, {"MC", mc.MC}, {"MD", mc.MD}, {"Mbar", mc.Mbar}};
      }
      std::cout << report.dump(2) << '\n';
    } else if (*sl_cmd) {
      const StateSpace sys = load_system_arg(sl_system);
      const Trajectory traj = simulate(sys, sl_N, GaussianNoise{}, sl_seed);
      const auto result = est::select_L(traj, sl_T, sl_Lmax, sl_mu, sl_delta);
      std::printf("%4s %14s %14s %10s %s\n", "L", "opt_hat", "conf", "admissible", "");
      for (const auto& c : result.candidates) {
        std::printf("%4ld %14.6g %14.6g %10s %s\n", static_cast<long>(c.L), c.opt_hat, c.conf,
                    c.admissible ? "yes" : "no", c.L == result.L ? "<-" : "");
      }
      if (!result.warning.empty()) std::fprintf(stderr, "warning: %s\n", result.warning.c_str());
    } else if (*pr_cmd) {
      std::cout << system_to_json(bench::preset(pr_name)) << '\n';
    }
  } catch (const sysid::Error& e) {
    std::fprintf(stderr, "sysid: %s\n", e.what());
    return 1;
  }
  return 0;
}
