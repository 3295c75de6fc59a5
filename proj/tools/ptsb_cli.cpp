// ptsb: single-point decoherence evaluation, figure sweeps, similarity
// verification, and the discrete-vs-continuum oracle, with CSV/JSON output.
//
// Exit codes: 0 success, 2 usage/validation, 3 numerical non-convergence,
// 4 verification failure.

#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ptsb/decoherence.hpp"
#include "ptsb/errors.hpp"
#include "ptsb/experiments.hpp"
#include "ptsb/fock.hpp"
#include "ptsb/io.hpp"
#include "ptsb/model.hpp"
#include "ptsb/quadrature.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNonConvergence = 3;
constexpr int kExitVerifyFailure = 4;

double parse_angle(const std::string& text) {
  if (text == "pi") return ptsb::model::kPi;
  if (text == "pi/2") return ptsb::model::kPi / 2.0;
  if (text == "pi/3") return ptsb::model::kPi / 3.0;
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size()) {
    throw std::domain_error("--theta expects radians or one of pi/2, pi/3, pi; got '" + text +
                            "'");
  }
  return value;
}

std::complex<double> parse_complex(const std::string& text) {
  // Accepted forms: "0.1", "0.1+0.05i", "0.1-0.05i", "0.1,0.05".
  const auto fail = [&]() -> std::complex<double> {
    throw std::domain_error("--coupling expects re, re,im or re+imi; got '" + text + "'");
  };
  std::string s = text;
  double re = 0.0, im = 0.0;
  std::size_t used = 0;
  try {
    re = std::stod(s, &used);
  } catch (const std::exception&) {
    return fail();
  }
  if (used == s.size()) return {re, 0.0};
  s = s.substr(used);
  if (s.front() == ',') {
    s = s.substr(1);
    try {
      im = std::stod(s, &used);
    } catch (const std::exception&) {
      return fail();
    }
    if (used != s.size()) return fail();
    return {re, im};
  }
  if (s.back() != 'i') return fail();
  s.pop_back();
  try {
    im = std::stod(s, &used);
  } catch (const std::exception&) {
    return fail();
  }
  if (used != s.size()) return fail();
  return {re, im};
}

struct OutputOptions {
  std::string path;    // empty = stdout
  std::string format = "csv";
};

void add_output_options(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("-o,--output", out.path, "Write to file instead of stdout");
  cmd->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

void emit(const OutputOptions& opts, const ptsb::io::Table& table) {
  std::ostringstream buffer;
  if (opts.format == "json") {
    ptsb::io::write_json(buffer, table);
  } else {
    ptsb::io::write_csv(buffer, table);
  }
  if (opts.path.empty()) {
    std::cout << buffer.str();
    return;
  }
  std::ofstream file(opts.path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file '" + opts.path + "'");
  file << buffer.str();
}

struct SystemFlags {
  double alpha_s = 0.0;
  double e1 = std::numeric_limits<double>::quiet_NaN();  // NaN = not given

  ptsb::model::SystemConfig build() const {
    if (!std::isnan(e1)) return ptsb::model::SystemConfig::from_e1(e1);
    return ptsb::model::SystemConfig::from_alpha(alpha_s);
  }
};

struct EnvFlags {
  double tau = 0.0;
  std::string zeta_form = "quadratic";
  double delta = 1.0;
  double amp = 1.0;
  double cutoff = 0.1;
  double temperature = 300.0;
  std::string theta = "pi/2";
  bool zero_temperature = false;

  ptsb::model::EnvConfig build() const {
    return ptsb::model::EnvConfig::make(tau, ptsb::model::zeta_form_from_string(zeta_form), delta,
                                        amp, cutoff, temperature, parse_angle(theta),
                                        zero_temperature);
  }
};

struct QuadFlags {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  int max_subdivisions = 200;
  double truncation_factor = 60.0;

  ptsb::quadrature::QuadratureConfig build() const {
    ptsb::quadrature::QuadratureConfig cfg;
    cfg.rel_tol = rel_tol;
    cfg.abs_tol = abs_tol;
    cfg.max_subdivisions = max_subdivisions;
    cfg.truncation_factor = truncation_factor;
    return cfg;
  }
};

void add_system_flags(CLI::App* cmd, SystemFlags& sys) {
  auto* a = cmd->add_option("--alpha-s", sys.alpha_s, "Qubit non-Hermiticity alpha_s in [-1,1]")
                ->capture_default_str();
  cmd->add_option("--e1", sys.e1, "Qubit eigenvalue E1 in [0,1] (alternative to --alpha-s)")
      ->excludes(a);
}

void add_env_flags(CLI::App* cmd, EnvFlags& env) {
  cmd->add_option("--tau", env.tau, "Bath non-Hermiticity tau")->capture_default_str();
  cmd->add_option("--zeta-form", env.zeta_form, "zeta(tau) form: quadratic|quartic|sextic")
      ->capture_default_str();
  cmd->add_option("--delta", env.delta, "Bath stiffness scale delta")->capture_default_str();
  cmd->add_option("--amp", env.amp, "Spectral-density amplitude")->capture_default_str();
  cmd->add_option("--cutoff", env.cutoff, "Spectral-density cutoff")->capture_default_str();
  cmd->add_option("--temperature", env.temperature, "Bath temperature (K = 1)")
      ->capture_default_str();
  cmd->add_option("--theta", env.theta, "Coupling phase (radians, or pi/2, pi/3, pi)")
      ->capture_default_str();
  cmd->add_flag("--zero-temperature", env.zero_temperature,
                "Replace the thermal factor coth(w/2T) by 1");
}

void add_quad_flags(CLI::App* cmd, QuadFlags& quad) {
  cmd->add_option("--rel-tol", quad.rel_tol, "Quadrature relative tolerance")
      ->capture_default_str();
  cmd->add_option("--abs-tol", quad.abs_tol, "Quadrature absolute tolerance")
      ->capture_default_str();
  cmd->add_option("--max-subdivisions", quad.max_subdivisions, "Adaptive bisection budget")
      ->capture_default_str();
  cmd->add_option("--truncation-factor", quad.truncation_factor,
                  "Integration range in units of the cutoff")
      ->capture_default_str();
}

void push_system_params(ptsb::io::Table& table, const ptsb::model::SystemConfig& sys) {
  table.params.emplace_back("alpha_s", ptsb::io::format_double(sys.alpha_s));
  table.params.emplace_back("e1", ptsb::io::format_double(sys.e1));
}

void push_env_params(ptsb::io::Table& table, const ptsb::model::EnvConfig& env) {
  table.params.emplace_back("tau", ptsb::io::format_double(env.tau));
  table.params.emplace_back("zeta_form", std::string(ptsb::model::to_string(env.zeta_form)));
  table.params.emplace_back("zeta", ptsb::io::format_double(env.zeta));
  table.params.emplace_back("delta", ptsb::io::format_double(env.delta));
  table.params.emplace_back("amp", ptsb::io::format_double(env.amp));
  table.params.emplace_back("cutoff", ptsb::io::format_double(env.cutoff));
  table.params.emplace_back("temperature", ptsb::io::format_double(env.temperature));
  table.params.emplace_back("theta", ptsb::io::format_double(env.theta));
  if (env.zero_temperature) table.params.emplace_back("zero_temperature", "true");
}

void push_quad_params(ptsb::io::Table& table, const ptsb::quadrature::QuadratureConfig& cfg) {
  table.params.emplace_back("rel_tol", ptsb::io::format_double(cfg.rel_tol));
  table.params.emplace_back("abs_tol", ptsb::io::format_double(cfg.abs_tol));
}

// ---------------------------------------------------------------- lambda --

struct LambdaArgs {
  SystemFlags sys;
  EnvFlags env;
  QuadFlags quad;
  std::vector<double> times;
  OutputOptions out;
};

int run_lambda(const LambdaArgs& args) {
  const auto sys = args.sys.build();
  const auto env = args.env.build();
  const auto quad = args.quad.build();
  ptsb::io::Table table;
  table.params.emplace_back("command", "lambda");
  push_system_params(table, sys);
  push_env_params(table, env);
  push_quad_params(table, quad);
  table.columns = {"t", "lambda", "abs_error"};
  for (double t : args.times) {
    const auto result = ptsb::decoherence::lambda_continuum(t, sys, env, quad);
    table.rows.push_back({t, result.value, result.abs_error_estimate});
  }
  emit(args.out, table);
  return kExitOk;
}

// ------------------------------------------------------------- hermitian --

struct HermitianArgs {
  double amp = 1.0;
  double cutoff = 0.1;
  double temperature = 300.0;
  QuadFlags quad;
  std::vector<double> times;
  OutputOptions out;
};

int run_hermitian(const HermitianArgs& args) {
  const auto quad = args.quad.build();
  ptsb::io::Table table;
  table.params.emplace_back("command", "hermitian");
  table.params.emplace_back("amp", ptsb::io::format_double(args.amp));
  table.params.emplace_back("cutoff", ptsb::io::format_double(args.cutoff));
  table.params.emplace_back("temperature", ptsb::io::format_double(args.temperature));
  push_quad_params(table, quad);
  table.columns = {"t", "lambda", "abs_error"};
  for (double t : args.times) {
    const auto result =
        ptsb::decoherence::lambda_hermitian(t, args.amp, args.cutoff, args.temperature, quad);
    table.rows.push_back({t, result.value, result.abs_error_estimate});
  }
  emit(args.out, table);
  return kExitOk;
}

// ---------------------------------------------------------------- figure --

struct FigureArgs {
  std::string name;
  double t_max = 0.0;  // 0 = per-figure default
  int points = 400;
  double t_fixed = 10.0;
  int threads = 1;
  QuadFlags quad;
  OutputOptions out;
};

ptsb::io::Table sweeps_to_table(const std::vector<ptsb::experiments::SweepResult>& sweeps) {
  ptsb::io::Table table;
  if (sweeps.empty()) return table;
  table.columns.push_back(sweeps.front().axis);
  for (const auto& sweep : sweeps) {
    table.params.emplace_back("series " + sweep.name, sweep.label);
    table.columns.push_back("lambda[" + sweep.name + "]");
    table.columns.push_back("abs_error[" + sweep.name + "]");
  }
  const std::size_t n = sweeps.front().axis_values.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> row;
    row.push_back(sweeps.front().axis_values[i]);
    for (const auto& sweep : sweeps) {
      row.push_back(sweep.lambda[i]);
      row.push_back(sweep.error_estimates[i]);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

int run_figure(const FigureArgs& args) {
  namespace ex = ptsb::experiments;
  const auto quad = args.quad.build();
  const double pi = ptsb::model::kPi;

  std::vector<ex::SweepResult> sweeps;
  double theta = pi / 2.0;
  double t_max = args.t_max;
  if (args.name == "fig1a" || args.name == "fig1b" || args.name == "fig1c") {
    if (args.name == "fig1b") theta = pi / 3.0;
    if (args.name == "fig1c") theta = pi;
    if (t_max <= 0.0) t_max = (args.name == "fig1a") ? 10.0 : 30.0;
    sweeps = ex::fig1(theta, t_max, args.points, quad, args.threads);
  } else if (args.name == "fig2") {
    if (t_max <= 0.0) t_max = 10.0;
    sweeps = ex::fig2({ptsb::model::ZetaForm::Quadratic, ptsb::model::ZetaForm::Quartic,
                       ptsb::model::ZetaForm::Sextic},
                      t_max, args.points, quad, args.threads);
  } else if (args.name == "fig3") {
    if (t_max <= 0.0) t_max = 10.0;
    sweeps = ex::fig3({0.0, 0.3, 0.6, 0.9, 1.0}, t_max, args.points, quad, args.threads);
  } else if (args.name == "fig4") {
    if (t_max <= 0.0) t_max = 10.0;
    sweeps = ex::fig4({0.0, 1.0, 2.0, 3.0}, t_max, args.points, quad, args.threads);
  } else if (args.name == "fig5") {
    std::vector<double> tau_grid;
    for (int i = 0; i <= 16; ++i) tau_grid.push_back(0.25 * i);
    sweeps = ex::fig5(tau_grid, {pi / 2.0, pi / 3.0, pi}, args.t_fixed, quad, args.threads);
  } else {
    throw CLI::ValidationError("figure", "unknown figure '" + args.name +
                                             "' (expected fig1a|fig1b|fig1c|fig2|fig3|fig4|fig5)");
  }

  ptsb::io::Table table = sweeps_to_table(sweeps);
  std::vector<std::pair<std::string, std::string>> head;
  head.emplace_back("command", "figure");
  head.emplace_back("figure", args.name);
  if (args.name.rfind("fig1", 0) == 0) {
    head.emplace_back("theta", ptsb::io::format_double(theta));
  } else if (args.name == "fig2") {
    head.emplace_back("e1", "0.5");
    head.emplace_back("tau", "2");
    head.emplace_back("theta", ptsb::io::format_double(pi / 2.0));
  } else if (args.name == "fig3") {
    head.emplace_back("tau", "0");
    head.emplace_back("theta", ptsb::io::format_double(pi / 2.0));
  } else if (args.name == "fig4") {
    head.emplace_back("e1", "1");
    head.emplace_back("theta", ptsb::io::format_double(pi / 2.0));
  } else if (args.name == "fig5") {
    head.emplace_back("e1", "1");
  }
  if (args.name != "fig2") head.emplace_back("zeta_form", "quadratic");
  if (args.name == "fig5") {
    head.emplace_back("t", ptsb::io::format_double(args.t_fixed));
  } else {
    head.emplace_back("t_max", ptsb::io::format_double(t_max));
    head.emplace_back("points", std::to_string(args.points));
  }
  head.emplace_back("amp", "1");
  head.emplace_back("cutoff", "0.1");
  head.emplace_back("temperature", "300");
  head.emplace_back("delta", "1");
  head.emplace_back("rel_tol", ptsb::io::format_double(quad.rel_tol));
  head.emplace_back("abs_tol", ptsb::io::format_double(quad.abs_tol));
  table.params.insert(table.params.begin(), head.begin(), head.end());
  emit(args.out, table);
  return kExitOk;
}

// ---------------------------------------------------------------- verify --

struct VerifyArgs {
  std::vector<int> dims = {20, 40, 80};
  double tau = 0.1;
  double alpha_s = 0.6;
  std::string coupling = "0.1";
  std::string zeta_form = "quadratic";
  double delta = 1.0;
  OutputOptions out;
};

int run_verify(const VerifyArgs& args) {
  const auto form = ptsb::model::zeta_form_from_string(args.zeta_form);
  const auto env = ptsb::model::EnvConfig::make(args.tau, form, args.delta);
  const auto sys = ptsb::model::SystemConfig::from_alpha(args.alpha_s);
  const auto coupling = parse_complex(args.coupling);

  // Residuals on the floating-point floor carry no ordering signal.
  constexpr double kNoiseFloor = 1e-12;
  auto ladder_ok = [](const std::vector<double>& residuals) {
    for (std::size_t i = 1; i < residuals.size(); ++i) {
      if (residuals[i] < kNoiseFloor) continue;
      if (!(residuals[i] < residuals[i - 1])) return false;
    }
    return true;
  };

  std::vector<ptsb::fock::ResidualReport> sim, comp;
  for (int dim : args.dims) sim.push_back(ptsb::fock::similarity_residual(dim, env));
  for (int dim : args.dims) comp.push_back(ptsb::fock::composite_residual(dim, sys, env, {coupling}));

  ptsb::io::Table table;
  table.params.emplace_back("command", "verify");
  table.params.emplace_back("tau", ptsb::io::format_double(args.tau));
  table.params.emplace_back("alpha_s", ptsb::io::format_double(args.alpha_s));
  table.params.emplace_back("coupling", args.coupling);
  table.params.emplace_back("zeta_form", args.zeta_form);
  table.params.emplace_back("row_blocks",
                            "bath similarity ladder first, composite ladder second");
  table.columns = {"dim", "tau", "zeta", "delta", "residual"};
  for (const auto& r : sim)
    table.rows.push_back({double(r.dim), r.tau, r.zeta, r.delta, r.residual});
  for (const auto& r : comp)
    table.rows.push_back({double(r.dim), r.tau, r.zeta, r.delta, r.residual});

  if (args.out.format == "json") {
    emit(args.out, table);
  } else {
    // CSV keeps the exact ResidualReport row shape; the two ladders are
    // delimited by comment lines so the header appears once.
    std::ostringstream buffer;
    for (const auto& [key, value] : table.params) buffer << "# " << key << ": " << value << "\n";
    buffer << "dim,tau,zeta,delta,residual\n";
    auto write_rows = [&buffer](const char* tag,
                                const std::vector<ptsb::fock::ResidualReport>& reports) {
      buffer << "# report: " << tag << "\n";
      for (const auto& r : reports) {
        buffer << r.dim << ',' << ptsb::io::format_double(r.tau) << ','
               << ptsb::io::format_double(r.zeta) << ',' << ptsb::io::format_double(r.delta)
               << ',' << ptsb::io::format_double(r.residual) << "\n";
      }
    };
    write_rows("bath similarity", sim);
    write_rows("composite", comp);
    if (args.out.path.empty()) {
      std::cout << buffer.str();
    } else {
      std::ofstream file(args.out.path, std::ios::binary);
      if (!file) throw std::runtime_error("cannot open output file '" + args.out.path + "'");
      file << buffer.str();
    }
  }

  auto residuals_of = [](const std::vector<ptsb::fock::ResidualReport>& reports) {
    std::vector<double> out;
    for (const auto& r : reports) out.push_back(r.residual);
    return out;
  };
  if (!ladder_ok(residuals_of(sim)) || !ladder_ok(residuals_of(comp))) {
    std::cerr << "verify: residuals do not decrease with dim\n";
    return kExitVerifyFailure;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- oracle --

struct OracleArgs {
  SystemFlags sys;
  EnvFlags env;
  QuadFlags quad;
  std::vector<int> n_modes = {500, 1000, 2000, 4000};
  double t = 10.0;
  double omega_max = 0.0;  // 0 = truncation_factor * cutoff
  OutputOptions out;
};

int run_oracle(const OracleArgs& args) {
  const auto sys = args.sys.build();
  const auto env = args.env.build();
  const auto quad = args.quad.build();
  const double omega_max =
      args.omega_max > 0.0 ? args.omega_max : quad.truncation_factor * env.cutoff;

  const auto continuum = ptsb::decoherence::lambda_continuum(args.t, sys, env, quad);

  ptsb::io::Table table;
  table.params.emplace_back("command", "oracle");
  push_system_params(table, sys);
  push_env_params(table, env);
  table.params.emplace_back("t", ptsb::io::format_double(args.t));
  table.params.emplace_back("omega_max", ptsb::io::format_double(omega_max));
  table.columns = {"n_modes", "lambda_discrete", "lambda_continuum", "rel_deviation"};
  for (int n : args.n_modes) {
    const auto modes = ptsb::decoherence::discretize_spectral_density(env.amp, env.cutoff,
                                                                      env.theta, n, omega_max);
    const double discrete = ptsb::decoherence::lambda_discrete(
        args.t, modes, sys.e1, env.zeta, env.delta, env.temperature, env.zero_temperature);
    const double scale = continuum.value != 0.0 ? std::abs(continuum.value) : 1.0;
    table.rows.push_back(
        {double(n), discrete, continuum.value, std::abs(discrete - continuum.value) / scale});
  }
  emit(args.out, table);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"PT-symmetric spin-boson decoherence toolkit"};
  app.require_subcommand(1);

  LambdaArgs lambda_args;
  auto* lambda_cmd =
      app.add_subcommand("lambda", "Decoherence factor Lambda(t) at given times");
  add_system_flags(lambda_cmd, lambda_args.sys);
  add_env_flags(lambda_cmd, lambda_args.env);
  add_quad_flags(lambda_cmd, lambda_args.quad);
  lambda_cmd->add_option("--t", lambda_args.times, "Evaluation time(s)")->required();
  add_output_options(lambda_cmd, lambda_args.out);

  HermitianArgs herm_args;
  auto* herm_cmd =
      app.add_subcommand("hermitian", "Hermitian-limit reference decoherence factor");
  herm_cmd->add_option("--amp", herm_args.amp, "Spectral-density amplitude")
      ->capture_default_str();
  herm_cmd->add_option("--cutoff", herm_args.cutoff, "Spectral-density cutoff")
      ->capture_default_str();
  herm_cmd->add_option("--temperature", herm_args.temperature, "Bath temperature")
      ->capture_default_str();
  add_quad_flags(herm_cmd, herm_args.quad);
  herm_cmd->add_option("--t", herm_args.times, "Evaluation time(s)")->required();
  add_output_options(herm_cmd, herm_args.out);

  FigureArgs figure_args;
  auto* figure_cmd = app.add_subcommand("figure", "Reproduce a named figure data set");
  figure_cmd->add_option("name", figure_args.name, "fig1a|fig1b|fig1c|fig2|fig3|fig4|fig5")
      ->required();
  figure_cmd->add_option("--t-max", figure_args.t_max, "Time-grid end (0 = per-figure default)");
  figure_cmd->add_option("--points", figure_args.points, "Time-grid size")
      ->capture_default_str();
  figure_cmd->add_option("--t", figure_args.t_fixed, "Fixed evaluation time (fig5)")
      ->capture_default_str();
  figure_cmd->add_option("--threads", figure_args.threads, "Worker thread cap")
      ->capture_default_str();
  add_quad_flags(figure_cmd, figure_args.quad);
  add_output_options(figure_cmd, figure_args.out);

  VerifyArgs verify_args;
  auto* verify_cmd =
      app.add_subcommand("verify", "Similarity-transform residuals on a dim ladder");
  verify_cmd->add_option("--dim", verify_args.dims, "Fock truncation ladder")
      ->capture_default_str();
  verify_cmd->add_option("--tau", verify_args.tau, "Bath non-Hermiticity")
      ->capture_default_str();
  verify_cmd->add_option("--alpha-s", verify_args.alpha_s, "Qubit non-Hermiticity (composite)")
      ->capture_default_str();
  verify_cmd->add_option("--coupling", verify_args.coupling, "Complex coupling (composite)")
      ->capture_default_str();
  verify_cmd->add_option("--zeta-form", verify_args.zeta_form, "zeta(tau) form")
      ->capture_default_str();
  verify_cmd->add_option("--delta", verify_args.delta, "Bath stiffness scale")
      ->capture_default_str();
  add_output_options(verify_cmd, verify_args.out);

  OracleArgs oracle_args;
  auto* oracle_cmd =
      app.add_subcommand("oracle", "Discrete-mode brute-force check of the continuum integral");
  add_system_flags(oracle_cmd, oracle_args.sys);
  add_env_flags(oracle_cmd, oracle_args.env);
  add_quad_flags(oracle_cmd, oracle_args.quad);
  oracle_cmd->add_option("--n-modes", oracle_args.n_modes, "Mode-count ladder")
      ->capture_default_str();
  oracle_cmd->add_option("--t", oracle_args.t, "Evaluation time")->capture_default_str();
  oracle_cmd->add_option("--omega-max", oracle_args.omega_max,
                         "Discretization range (0 = truncation_factor * cutoff)");
  add_output_options(oracle_cmd, oracle_args.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (lambda_cmd->parsed()) return run_lambda(lambda_args);
    if (herm_cmd->parsed()) return run_hermitian(herm_args);
    if (figure_cmd->parsed()) return run_figure(figure_args);
    if (verify_cmd->parsed()) return run_verify(verify_args);
    if (oracle_cmd->parsed()) return run_oracle(oracle_args);
  } catch (const ptsb::NonConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNonConvergence;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
