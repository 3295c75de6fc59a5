#include "ptsb/experiments.hpp"

#include <cmath>
#include <stdexcept>

#include "ptsb/parallel.hpp"

namespace ptsb::experiments {

namespace {

std::string trim_number(double v) {
  std::string s = std::to_string(v);
  while (s.find('.') != std::string::npos && (s.back() == '0' || s.back() == '.')) {
    const char last = s.back();
    s.pop_back();
    if (last == '.') break;
  }
  return s;
}

std::string theta_label(double theta) {
  const double pi = model::kPi;
  if (std::abs(theta - pi / 2) < 1e-12) return "pi/2";
  if (std::abs(theta - pi / 3) < 1e-12) return "pi/3";
  if (std::abs(theta - pi) < 1e-12) return "pi";
  return trim_number(theta);
}

SweepResult sweep_from_series(std::string name, std::string label, std::string axis,
                              std::vector<double> axis_values, DecoherenceSeries series) {
  SweepResult result;
  result.name = std::move(name);
  result.label = std::move(label);
  result.axis = std::move(axis);
  result.axis_values = std::move(axis_values);
  result.lambda = std::move(series.lambda);
  result.error_estimates = std::move(series.error_estimates);
  return result;
}

}  // namespace

void Scenario::validate() const {
  env.validate();
  if (time_grid.empty()) throw std::domain_error("Scenario: time grid is empty");
  if (time_grid.front() != 0.0) throw std::domain_error("Scenario: time grid must start at 0");
  for (std::size_t i = 1; i < time_grid.size(); ++i) {
    if (!(time_grid[i] > time_grid[i - 1])) {
      throw std::domain_error("Scenario: time grid must be strictly increasing");
    }
  }
}

std::vector<double> uniform_grid(double t_max, int n_points) {
  if (!std::isfinite(t_max) || t_max <= 0.0) {
    throw std::domain_error("uniform_grid: t_max must be positive");
  }
  if (n_points < 2) throw std::domain_error("uniform_grid: need at least 2 points");
  std::vector<double> grid(n_points);
  for (int i = 0; i < n_points; ++i) {
    grid[i] = t_max * static_cast<double>(i) / static_cast<double>(n_points - 1);
  }
  grid.front() = 0.0;
  return grid;
}

DecoherenceSeries run_scenario(const Scenario& scenario,
                               const quadrature::QuadratureConfig& config, int threads) {
  scenario.validate();
  DecoherenceSeries series;
  series.times = scenario.time_grid;
  series.lambda.resize(series.times.size());
  series.error_estimates.resize(series.times.size());
  parallel_for(series.times.size(), threads, [&](std::size_t i) {
    const auto result =
        decoherence::lambda_continuum(series.times[i], scenario.sys, scenario.env, config);
    series.lambda[i] = result.value;
    series.error_estimates[i] = result.abs_error_estimate;
  });
  return series;
}

std::vector<Scenario> fig1_scenarios(double theta, double t_max, int n_points) {
  const std::vector<double> grid = uniform_grid(t_max, n_points);
  struct Combo { double e1; double tau; const char* label; };
  const Combo combos[] = {
      {1.0, 0.0, "Hermitian system, Hermitian environment"},
      {0.5, 0.0, "non-Hermitian system, Hermitian environment"},
      {1.0, 2.0, "Hermitian system, non-Hermitian environment"},
      {0.5, 2.0, "non-Hermitian system and environment"},
  };
  std::vector<Scenario> scenarios;
  for (const auto& [e1, tau, label] : combos) {
    Scenario s;
    s.name = "E1=" + trim_number(e1) + "_tau=" + trim_number(tau);
    s.label = label;
    s.sys = model::SystemConfig::from_e1(e1);
    s.env = model::EnvConfig::make(tau, model::ZetaForm::Quadratic, 1.0, 1.0, 0.1, 300.0, theta);
    s.time_grid = grid;
    scenarios.push_back(std::move(s));
  }
  return scenarios;
}

std::vector<SweepResult> fig1(double theta, double t_max, int n_points,
                              const quadrature::QuadratureConfig& config, int threads) {
  std::vector<SweepResult> out;
  for (const Scenario& s : fig1_scenarios(theta, t_max, n_points)) {
    out.push_back(sweep_from_series(s.name, s.label, "t", s.time_grid,
                                    run_scenario(s, config, threads)));
  }
  return out;
}

std::vector<SweepResult> fig2(const std::vector<model::ZetaForm>& forms, double t_max,
                              int n_points, const quadrature::QuadratureConfig& config,
                              int threads) {
  const std::vector<double> grid = uniform_grid(t_max, n_points);
  std::vector<SweepResult> out;
  for (model::ZetaForm form : forms) {
    Scenario s;
    s.name = std::string("zeta=") + std::string(model::to_string(form));
    s.label = std::string(model::to_string(form)) + " zeta(tau)";
    s.sys = model::SystemConfig::from_e1(0.5);
    s.env = model::EnvConfig::make(2.0, form);
    s.time_grid = grid;
    out.push_back(sweep_from_series(s.name, s.label, "t", grid, run_scenario(s, config, threads)));
  }
  return out;
}

std::vector<SweepResult> fig3(const std::vector<double>& alpha_values, double t_max, int n_points,
                              const quadrature::QuadratureConfig& config, int threads) {
  const std::vector<double> grid = uniform_grid(t_max, n_points);
  std::vector<SweepResult> out;
  for (double alpha : alpha_values) {
    Scenario s;
    s.name = "alpha=" + trim_number(alpha);
    s.label = "alpha_s = " + trim_number(alpha);
    s.sys = model::SystemConfig::from_alpha(alpha);
    s.env = model::EnvConfig::make(0.0);
    s.time_grid = grid;
    out.push_back(sweep_from_series(s.name, s.label, "t", grid, run_scenario(s, config, threads)));
  }
  return out;
}

std::vector<SweepResult> fig4(const std::vector<double>& tau_values, double t_max, int n_points,
                              const quadrature::QuadratureConfig& config, int threads) {
  const std::vector<double> grid = uniform_grid(t_max, n_points);
  std::vector<SweepResult> out;
  for (double tau : tau_values) {
    Scenario s;
    s.name = "tau=" + trim_number(tau);
    s.label = "tau = " + trim_number(tau);
    s.sys = model::SystemConfig::from_e1(1.0);
    s.env = model::EnvConfig::make(tau);
    s.time_grid = grid;
    out.push_back(sweep_from_series(s.name, s.label, "t", grid, run_scenario(s, config, threads)));
  }
  return out;
}

std::vector<SweepResult> fig5(const std::vector<double>& tau_grid,
                              const std::vector<double>& theta_values, double t_fixed,
                              const quadrature::QuadratureConfig& config, int threads) {
  if (!std::isfinite(t_fixed) || t_fixed <= 0.0) {
    throw std::domain_error("fig5: t_fixed must be positive");
  }
  if (tau_grid.empty()) throw std::domain_error("fig5: tau grid is empty");
  std::vector<SweepResult> out;
  for (double theta : theta_values) {
    SweepResult result;
    result.name = "theta=" + theta_label(theta);
    result.label = "theta = " + theta_label(theta);
    result.axis = "tau";
    result.axis_values = tau_grid;
    result.lambda.resize(tau_grid.size());
    result.error_estimates.resize(tau_grid.size());
    const model::SystemConfig sys = model::SystemConfig::from_e1(1.0);
    parallel_for(tau_grid.size(), threads, [&](std::size_t i) {
      const auto env = model::EnvConfig::make(tau_grid[i], model::ZetaForm::Quadratic, 1.0, 1.0,
                                              0.1, 300.0, theta);
      const auto r = decoherence::lambda_continuum(t_fixed, sys, env, config);
      result.lambda[i] = r.value;
      result.error_estimates[i] = r.abs_error_estimate;
    });
    out.push_back(std::move(result));
  }
  return out;
}

}  // namespace ptsb::experiments
