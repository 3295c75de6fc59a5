#pragma once

// Named parameter studies over the decoherence factor.  Each study builds a
// set of scenarios, runs lambda_continuum over a grid, and returns labelled
// sweep results ready for table output.
//
// Shared defaults across studies: amp = 1, cutoff = 0.1, temperature = 300,
// delta = 1, quadratic zeta(tau).

#include <string>
#include <utility>
#include <vector>

#include "ptsb/decoherence.hpp"
#include "ptsb/model.hpp"
#include "ptsb/quadrature.hpp"

namespace ptsb::experiments {

using decoherence::DecoherenceSeries;

// One labelled (system, environment, time-grid) combination.  name is a
// short machine-friendly key; label is the human-readable description.
struct Scenario {
  std::string name;
  std::string label;
  model::SystemConfig sys;
  model::EnvConfig env;
  std::vector<double> time_grid;

  void validate() const;  // grid non-empty, starting at 0, strictly increasing
};

// One labelled curve: Lambda over an axis (time for the temporal studies,
// tau for the non-Hermiticity sweep).
struct SweepResult {
  std::string name;
  std::string label;
  std::string axis;  // "t" or "tau"
  std::vector<double> axis_values;
  std::vector<double> lambda;
  std::vector<double> error_estimates;
};

// n_points values spanning [0, t_max], first point exactly 0.
std::vector<double> uniform_grid(double t_max, int n_points);

DecoherenceSeries run_scenario(const Scenario& scenario,
                               const quadrature::QuadratureConfig& config = {}, int threads = 1);

// Temporal decoherence for the four Hermitian/non-Hermitian combinations
// (e1, tau) in {(1,0), (0.5,0), (1,2), (0.5,2)} at fixed coupling phase.
std::vector<Scenario> fig1_scenarios(double theta, double t_max, int n_points);
std::vector<SweepResult> fig1(double theta, double t_max, int n_points,
                              const quadrature::QuadratureConfig& config = {}, int threads = 1);

// Temporal decoherence across zeta(tau) registry forms at e1 = 0.5, tau = 2.
std::vector<SweepResult> fig2(const std::vector<model::ZetaForm>& forms, double t_max,
                              int n_points, const quadrature::QuadratureConfig& config = {},
                              int threads = 1);

// Temporal decoherence across system non-Hermiticity (Hermitian bath):
// alpha_s in {0, 0.3, 0.6, 0.9, 1}, tau = 0.
std::vector<SweepResult> fig3(const std::vector<double>& alpha_values, double t_max, int n_points,
                              const quadrature::QuadratureConfig& config = {}, int threads = 1);

// Temporal decoherence across environment non-Hermiticity at e1 = 1:
// tau in {0, 1, 2, 3}.
std::vector<SweepResult> fig4(const std::vector<double>& tau_values, double t_max, int n_points,
                              const quadrature::QuadratureConfig& config = {}, int threads = 1);

// Lambda at fixed t = 10 versus tau (0 to 4) for theta in {pi/2, pi/3, pi},
// e1 = 1.  One SweepResult per theta, axis = "tau".
std::vector<SweepResult> fig5(const std::vector<double>& tau_grid,
                              const std::vector<double>& theta_values, double t_fixed = 10.0,
                              const quadrature::QuadratureConfig& config = {}, int threads = 1);

}  // namespace ptsb::experiments
