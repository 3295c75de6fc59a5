#pragma once

// Pure-dephasing decoherence factor Lambda(t) for a non-Hermitian qubit
// coupled to non-Hermitian bosonic modes.  After hermitization the model is
// an exactly solvable spin-boson dephasing problem: populations are frozen
// and the coherence decays as rho01(t) = rho01(0) exp(-Lambda(t)).
//
// Each mode of frequency w contributes a coherent displacement that closes a
// loop of amplitude mu(t) in phase space.  The two sigma_x branches are
// displaced by +mu and -mu (relative displacement 2 mu), so the
// thermal-average contribution per mode is 2 |mu|^2 coth(w / 2T).  The
// continuum limit replaces the mode sum by an integral over the spectral
// density J(w) = amp * w * exp(-w/cutoff).

#include <array>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "ptsb/model.hpp"
#include "ptsb/quadrature.hpp"

namespace ptsb::decoherence {

using complexd = std::complex<double>;

// One discretized bath mode: bare frequency and coupling c = |c| e^{i theta}.
struct Mode {
  double omega = 1.0;
  complexd coupling{0.0, 0.0};
};

// Qubit density matrix.  rho10 is kept explicitly but must equal conj(rho01).
struct QubitState {
  complexd rho00{1.0, 0.0};
  complexd rho01{0.0, 0.0};
  complexd rho10{0.0, 0.0};
  complexd rho11{0.0, 0.0};

  static QubitState make(complexd rho00, complexd rho01, complexd rho11);
  void validate() const;  // hermiticity, unit trace, positivity (tol 1e-12)
  Eigen::Matrix2cd matrix() const;
  double purity() const;  // Tr(rho^2)
};

struct DecoherenceSeries {
  std::vector<double> times;
  std::vector<double> lambda;
  std::vector<double> error_estimates;
};

// coth(x) for x > 0, switching to the Laurent series 1/x + x/3 - x^3/45
// below 1e-3 where 1/tanh(x) loses digits.
double coth(double x);

// Thermal weight coth(omega / 2T) at the bare mode frequency, or 1 when
// env.zero_temperature.
double thermal_weight(double omega, const model::EnvConfig& env);

// Dressed mode frequency sqrt(zeta * delta) * omega.
double gamma_of(double omega, double zeta, double delta);

// Phase-space loop amplitude of one mode at time t:
//   mu = (e1 w / G^2) sin^2(Gt/2) [ (delta - zeta) conj(c) - (zeta + delta) c ]
//        - i (e1 c / G) sin(Gt),  G = gamma_of(w, zeta, delta).
complexd mu(double t, const Mode& mode, double e1, double zeta, double delta);

// Lambda(t) = sum_i 2 |mu_i(t)|^2 coth(w_i / 2T) over discrete modes.
double lambda_discrete(double t, const std::vector<Mode>& modes, double e1, double zeta,
                       double delta, double temperature, bool zero_temperature = false);

// Continuum integrand g(w; t) with J(w) folded in; the w -> 0 limit
// 4 e1^2 amp T t^2 (0 at zero temperature) is handled explicitly.
// Non-negative for all w >= 0 and finite everywhere.
double lambda_integrand(double omega, double t, const model::SystemConfig& sys,
                        const model::EnvConfig& env);

// Lambda(t) = int_0^inf g(w; t) dw via adaptive Gauss-Kronrod.  The initial
// panel width is capped at min(cutoff, pi / (sqrt(zeta*delta) t)) / 4 so the
// rule resolves the sin(sqrt(zeta*delta) w t) oscillation; an explicit
// config.max_panel_width tightens but never loosens that cap.
quadrature::QuadratureResult lambda_continuum(double t, const model::SystemConfig& sys,
                                              const model::EnvConfig& env,
                                              const quadrature::QuadratureConfig& config = {});

// Hermitian reference (alpha_s = 0, tau = 0, any phase):
//   lambda(t) = int_0^inf 4 amp exp(-w/cutoff) (1 - cos wt) / w * coth(w/2T) dw.
quadrature::QuadratureResult lambda_hermitian(double t, double amp, double cutoff,
                                              double temperature,
                                              const quadrature::QuadratureConfig& config = {});

// Midpoint discretization of J(w) on [0, omega_max] into n_modes modes:
// w_i = (i + 1/2) dw, |c_i|^2 = amp * w_i * exp(-w_i/cutoff) * dw, arg c_i = theta.
std::vector<Mode> discretize_spectral_density(double amp, double cutoff, double theta,
                                              int n_modes, double omega_max);

// Coherence decay by a known decoherence factor: off-diagonals shrink by
// exp(-lambda_value), populations untouched.
QubitState evolve_qubit(const QubitState& initial, double lambda_value);

// Phase-damping channel with damping probability p in [0, 1].
QubitState dephasing_channel(const QubitState& initial, double p);

// Kraus operators {sqrt(1-p) I, sqrt(p) |0><0|, sqrt(p) |1><1|}; they satisfy
// sum_k K_k^dag K_k = I exactly and reproduce dephasing_channel.
std::array<Eigen::Matrix2cd, 3> kraus_operators(double p);

}  // namespace ptsb::decoherence
