#include "ptsb/decoherence.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ptsb/errors.hpp"

namespace ptsb::decoherence {

namespace {
constexpr double kStateTol = 1e-12;

void check_time(double t) {
  if (!std::isfinite(t) || t < 0.0) {
    throw std::domain_error("time must be finite and >= 0, got " + std::to_string(t));
  }
}
}  // namespace

QubitState QubitState::make(complexd rho00, complexd rho01, complexd rho11) {
  QubitState s;
  s.rho00 = rho00;
  s.rho01 = rho01;
  s.rho10 = std::conj(rho01);
  s.rho11 = rho11;
  s.validate();
  return s;
}

void QubitState::validate() const {
  if (std::abs(rho10 - std::conj(rho01)) > kStateTol || std::abs(rho00.imag()) > kStateTol ||
      std::abs(rho11.imag()) > kStateTol) {
    throw std::domain_error("QubitState: density matrix is not Hermitian");
  }
  if (std::abs(rho00 + rho11 - 1.0) > kStateTol) {
    throw std::domain_error("QubitState: trace must be 1");
  }
  const double p0 = rho00.real();
  const double p1 = rho11.real();
  // Positive semidefiniteness of a Hermitian unit-trace 2x2 matrix:
  // nonnegative diagonal plus nonnegative determinant.
  const double det = p0 * p1 - std::norm(rho01);
  if (p0 < -kStateTol || p1 < -kStateTol || det < -kStateTol) {
    throw std::domain_error("QubitState: density matrix is not positive semidefinite");
  }
}

Eigen::Matrix2cd QubitState::matrix() const {
  Eigen::Matrix2cd m;
  m << rho00, rho01, rho10, rho11;
  return m;
}

double QubitState::purity() const {
  return std::norm(rho00) + std::norm(rho11) + 2.0 * std::norm(rho01);
}

double coth(double x) {
  if (!(x > 0.0)) throw std::domain_error("coth: argument must be > 0, got " + std::to_string(x));
  if (x < 1e-3) {
    const double x2 = x * x;
    return 1.0 / x + x / 3.0 - x * x2 / 45.0;
  }
  return 1.0 / std::tanh(x);
}

double thermal_weight(double omega, const model::EnvConfig& env) {
  if (env.zero_temperature) return 1.0;
  return coth(omega / (2.0 * env.temperature));
}

double gamma_of(double omega, double zeta, double delta) {
  if (!std::isfinite(omega) || omega <= 0.0) {
    throw std::domain_error("gamma_of: omega must be positive, got " + std::to_string(omega));
  }
  if (!std::isfinite(zeta) || zeta <= 0.0 || !std::isfinite(delta) || delta <= 0.0) {
    throw std::domain_error("gamma_of: zeta and delta must be positive");
  }
  return std::sqrt(zeta * delta) * omega;
}

complexd mu(double t, const Mode& mode, double e1, double zeta, double delta) {
  check_time(t);
  const double g = gamma_of(mode.omega, zeta, delta);
  const complexd c = mode.coupling;
  const double s_half = std::sin(0.5 * g * t);
  const double s_full = std::sin(g * t);
  const complexd ring = (delta - zeta) * std::conj(c) - (zeta + delta) * c;
  return (e1 * mode.omega / (g * g)) * s_half * s_half * ring -
         complexd(0.0, 1.0) * (e1 / g) * s_full * c;
}

double lambda_discrete(double t, const std::vector<Mode>& modes, double e1, double zeta,
                       double delta, double temperature, bool zero_temperature) {
  check_time(t);
  if (!zero_temperature && (!std::isfinite(temperature) || temperature <= 0.0)) {
    throw std::domain_error("lambda_discrete: temperature must be positive");
  }
  double sum = 0.0;
  for (const Mode& m : modes) {
    const complexd amp = mu(t, m, e1, zeta, delta);
    const double weight = zero_temperature ? 1.0 : coth(m.omega / (2.0 * temperature));
    sum += 2.0 * std::norm(amp) * weight;
  }
  if (!std::isfinite(sum)) throw ptsb::NonFiniteError("lambda_discrete: non-finite sum");
  return sum;
}

double lambda_integrand(double omega, double t, const model::SystemConfig& sys,
                        const model::EnvConfig& env) {
  check_time(t);
  if (!std::isfinite(omega) || omega < 0.0) {
    throw std::domain_error("lambda_integrand: omega must be >= 0, got " + std::to_string(omega));
  }
  const double e1_sq = sys.e1 * sys.e1;
  if (omega == 0.0) {
    // Series limit of the expression below; vanishes at zero temperature.
    if (env.zero_temperature || t == 0.0) return 0.0;
    return 4.0 * e1_sq * env.amp * env.temperature * t * t;
  }
  const double zeta = env.zeta;
  const double delta = env.delta;
  const double root = std::sqrt(zeta * delta);
  const double g = root * omega;
  const double s = std::sin(0.5 * g * t);
  const double s_full = std::sin(g * t);
  const double cth = std::cos(env.theta);
  const double sth = std::sin(env.theta);
  const double c1 = zeta * zeta * cth * cth + delta * delta * sth * sth;
  const double s2 = s * s;
  const double zd2 = zeta * delta;          // root^2
  const double zd4 = zd2 * zd2;             // root^4
  // [ 4 c1 w^2 sin^4 + G^2 sin^2(Gt) + 4 G w (delta-zeta) cos sin * sin^2 sin(Gt) ] / (G^4 w)
  const double bracket = 4.0 * c1 * s2 * s2 / zd4 + s_full * s_full / zd2 +
                         4.0 * (delta - zeta) * cth * sth * s2 * s_full / (zd2 * root);
  const double value = 2.0 * e1_sq * env.amp * std::exp(-omega / env.cutoff) * bracket / omega *
                       thermal_weight(omega, env);
  if (!std::isfinite(value)) {
    throw ptsb::NonFiniteError("lambda_integrand: non-finite value at omega = " +
                               std::to_string(omega));
  }
  return value;
}

quadrature::QuadratureResult lambda_continuum(double t, const model::SystemConfig& sys,
                                              const model::EnvConfig& env,
                                              const quadrature::QuadratureConfig& config) {
  check_time(t);
  env.validate();
  if (t == 0.0 || sys.e1 == 0.0) {
    // Exactly zero: no phase-space loop has opened (t = 0) or the qubit sits
    // at the exceptional point (e1 = 0) where the coupling term vanishes.
    return {0.0, 0.0, 0};
  }
  quadrature::QuadratureConfig cfg = config;
  const double osc_cap = std::min(env.cutoff, model::kPi / (std::sqrt(env.zeta * env.delta) * t)) / 4.0;
  cfg.max_panel_width = (config.max_panel_width > 0.0)
                            ? std::min(config.max_panel_width, osc_cap)
                            : osc_cap;
  return quadrature::integrate_cutoff(
      [&](double w) { return lambda_integrand(w, t, sys, env); }, env.cutoff, cfg);
}

quadrature::QuadratureResult lambda_hermitian(double t, double amp, double cutoff,
                                              double temperature,
                                              const quadrature::QuadratureConfig& config) {
  check_time(t);
  if (!std::isfinite(amp) || amp <= 0.0) {
    throw std::domain_error("lambda_hermitian: amp must be positive");
  }
  if (!std::isfinite(cutoff) || cutoff <= 0.0) {
    throw std::domain_error("lambda_hermitian: cutoff must be positive");
  }
  if (!std::isfinite(temperature) || temperature <= 0.0) {
    throw std::domain_error("lambda_hermitian: temperature must be positive");
  }
  if (t == 0.0) return {0.0, 0.0, 0};
  quadrature::QuadratureConfig cfg = config;
  const double osc_cap = std::min(cutoff, model::kPi / t) / 4.0;
  cfg.max_panel_width = (config.max_panel_width > 0.0)
                            ? std::min(config.max_panel_width, osc_cap)
                            : osc_cap;
  auto integrand = [&](double w) -> double {
    if (w == 0.0) return 4.0 * amp * temperature * t * t;
    const double s = std::sin(0.5 * w * t);
    // 1 - cos(wt) = 2 sin^2(wt/2), cancellation-free for small wt
    return 4.0 * amp * std::exp(-w / cutoff) * 2.0 * s * s / w *
           coth(w / (2.0 * temperature));
  };
  return quadrature::integrate_cutoff(integrand, cutoff, cfg);
}

std::vector<Mode> discretize_spectral_density(double amp, double cutoff, double theta,
                                              int n_modes, double omega_max) {
  if (n_modes < 1) {
    throw std::domain_error("discretize_spectral_density: n_modes must be >= 1");
  }
  if (!std::isfinite(amp) || amp <= 0.0 || !std::isfinite(cutoff) || cutoff <= 0.0) {
    throw std::domain_error("discretize_spectral_density: amp and cutoff must be positive");
  }
  if (!std::isfinite(omega_max) || omega_max <= 0.0) {
    throw std::domain_error("discretize_spectral_density: omega_max must be positive");
  }
  const double dw = omega_max / n_modes;
  const complexd phase = std::polar(1.0, theta);
  std::vector<Mode> modes;
  modes.reserve(n_modes);
  for (int i = 0; i < n_modes; ++i) {
    Mode m;
    m.omega = (i + 0.5) * dw;
    const double c_abs = std::sqrt(amp * m.omega * std::exp(-m.omega / cutoff) * dw);
    m.coupling = c_abs * phase;
    modes.push_back(m);
  }
  return modes;
}

QubitState evolve_qubit(const QubitState& initial, double lambda_value) {
  initial.validate();
  if (!(lambda_value >= 0.0)) {
    throw std::domain_error("evolve_qubit: lambda must be >= 0, got " +
                            std::to_string(lambda_value));
  }
  const double decay = std::exp(-lambda_value);
  QubitState out = initial;
  out.rho01 *= decay;
  out.rho10 = std::conj(out.rho01);
  return out;
}

QubitState dephasing_channel(const QubitState& initial, double p) {
  initial.validate();
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("dephasing_channel: p must lie in [0, 1], got " + std::to_string(p));
  }
  QubitState out = initial;
  out.rho01 *= (1.0 - p);
  out.rho10 = std::conj(out.rho01);
  return out;
}

std::array<Eigen::Matrix2cd, 3> kraus_operators(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("kraus_operators: p must lie in [0, 1], got " + std::to_string(p));
  }
  const double keep = std::sqrt(1.0 - p);
  const double damp = std::sqrt(p);
  Eigen::Matrix2cd k0 = keep * Eigen::Matrix2cd::Identity();
  Eigen::Matrix2cd k1 = Eigen::Matrix2cd::Zero();
  k1(0, 0) = damp;
  Eigen::Matrix2cd k2 = Eigen::Matrix2cd::Zero();
  k2(1, 1) = damp;
  return {k0, k1, k2};
}

}  // namespace ptsb::decoherence
