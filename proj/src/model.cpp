#include "ptsb/model.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "ptsb/errors.hpp"

namespace ptsb::model {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};
}

double zeta_of_tau(ZetaForm form, double tau) {
  if (!std::isfinite(tau)) throw std::domain_error("zeta_of_tau: tau must be finite");
  const double t2 = tau * tau;
  switch (form) {
    case ZetaForm::Quadratic: return 1.0 + 4.0 * t2;
    case ZetaForm::Quartic: return 1.0 + 4.0 * t2 * t2;
    case ZetaForm::Sextic: return 1.0 + 4.0 * t2 * t2 * t2;
  }
  throw std::invalid_argument("zeta_of_tau: unknown form");
}

std::string_view to_string(ZetaForm form) {
  switch (form) {
    case ZetaForm::Quadratic: return "quadratic";
    case ZetaForm::Quartic: return "quartic";
    case ZetaForm::Sextic: return "sextic";
  }
  return "unknown";
}

ZetaForm zeta_form_from_string(std::string_view name) {
  if (name == "quadratic") return ZetaForm::Quadratic;
  if (name == "quartic") return ZetaForm::Quartic;
  if (name == "sextic") return ZetaForm::Sextic;
  throw std::invalid_argument("zeta form must be one of quadratic|quartic|sextic, got '" +
                              std::string(name) + "'");
}

SystemConfig SystemConfig::from_alpha(double alpha_s) {
  if (!std::isfinite(alpha_s) || std::abs(alpha_s) > 1.0) {
    throw ptsb::PTBrokenError("alpha_s must lie in [-1, 1], got " + std::to_string(alpha_s));
  }
  SystemConfig cfg;
  cfg.alpha_s = alpha_s;
  cfg.e1 = std::sqrt((1.0 - alpha_s) * (1.0 + alpha_s));
  if (std::abs(alpha_s) < 1.0) {
    cfg.vartheta = 0.5 * std::atanh(alpha_s);
  } else {
    cfg.vartheta.reset();
  }
  return cfg;
}

SystemConfig SystemConfig::from_e1(double e1) {
  if (!std::isfinite(e1) || e1 < 0.0 || e1 > 1.0) {
    throw ptsb::PTBrokenError("e1 must lie in [0, 1], got " + std::to_string(e1));
  }
  SystemConfig cfg;
  cfg.e1 = e1;
  cfg.alpha_s = std::sqrt((1.0 - e1) * (1.0 + e1));
  if (e1 > 0.0) {
    cfg.vartheta = 0.5 * std::atanh(cfg.alpha_s);
  } else {
    cfg.vartheta.reset();
  }
  return cfg;
}

EnvConfig EnvConfig::make(double tau, ZetaForm form, double delta, double amp, double cutoff,
                          double temperature, double theta, bool zero_temperature) {
  EnvConfig cfg;
  cfg.tau = tau;
  cfg.zeta_form = form;
  cfg.zeta = zeta_of_tau(form, tau);
  cfg.delta = delta;
  cfg.amp = amp;
  cfg.cutoff = cutoff;
  cfg.temperature = temperature;
  cfg.zero_temperature = zero_temperature;
  if (!std::isfinite(theta)) throw std::domain_error("theta must be finite");
  double th = std::fmod(theta, 2.0 * kPi);
  if (th < 0.0) th += 2.0 * kPi;
  cfg.theta = th;
  cfg.validate();
  return cfg;
}

void EnvConfig::validate() const {
  auto positive = [](double v, const char* name) {
    if (!std::isfinite(v) || v <= 0.0) {
      throw std::domain_error(std::string(name) + " must be positive and finite, got " +
                              std::to_string(v));
    }
  };
  if (!std::isfinite(tau)) throw std::domain_error("tau must be finite");
  positive(zeta, "zeta");
  positive(delta, "delta");
  positive(amp, "amp");
  positive(cutoff, "cutoff");
  if (!zero_temperature) positive(temperature, "temperature");
  if (!std::isfinite(theta) || theta < 0.0 || theta >= 2.0 * kPi) {
    throw std::domain_error("theta must lie in [0, 2*pi), got " + std::to_string(theta));
  }
}

std::pair<double, double> system_eigenvalues(double alpha_s) {
  if (!std::isfinite(alpha_s) || std::abs(alpha_s) > 1.0) {
    throw ptsb::PTBrokenError("system_eigenvalues: spectrum is complex for |alpha_s| > 1, got " +
                              std::to_string(alpha_s));
  }
  const double e1 = std::sqrt((1.0 - alpha_s) * (1.0 + alpha_s));
  return {e1, -e1};
}

Eigen::Matrix2cd pauli_x() {
  Eigen::Matrix2cd m;
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

Eigen::Matrix2cd pauli_y() {
  Eigen::Matrix2cd m;
  m << 0.0, -kI, kI, 0.0;
  return m;
}

Eigen::Matrix2cd pauli_z() {
  Eigen::Matrix2cd m;
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

Eigen::Matrix2cd system_hamiltonian_nh(double alpha_s) {
  return pauli_x() + kI * alpha_s * pauli_z();
}

Eigen::Matrix2cd system_similarity(double alpha_s) {
  if (!std::isfinite(alpha_s) || std::abs(alpha_s) >= 1.0) {
    throw ptsb::PTBrokenError("system_similarity: transform exists only for |alpha_s| < 1, got " +
                              std::to_string(alpha_s));
  }
  const double vt = 0.5 * std::atanh(alpha_s);
  return std::cosh(vt) * Eigen::Matrix2cd::Identity() + std::sinh(vt) * pauli_y();
}

Eigen::Matrix2cd system_similarity_inverse(double alpha_s) {
  return system_similarity(alpha_s).inverse();
}

Eigen::Matrix2cd hermitize_system(double alpha_s) {
  const Eigen::Matrix2cd eta = system_similarity(alpha_s);
  return eta * system_hamiltonian_nh(alpha_s) * eta.inverse();
}

}  // namespace ptsb::model
