#pragma once

// Parameter algebra for a non-Hermitian qubit H_S = sigma_x + i*alpha_s*sigma_z
// coupled to a non-Hermitian harmonic bath.  Both pieces are PT-symmetric and,
// inside the unbroken phase, similar to Hermitian operators; this module holds
// the closed-form 2x2 side of that story plus the shared parameter structs.
//
// Units: hbar = 1 and k_B = 1 throughout.

#include <Eigen/Dense>
#include <optional>
#include <string_view>
#include <utility>

namespace ptsb::model {

inline constexpr double kPi = 3.14159265358979323846264338327950288;

// Bath non-Hermiticity enters through zeta(tau) >= 1 with zeta(0) = 1.
// The registry is deliberately small and pluggable.
enum class ZetaForm {
  Quadratic,  // 1 + 4 tau^2
  Quartic,    // 1 + 4 tau^4
  Sextic,     // 1 + 4 tau^6
};

double zeta_of_tau(ZetaForm form, double tau);
std::string_view to_string(ZetaForm form);
ZetaForm zeta_form_from_string(std::string_view name);  // throws std::invalid_argument

// Qubit-side parameters.  alpha_s in [-1, 1] is the non-Hermiticity strength,
// e1 = sqrt(1 - alpha_s^2) the positive eigenvalue of H_S.  vartheta is the
// similarity-transform angle atanh(alpha_s)/2; it diverges as |alpha_s| -> 1,
// so it is unset exactly at the exceptional point.
struct SystemConfig {
  double alpha_s = 0.0;
  double e1 = 1.0;
  std::optional<double> vartheta = 0.0;

  static SystemConfig from_alpha(double alpha_s);  // throws PTBrokenError if |alpha_s| > 1
  static SystemConfig from_e1(double e1);          // e1 in [0, 1], picks alpha_s >= 0

  bool at_exceptional_point() const { return !vartheta.has_value(); }
};

// Bath and coupling parameters shared by the spectral-density routines.
// zeta is always derived from (zeta_form, tau); theta is the common coupling
// phase, stored normalized into [0, 2*pi).
struct EnvConfig {
  double tau = 0.0;
  ZetaForm zeta_form = ZetaForm::Quadratic;
  double zeta = 1.0;
  double delta = 1.0;
  double amp = 1.0;             // spectral-density amplitude A in J(w) = A w exp(-w/cutoff)
  double cutoff = 0.1;
  double temperature = 300.0;
  double theta = kPi / 2;
  bool zero_temperature = false;  // replaces the thermal factor coth(w/2T) by 1

  static EnvConfig make(double tau, ZetaForm form = ZetaForm::Quadratic, double delta = 1.0,
                        double amp = 1.0, double cutoff = 0.1, double temperature = 300.0,
                        double theta = kPi / 2, bool zero_temperature = false);

  void validate() const;  // throws std::domain_error naming the offending field
};

// Eigenvalues (+E1, -E1) of H_S; real in the unbroken phase |alpha_s| <= 1,
// degenerate at zero on the phase boundary.
std::pair<double, double> system_eigenvalues(double alpha_s);

Eigen::Matrix2cd pauli_x();
Eigen::Matrix2cd pauli_y();
Eigen::Matrix2cd pauli_z();

// H_S = sigma_x + i*alpha_s*sigma_z.
Eigen::Matrix2cd system_hamiltonian_nh(double alpha_s);

// eta_S = exp(vartheta*sigma_y) = cosh(vartheta)*I + sinh(vartheta)*sigma_y.
// Requires |alpha_s| < 1; throws PTBrokenError otherwise.
Eigen::Matrix2cd system_similarity(double alpha_s);
Eigen::Matrix2cd system_similarity_inverse(double alpha_s);

// eta_S H_S eta_S^-1, evaluated numerically.  Equals e1*sigma_x up to rounding.
Eigen::Matrix2cd hermitize_system(double alpha_s);

}  // namespace ptsb::model
