#pragma once

// Truncated-Fock-space verification of the similarity structure.  The bath
//
//   H_E^nh = (zeta - 4 delta tau^2) p^2 / 2m + (delta/2) k x^2
//            + i delta tau w (xp + px),            w = sqrt(k/m),
//
// is non-Hermitian but similar to the Hermitian
//
//   H_E = zeta p^2 / 2m + (delta/2) k x^2
//
// under eta_E = exp(tau p^2 / (m w)).  Truncation to dim Fock states breaks
// the identity near the edge, so residuals are measured on a trusted block
// of the lowest dim/2 states only; they must vanish as dim grows.
//
// composite_residual plays the same game for the full qubit + single-mode
// Hamiltonian: eta = eta_S (x) eta_E maps
//   H^nh = H_S^nh (x) 1 + 1 (x) H_E^nh + H_S^nh (x) B,
//   B = c a^dag + conj(c) a + tau (c + conj(c)) (a - a^dag),
// onto e1 [ sigma_x (x) (1 + c a^dag + conj(c) a) ] + 1 (x) H_E.

#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "ptsb/model.hpp"

namespace ptsb::fock {

using Matrix = Eigen::MatrixXcd;

struct ResidualReport {
  int dim = 0;         // full truncation dimension
  int block_size = 0;  // trusted-block size (dim / 2)
  double tau = 0.0;
  double zeta = 1.0;
  double delta = 1.0;
  double residual = 0.0;  // max abs entry of the mismatch on the trusted block
};

// Annihilation / creation pair on a dim-dimensional truncation; dim >= 2.
std::pair<Matrix, Matrix> ladder(int dim);

// x = (a + a^dag) / sqrt(2 m w),  p = i sqrt(m w / 2) (a^dag - a).
Matrix position(int dim, double m, double omega);
Matrix momentum(int dim, double m, double omega);

Matrix env_hamiltonian_nh(int dim, double zeta, double delta, double tau, double m = 1.0,
                          double k = 1.0);
Matrix env_hamiltonian_h(int dim, double zeta, double delta, double m = 1.0, double k = 1.0);

// exp(tau p^2 / (m w)), built by diagonalizing the Hermitian exponent.
// Throws SingularSimilarityError if exponentiation overflows.
Matrix env_similarity(int dim, double tau, double m = 1.0, double omega = 1.0);
Matrix env_similarity_inverse(int dim, double tau, double m = 1.0, double omega = 1.0);

// max abs entry of (eta_E H_E^nh eta_E^-1 - H_E) restricted to the trusted
// block of the lowest dim/2 Fock states; dim >= 8 and even.
ResidualReport similarity_residual(int dim, const model::EnvConfig& env, double m = 1.0,
                                   double k = 1.0);

// Same residual for the composite qubit + mode model under eta_S (x) eta_E.
// Exactly one coupling is supported (the tensor dimension explodes beyond
// one mode and one mode already exercises the full algebra).  Trusted block:
// Fock index < dim/2 in both spin sectors.  Requires |alpha_s| < 1.
ResidualReport composite_residual(int dim, const model::SystemConfig& sys,
                                  const model::EnvConfig& env,
                                  const std::vector<std::complex<double>>& couplings,
                                  double m = 1.0, double k = 1.0);

}  // namespace ptsb::fock
