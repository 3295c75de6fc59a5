#include "ptsb/fock.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "ptsb/errors.hpp"

namespace ptsb::fock {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

void check_dim(int dim, int min_dim, const char* where) {
  if (dim < min_dim) {
    throw ptsb::DimensionError(std::string(where) + ": dim must be >= " +
                               std::to_string(min_dim) + ", got " + std::to_string(dim));
  }
}

void check_positive(double v, const char* name) {
  if (!std::isfinite(v) || v <= 0.0) {
    throw std::domain_error(std::string(name) + " must be positive, got " + std::to_string(v));
  }
}

// exp(s * p^2 / (m * omega)) via the spectral decomposition of the Hermitian
// exponent; s carries the sign so the inverse reuses the same path.
Matrix exp_momentum_quadratic(int dim, double s, double m, double omega) {
  check_dim(dim, 2, "env_similarity");
  check_positive(m, "m");
  check_positive(omega, "omega");
  if (!std::isfinite(s)) throw std::domain_error("env_similarity: tau must be finite");
  const Matrix exponent = (s / (m * omega)) * (momentum(dim, m, omega) *
                                               momentum(dim, m, omega));
  Eigen::SelfAdjointEigenSolver<Matrix> es(exponent);
  if (es.info() != Eigen::Success) {
    throw ptsb::SingularSimilarityError("env_similarity: eigendecomposition failed");
  }
  Eigen::VectorXd scaled = es.eigenvalues().array().exp();
  if (!scaled.allFinite() || scaled.minCoeff() <= 0.0) {
    throw ptsb::SingularSimilarityError(
        "env_similarity: exp(tau p^2/(m w)) overflowed at dim " + std::to_string(dim));
  }
  return es.eigenvectors() * scaled.asDiagonal() *
         es.eigenvectors().adjoint();
}

}  // namespace

std::pair<Matrix, Matrix> ladder(int dim) {
  check_dim(dim, 2, "ladder");
  Matrix a = Matrix::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(double(n));
  return {a, a.adjoint()};
}

Matrix position(int dim, double m, double omega) {
  check_positive(m, "m");
  check_positive(omega, "omega");
  auto [a, ad] = ladder(dim);
  return (a + ad) / std::sqrt(2.0 * m * omega);
}

Matrix momentum(int dim, double m, double omega) {
  check_positive(m, "m");
  check_positive(omega, "omega");
  auto [a, ad] = ladder(dim);
  return kI * std::sqrt(0.5 * m * omega) * (ad - a);
}

Matrix env_hamiltonian_nh(int dim, double zeta, double delta, double tau, double m, double k) {
  check_dim(dim, 2, "env_hamiltonian_nh");
  check_positive(zeta, "zeta");
  check_positive(delta, "delta");
  check_positive(m, "m");
  check_positive(k, "k");
  if (!std::isfinite(tau)) throw std::domain_error("env_hamiltonian_nh: tau must be finite");
  const double omega = std::sqrt(k / m);
  const Matrix x = position(dim, m, omega);
  const Matrix p = momentum(dim, m, omega);
  return (zeta - 4.0 * delta * tau * tau) / (2.0 * m) * (p * p) +
         0.5 * delta * k * (x * x) + kI * delta * tau * omega * (x * p + p * x);
}

Matrix env_hamiltonian_h(int dim, double zeta, double delta, double m, double k) {
  check_dim(dim, 2, "env_hamiltonian_h");
  check_positive(zeta, "zeta");
  check_positive(delta, "delta");
  check_positive(m, "m");
  check_positive(k, "k");
  const double omega = std::sqrt(k / m);
  const Matrix x = position(dim, m, omega);
  const Matrix p = momentum(dim, m, omega);
  return zeta / (2.0 * m) * (p * p) + 0.5 * delta * k * (x * x);
}

Matrix env_similarity(int dim, double tau, double m, double omega) {
  return exp_momentum_quadratic(dim, tau, m, omega);
}

Matrix env_similarity_inverse(int dim, double tau, double m, double omega) {
  return exp_momentum_quadratic(dim, -tau, m, omega);
}

namespace {

void check_residual_dim(int dim) {
  check_dim(dim, 8, "residual");
  if (dim % 2 != 0) {
    throw ptsb::DimensionError("residual: dim must be even, got " + std::to_string(dim));
  }
}

double block_max_abs(const Matrix& mismatch, const std::vector<int>& trusted) {
  double worst = 0.0;
  for (int i : trusted) {
    for (int j : trusted) {
      worst = std::max(worst, std::abs(mismatch(i, j)));
    }
  }
  return worst;
}

}  // namespace

ResidualReport similarity_residual(int dim, const model::EnvConfig& env, double m, double k) {
  check_residual_dim(dim);
  env.validate();
  check_positive(m, "m");
  check_positive(k, "k");
  const double omega = std::sqrt(k / m);
  const Matrix eta = env_similarity(dim, env.tau, m, omega);
  const Matrix eta_inv = env_similarity_inverse(dim, env.tau, m, omega);
  const Matrix h_nh = env_hamiltonian_nh(dim, env.zeta, env.delta, env.tau, m, k);
  const Matrix h_h = env_hamiltonian_h(dim, env.zeta, env.delta, m, k);
  const Matrix mismatch = eta * h_nh * eta_inv - h_h;

  std::vector<int> trusted(dim / 2);
  for (int i = 0; i < dim / 2; ++i) trusted[i] = i;

  ResidualReport report;
  report.dim = dim;
  report.block_size = dim / 2;
  report.tau = env.tau;
  report.zeta = env.zeta;
  report.delta = env.delta;
  report.residual = block_max_abs(mismatch, trusted);
  return report;
}

ResidualReport composite_residual(int dim, const model::SystemConfig& sys,
                                  const model::EnvConfig& env,
                                  const std::vector<std::complex<double>>& couplings, double m,
                                  double k) {
  check_residual_dim(dim);
  env.validate();
  check_positive(m, "m");
  check_positive(k, "k");
  if (couplings.size() != 1) {
    throw ptsb::DimensionError("composite_residual: exactly one coupling is supported, got " +
                               std::to_string(couplings.size()));
  }
  if (sys.at_exceptional_point()) {
    throw ptsb::PTBrokenError(
        "composite_residual: similarity transform undefined at |alpha_s| = 1");
  }
  const double omega = std::sqrt(k / m);
  auto [a, ad] = ladder(dim);
  const Matrix id_f = Matrix::Identity(dim, dim);
  const Eigen::Matrix2cd id_s = Eigen::Matrix2cd::Identity();

  auto kron = [](const Eigen::Matrix2cd& s, const Matrix& f) {
    Matrix out(2 * f.rows(), 2 * f.cols());
    for (int si = 0; si < 2; ++si) {
      for (int sj = 0; sj < 2; ++sj) {
        out.block(si * f.rows(), sj * f.cols(), f.rows(), f.cols()) = s(si, sj) * f;
      }
    }
    return out;
  };

  const std::complex<double> c = couplings.front();
  const Matrix bath_coupling_nh = c * ad + std::conj(c) * a +
                                  env.tau * (c + std::conj(c)) * (a - ad);
  const Matrix bath_coupling_h = c * ad + std::conj(c) * a;

  const Eigen::Matrix2cd h_s_nh = model::system_hamiltonian_nh(sys.alpha_s);
  const Matrix h_nh = kron(h_s_nh, id_f) +
                      kron(id_s, env_hamiltonian_nh(dim, env.zeta, env.delta, env.tau, m, k)) +
                      kron(h_s_nh, bath_coupling_nh);
  const Matrix h_h = sys.e1 * kron(model::pauli_x(), id_f + bath_coupling_h) +
                     kron(id_s, env_hamiltonian_h(dim, env.zeta, env.delta, m, k));

  const Matrix eta = kron(model::system_similarity(sys.alpha_s),
                          env_similarity(dim, env.tau, m, omega));
  const Matrix eta_inv = kron(model::system_similarity_inverse(sys.alpha_s),
                              env_similarity_inverse(dim, env.tau, m, omega));
  const Matrix mismatch = eta * h_nh * eta_inv - h_h;

  std::vector<int> trusted;
  trusted.reserve(dim);
  for (int s = 0; s < 2; ++s) {
    for (int n = 0; n < dim / 2; ++n) trusted.push_back(s * dim + n);
  }

  ResidualReport report;
  report.dim = dim;
  report.block_size = dim / 2;
  report.tau = env.tau;
  report.zeta = env.zeta;
  report.delta = env.delta;
  report.residual = block_max_abs(mismatch, trusted);
  return report;
}

}  // namespace ptsb::fock
