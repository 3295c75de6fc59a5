// Acceptance gate: every release-blocking property on one pass/fail line
// each.  Run with no arguments for the full gate or with a criterion number
// (1-10) for a single check.  Exit code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ptsb/decoherence.hpp"
#include "ptsb/fock.hpp"
#include "ptsb/model.hpp"
#include "ptsb/quadrature.hpp"

using namespace ptsb;
using model::EnvConfig;
using model::SystemConfig;
using model::ZetaForm;

namespace {

constexpr double kPi = model::kPi;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
  void note(const std::string& what) {
    if (detail.empty()) detail = what;
  }
};

std::string eng(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

EnvConfig env_at(double tau, double theta = kPi / 2) {
  return EnvConfig::make(tau, ZetaForm::Quadratic, 1.0, 1.0, 0.1, 300.0, theta);
}

double lam(double t, double e1, double tau, double theta = kPi / 2) {
  return decoherence::lambda_continuum(t, SystemConfig::from_e1(e1), env_at(tau, theta)).value;
}

// 1. continuum Lambda reduces to the Hermitian reference when both
//    non-Hermiticity knobs are off, within 1e-8 relative over t = 0.5..10.
Outcome hermitian_limit() {
  Outcome out;
  double worst = 0.0;
  for (int i = 1; i <= 20; ++i) {
    const double t = 0.5 * i;
    const double full = lam(t, 1.0, 0.0);
    const double ref = decoherence::lambda_hermitian(t, 1.0, 0.1, 300.0).value;
    worst = std::max(worst, std::abs(full - ref) / ref);
  }
  if (worst > 1e-8) out.fail("max rel dev " + eng(worst) + " > 1e-8");
  out.note("max rel dev " + eng(worst));
  return out;
}

// 2. brute-force mode sum approaches the continuum integral: deviation
//    decreasing over n = 500..4000 and below 1e-3 at n = 4000.
Outcome discrete_oracle() {
  Outcome out;
  const double t = 10.0;
  const double cont = lam(t, 0.5, 2.0);
  double prev = 1e300, last = 0.0;
  for (int n : {500, 1000, 2000, 4000}) {
    const auto modes = decoherence::discretize_spectral_density(1.0, 0.1, kPi / 2, n, 6.0);
    const double disc = decoherence::lambda_discrete(t, modes, 0.5, 17.0, 1.0, 300.0);
    last = std::abs(disc - cont) / cont;
    if (last >= prev) out.fail("deviation not decreasing at n = " + std::to_string(n));
    prev = last;
  }
  if (last > 1e-3) out.fail("final deviation " + eng(last) + " > 1e-3");
  out.note("n = 4000 deviation " + eng(last));
  return out;
}

// 3. exceptional point: alpha_s = 1 kills the decoherence factor for all t.
Outcome exceptional_point() {
  Outcome out;
  const auto ep = SystemConfig::from_alpha(1.0);
  const auto env = env_at(2.0);
  double worst = 0.0;
  for (int i = 0; i <= 60; ++i) {
    worst = std::max(worst,
                     std::abs(decoherence::lambda_continuum(0.5 * i, ep, env).value));
  }
  if (worst > 1e-15) out.fail("max |Lambda| " + eng(worst) + " > 1e-15");
  out.note("max |Lambda| " + eng(worst));
  return out;
}

// 4. coupling phase is irrelevant for a Hermitian bath: theta sweep at
//    tau = 0 collapses to one value within 1e-9 absolute.
Outcome theta_independence() {
  Outcome out;
  const double base = lam(10.0, 1.0, 0.0, 0.0);
  double worst = 0.0;
  for (int i = 1; i <= 12; ++i) worst = std::max(worst, std::abs(lam(10.0, 1.0, 0.0, i * kPi / 6) - base));
  if (worst > 1e-9) out.fail("max abs dev " + eng(worst) + " > 1e-9");
  out.note("max abs dev " + eng(worst));
  return out;
}

// 5. Lambda scales as E1^2 = 1 - alpha_s^2 when only the qubit is tuned.
Outcome e1_scaling() {
  Outcome out;
  double worst = 0.0;
  for (double t : {1.0, 5.0, 10.0}) {
    const double base = lam(t, 1.0, 0.0);
    for (double alpha : {0.3, 0.6, 0.9}) {
      const double expect = 1.0 - alpha * alpha;
      const double ratio = lam(t, std::sqrt(expect), 0.0) / base;
      worst = std::max(worst, std::abs(ratio - expect) / expect);
    }
  }
  if (worst > 1e-8) out.fail("max rel dev " + eng(worst) + " > 1e-8");
  out.note("max rel dev " + eng(worst));
  return out;
}

// 6. at theta = pi/2, t = 10 the doubly non-Hermitian corner decoheres least.
Outcome fig1_ordering() {
  Outcome out;
  const double both = lam(10.0, 0.5, 2.0);
  const double herm = lam(10.0, 1.0, 0.0);
  const double sys_only = lam(10.0, 0.5, 0.0);
  const double env_only = lam(10.0, 1.0, 2.0);
  if (!(both < herm && both < sys_only && both < env_only)) {
    out.fail("Lambda(E1=0.5, tau=2) = " + eng(both) + " is not the minimum");
  }
  out.note("min " + eng(both) + " vs " + eng(sys_only) + ", " + eng(env_only) + ", " +
           eng(herm));
  return out;
}

// 7. tau sweep at E1 = 1, t = 10: theta = pi/2 curve non-increasing, and
//    pointwise at or below the pi/3 and pi curves from tau = 1 on.
Outcome fig5_trend() {
  Outcome out;
  std::vector<double> half, third, full;
  for (int i = 0; i <= 8; ++i) {
    const double tau = 0.5 * i;
    half.push_back(lam(10.0, 1.0, tau, kPi / 2));
    third.push_back(lam(10.0, 1.0, tau, kPi / 3));
    full.push_back(lam(10.0, 1.0, tau, kPi));
  }
  for (std::size_t i = 1; i < half.size(); ++i) {
    if (half[i] > half[i - 1]) out.fail("pi/2 curve rises at tau = " + eng(0.5 * i));
  }
  for (std::size_t i = 2; i < half.size(); ++i) {  // tau >= 1
    const double tau = 0.5 * i;
    if (half[i] > third[i]) {
      out.fail("at tau = " + eng(tau) + ": pi/2 curve " + eng(half[i]) + " > pi/3 curve " +
               eng(third[i]));
    }
    if (half[i] > full[i]) {
      out.fail("at tau = " + eng(tau) + ": pi/2 curve " + eng(half[i]) + " > pi curve " +
               eng(full[i]));
    }
  }
  out.note("pi/2 curve " + eng(half.front()) + " -> " + eng(half.back()));
  return out;
}

// 8. truncated-space similarity checks converge: residuals fall with dim and
//    clear 1e-6 at dim = 80 for both the bath-only and composite transforms.
Outcome similarity_verification() {
  Outcome out;
  const auto env = EnvConfig::make(0.1, ZetaForm::Quadratic);
  const auto sys = SystemConfig::from_alpha(0.6);
  double prev = 1e300, last = 0.0;
  for (int dim : {20, 40, 80}) {
    last = fock::similarity_residual(dim, env).residual;
    if (last >= prev) out.fail("bath residual not decreasing at dim " + std::to_string(dim));
    prev = last;
  }
  if (last > 1e-6) out.fail("bath residual " + eng(last) + " > 1e-6 at dim 80");
  const double bath_final = last;
  prev = 1e300;
  for (int dim : {20, 40, 80}) {
    last = fock::composite_residual(dim, sys, env, {{0.1, 0.0}}).residual;
    if (last >= prev) {
      out.fail("composite residual not decreasing at dim " + std::to_string(dim));
    }
    prev = last;
  }
  if (last > 1e-6) out.fail("composite residual " + eng(last) + " > 1e-6 at dim 80");
  out.note("dim-80 residuals " + eng(bath_final) + " (bath), " + eng(last) + " (composite)");
  return out;
}

// 9. channel algebra: Kraus completeness, the Lambda/e^-Lambda channel
//    equivalence, and the iterated small-step limit.
Outcome channel_identities() {
  Outcome out;
  double kraus_worst = 0.0;
  for (double p : {0.0, 0.1, 0.37, 0.62, 0.9, 1.0}) {
    Eigen::Matrix2cd sum = Eigen::Matrix2cd::Zero();
    for (const auto& k : decoherence::kraus_operators(p)) sum += k.adjoint() * k;
    kraus_worst =
        std::max(kraus_worst, (sum - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff());
  }
  if (kraus_worst > 1e-15) out.fail("Kraus completeness dev " + eng(kraus_worst) + " > 1e-15");

  const auto rho = decoherence::QubitState::make(0.4, {0.3, -0.2}, 0.6);
  double equiv_worst = 0.0;
  for (double l : {0.0, 0.2, 0.7, 2.0, 6.0}) {
    const auto a = decoherence::evolve_qubit(rho, l);
    const auto b = decoherence::dephasing_channel(rho, 1.0 - std::exp(-l));
    equiv_worst = std::max(equiv_worst, (a.matrix() - b.matrix()).cwiseAbs().maxCoeff());
  }
  if (equiv_worst > 1e-14) out.fail("channel equivalence dev " + eng(equiv_worst) + " > 1e-14");

  const int n = 100000;
  auto state = rho;
  for (int i = 0; i < n; ++i) state = decoherence::dephasing_channel(state, 1.0 / n);
  const double factor = std::abs(state.rho01) / std::abs(rho.rho01);
  const double iter_dev = std::abs(factor - std::exp(-1.0));
  if (iter_dev > 1e-4) out.fail("iterated channel dev " + eng(iter_dev) + " > 1e-4");

  out.note("devs " + eng(kraus_worst) + ", " + eng(equiv_worst) + ", " + eng(iter_dev));
  return out;
}

// 10. quadrature against exact integrals of the cutoff family.
Outcome quadrature_selftest() {
  Outcome out;
  const std::complex<double> pole(10.0, -2.0);
  const struct {
    const char* name;
    std::function<double(double)> f;
    double exact;
  } cases[] = {
      {"exp", [](double w) { return std::exp(-10.0 * w); }, 0.1},
      {"w exp", [](double w) { return w * std::exp(-10.0 * w); }, 0.01},
      {"w^2 exp sin^2",
       [](double w) { return w * w * std::exp(-10.0 * w) * std::sin(w) * std::sin(w); },
       1e-3 - (1.0 / (pole * pole * pole)).real()},
  };
  double worst = 0.0;
  for (const auto& c : cases) {
    const double dev = std::abs(quadrature::integrate_cutoff(c.f, 0.1).value - c.exact);
    worst = std::max(worst, dev);
    if (dev > 1e-12) out.fail(std::string(c.name) + " dev " + eng(dev) + " > 1e-12");
  }
  out.note("max abs dev " + eng(worst));
  return out;
}

struct Criterion {
  int id;
  const char* title;
  Outcome (*run)();
  double time_limit_s;  // 0 = untimed
};

const Criterion kCriteria[] = {
    {1, "Hermitian-limit identity", hermitian_limit, 10.0},
    {2, "discrete-mode oracle equivalence", discrete_oracle, 30.0},
    {3, "exceptional point kills decoherence", exceptional_point, 0.0},
    {4, "theta independence for a Hermitian bath", theta_independence, 0.0},
    {5, "E1-squared scaling", e1_scaling, 0.0},
    {6, "doubly non-Hermitian case decoheres least", fig1_ordering, 0.0},
    {7, "tau sweep trend and phase ordering", fig5_trend, 0.0},
    {8, "similarity residual convergence", similarity_verification, 20.0},
    {9, "channel identities", channel_identities, 0.0},
    {10, "quadrature self-test", quadrature_selftest, 0.0},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > 10) {
      std::fprintf(stderr, "usage: %s [criterion 1-10]\n", argv[0]);
      return 64;
    }
  }

  int failures = 0;
  for (const auto& c : kCriteria) {
    if (only != 0 && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome out = c.run();
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0.0 && elapsed > c.time_limit_s) {
      out.fail("runtime " + eng(elapsed) + " s over the " + eng(c.time_limit_s) + " s budget");
    }
    std::printf("%s criterion %2d: %s (%s) [%.2f s]\n", out.pass ? "PASS" : "FAIL", c.id,
                c.title, out.detail.c_str(), elapsed);
    if (!out.pass) ++failures;
  }
  return failures;
}
