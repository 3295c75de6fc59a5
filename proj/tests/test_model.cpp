#include <cmath>
#include <complex>
#include <stdexcept>

#include "doctest.h"

#include "ptsb/errors.hpp"
#include "ptsb/model.hpp"

using namespace ptsb;
using namespace ptsb::model;

namespace {
double max_abs(const Eigen::Matrix2cd& m) { return m.cwiseAbs().maxCoeff(); }
}  // namespace

TEST_CASE("system_eigenvalues closed form") {
  auto [p0, m0] = system_eigenvalues(0.0);
  CHECK(p0 == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(m0 == doctest::Approx(-1.0).epsilon(1e-15));

  auto [p1, m1] = system_eigenvalues(1.0);  // exceptional point: coalesced at zero
  CHECK(p1 == 0.0);
  CHECK(m1 == 0.0);

  auto [p, m] = system_eigenvalues(0.6);
  CHECK(p == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(m == doctest::Approx(-0.8).epsilon(1e-15));

  SUBCASE("pair is symmetric about zero (traceless H)") {
    for (double a : {-1.0, -0.73, -0.2, 0.0, 0.31, 0.99, 1.0}) {
      auto [e1, e2] = system_eigenvalues(a);
      CHECK(e1 + e2 == 0.0);
      CHECK(e1 >= 0.0);
    }
  }

  SUBCASE("broken phase rejected") {
    CHECK_THROWS_AS(system_eigenvalues(1.5), PTBrokenError);
    CHECK_THROWS_AS(system_eigenvalues(-1.0000001), PTBrokenError);
  }
}

TEST_CASE("zeta_of_tau registry") {
  CHECK(zeta_of_tau(ZetaForm::Quadratic, 0.0) == 1.0);
  CHECK(zeta_of_tau(ZetaForm::Quadratic, 2.0) == 17.0);
  CHECK(zeta_of_tau(ZetaForm::Quartic, 2.0) == 65.0);
  CHECK(zeta_of_tau(ZetaForm::Sextic, 2.0) == 257.0);

  for (auto form : {ZetaForm::Quadratic, ZetaForm::Quartic, ZetaForm::Sextic}) {
    CHECK(zeta_of_tau(form, 0.0) == 1.0);  // Hermitian bath recovered
    for (double tau : {-3.0, -0.5, 0.25, 4.0}) CHECK(zeta_of_tau(form, tau) > 0.0);
  }

  SUBCASE("string round trip") {
    for (auto form : {ZetaForm::Quadratic, ZetaForm::Quartic, ZetaForm::Sextic}) {
      CHECK(zeta_form_from_string(to_string(form)) == form);
    }
    CHECK_THROWS_AS(zeta_form_from_string("octic"), std::invalid_argument);
  }
}

TEST_CASE("system_similarity entries and determinant") {
  CHECK(max_abs(system_similarity(0.0) - Eigen::Matrix2cd::Identity()) == 0.0);

  SUBCASE("alpha_s = 0.6 against cosh/sinh of atanh") {
    const double vt = 0.5 * std::atanh(0.6);
    const auto eta = system_similarity(0.6);
    CHECK(eta(0, 0) == std::complex<double>(std::cosh(vt), 0.0));
    CHECK(eta(1, 1) == std::complex<double>(std::cosh(vt), 0.0));
    CHECK(eta(0, 1) == std::complex<double>(0.0, -std::sinh(vt)));
    CHECK(eta(1, 0) == std::complex<double>(0.0, std::sinh(vt)));
  }

  SUBCASE("unit determinant across the unbroken phase") {
    for (double a : {-0.95, -0.4, 0.0, 0.3, 0.8, 0.999}) {
      CHECK(std::abs(system_similarity(a).determinant() - 1.0) < 1e-12);
    }
  }

  SUBCASE("inverse really inverts") {
    for (double a : {-0.7, 0.2, 0.9}) {
      const auto prod = system_similarity(a) * system_similarity_inverse(a);
      CHECK(max_abs(prod - Eigen::Matrix2cd::Identity()) < 1e-14);
    }
  }

  SUBCASE("degenerate at the phase boundary") {
    CHECK_THROWS_AS(system_similarity(1.0), PTBrokenError);
    CHECK_THROWS_AS(system_similarity(-1.0), PTBrokenError);
    CHECK_THROWS_AS(system_similarity_inverse(1.0), PTBrokenError);
  }
}

TEST_CASE("hermitize_system lands on e1 * sigma_x") {
  CHECK(max_abs(hermitize_system(0.0) - pauli_x()) < 1e-15);
  CHECK(max_abs(hermitize_system(0.6) - 0.8 * pauli_x()) < 1e-12);

  // conditioning worsens near the exceptional point but stays usable
  const double e1_99 = std::sqrt(1.0 - 0.99 * 0.99);
  CHECK(max_abs(hermitize_system(0.99) - e1_99 * pauli_x()) < 1e-10);

  SUBCASE("residual bound across the phase") {
    for (double a : {-0.9, -0.5, 0.0, 0.17, 0.62, 0.95}) {
      const double e1 = std::sqrt(1.0 - a * a);
      CHECK(max_abs(hermitize_system(a) - e1 * pauli_x()) < 1e-10);
    }
  }
}

TEST_CASE("system_hamiltonian_nh structure") {
  const auto h = system_hamiltonian_nh(0.6);
  CHECK(max_abs(h - (pauli_x() + std::complex<double>(0, 0.6) * pauli_z())) == 0.0);
  // non-Hermitian for alpha_s != 0
  CHECK(max_abs(h - h.adjoint()) > 0.1);
  CHECK(max_abs(system_hamiltonian_nh(0.0) - pauli_x()) == 0.0);
}

TEST_CASE("SystemConfig construction") {
  const auto cfg = SystemConfig::from_alpha(0.6);
  CHECK(cfg.e1 == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(cfg.vartheta.has_value());
  CHECK(*cfg.vartheta == doctest::Approx(0.5 * std::atanh(0.6)));
  CHECK_FALSE(cfg.at_exceptional_point());

  const auto from_e = SystemConfig::from_e1(0.8);
  CHECK(from_e.alpha_s == doctest::Approx(0.6).epsilon(1e-12));

  SUBCASE("exceptional point keeps e1 but drops vartheta") {
    const auto ep = SystemConfig::from_alpha(1.0);
    CHECK(ep.e1 == 0.0);
    CHECK(ep.at_exceptional_point());
    const auto ep2 = SystemConfig::from_e1(0.0);
    CHECK(ep2.alpha_s == 1.0);
    CHECK(ep2.at_exceptional_point());
  }

  SUBCASE("out-of-range inputs") {
    CHECK_THROWS_AS(SystemConfig::from_alpha(1.01), PTBrokenError);
    CHECK_THROWS_AS(SystemConfig::from_e1(1.5), std::domain_error);
    CHECK_THROWS_AS(SystemConfig::from_e1(-0.1), std::domain_error);
  }
}

TEST_CASE("EnvConfig construction and validation") {
  const auto env = EnvConfig::make(2.0, ZetaForm::Quadratic);
  CHECK(env.zeta == 17.0);
  CHECK(env.delta == 1.0);
  CHECK(env.theta == doctest::Approx(kPi / 2));

  SUBCASE("zeta always tracks (form, tau)") {
    for (auto form : {ZetaForm::Quadratic, ZetaForm::Quartic, ZetaForm::Sextic}) {
      for (double tau : {0.0, 0.1, 1.0, 3.0}) {
        CHECK(EnvConfig::make(tau, form).zeta == zeta_of_tau(form, tau));
      }
    }
  }

  SUBCASE("theta normalized into [0, 2 pi)") {
    CHECK(EnvConfig::make(0.0, ZetaForm::Quadratic, 1.0, 1.0, 0.1, 300.0, -kPi / 2).theta ==
          doctest::Approx(3.0 * kPi / 2));
    CHECK(EnvConfig::make(0.0, ZetaForm::Quadratic, 1.0, 1.0, 0.1, 300.0, 2.0 * kPi).theta ==
          doctest::Approx(0.0));
    CHECK(EnvConfig::make(0.0, ZetaForm::Quadratic, 1.0, 1.0, 0.1, 300.0, 5.0 * kPi).theta ==
          doctest::Approx(kPi));
  }

  SUBCASE("positivity checks name the offending field") {
    CHECK_THROWS_WITH_AS(EnvConfig::make(0.0, ZetaForm::Quadratic, -1.0),
                         doctest::Contains("delta"), std::domain_error);
    CHECK_THROWS_WITH_AS(EnvConfig::make(0.0, ZetaForm::Quadratic, 1.0, 0.0),
                         doctest::Contains("amp"), std::domain_error);
    CHECK_THROWS_WITH_AS(EnvConfig::make(0.0, ZetaForm::Quadratic, 1.0, 1.0, -0.1),
                         doctest::Contains("cutoff"), std::domain_error);
    CHECK_THROWS_WITH_AS(EnvConfig::make(0.0, ZetaForm::Quadratic, 1.0, 1.0, 0.1, 0.0),
                         doctest::Contains("temperature"), std::domain_error);
  }

  SUBCASE("zero-temperature flag skips the temperature check") {
    const auto zt = EnvConfig::make(0.0, ZetaForm::Quadratic, 1.0, 1.0, 0.1, 0.0, kPi / 2, true);
    CHECK(zt.zero_temperature);
  }
}
