#include "unruh/thermo.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace unruh;
using doctest::Approx;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("unruh temperature") {
  CHECK(thermo::unruh_temperature(2 * kPi) == Approx(1.0).epsilon(1e-15));
  CHECK(thermo::unruh_temperature(0.0) == 0.0);
  CHECK(thermo::unruh_temperature(4 * kPi) == Approx(2.0).epsilon(1e-15));
  CHECK_THROWS_AS(thermo::unruh_temperature(-1.0), std::invalid_argument);
}

TEST_CASE("partition functions") {
  // omega/T -> infinity
  CHECK(thermo::partition(Statistics::Fermion, 1.0, 1e-6) == Approx(1.0).epsilon(1e-12));
  // omega/T -> 0+: Z_F -> 2
  CHECK(thermo::partition(Statistics::Fermion, 1e-9, 1e9) == Approx(2.0).epsilon(1e-8));
  // boson at omega/T = ln 2: Z_B = 2
  const double a = 2 * kPi / std::log(2.0);
  CHECK(thermo::partition(Statistics::Boson, 1.0, a) == Approx(2.0).epsilon(1e-14));
  CHECK(thermo::partition(Statistics::Boson, 1.0, 0.0) == 1.0);
  CHECK(thermo::partition(Statistics::Fermion, 1.0, 0.0) == 1.0);
  CHECK_THROWS_AS(thermo::partition(Statistics::Boson, -1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(thermo::partition(Statistics::Boson, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("occupation numbers") {
  CHECK(thermo::occupation(Statistics::Fermion, 1.0, 1e12) == Approx(0.5).epsilon(1e-9));
  const double a = 2 * kPi / std::log(2.0);
  CHECK(thermo::occupation(Statistics::Boson, 1.0, a) == Approx(1.0).epsilon(1e-14));
  CHECK(thermo::occupation(Statistics::Fermion, 1.0, 2 * kPi) ==
        Approx(1.0 / (1.0 + std::exp(1.0))).epsilon(1e-15));
  CHECK(thermo::occupation(Statistics::Boson, 1.0, 0.0) == 0.0);
  CHECK(thermo::occupation(Statistics::Fermion, 1.0, 0.0) == 0.0);
}

TEST_CASE("acceleration parameters") {
  CHECK(thermo::accel_param(Statistics::Fermion, 1.0, 1e14) == Approx(kPi / 4).epsilon(1e-9));
  CHECK(thermo::accel_param(Statistics::Boson, 1.0, 0.0) == 0.0);
  CHECK(thermo::accel_param(Statistics::Fermion, 1.0, kPi) ==
        Approx(std::atan(std::exp(-1.0))).epsilon(1e-15));
  // charged bosons share the bosonic parametrization
  CHECK(thermo::accel_param(Statistics::ChargedBoson, 1.0, 3.0) ==
        thermo::accel_param(Statistics::Boson, 1.0, 3.0));
}

TEST_CASE("helmholtz free energy") {
  const double a = 2 * kPi / std::log(2.0);  // omega/T = ln 2
  CHECK(thermo::helmholtz_free_energy(Statistics::Boson, 1.0, a) ==
        Approx(-thermo::unruh_temperature(a) * std::log(2.0)).epsilon(1e-14));
  CHECK(thermo::helmholtz_free_energy(Statistics::Fermion, 1.0, 7.3) <= 0.0);
  CHECK(thermo::helmholtz_free_energy(Statistics::Boson, 1.0, 1e-3) ==
        Approx(0.0).epsilon(1e-12));
  CHECK_THROWS_AS(thermo::helmholtz_free_energy(Statistics::Boson, 1.0, 0.0),
                  std::invalid_argument);
}

TEST_CASE("thermal identities on a log-spaced ratio grid") {
  // omega/a in [1e-3, 1e3]
  for (int i = 0; i <= 60; ++i) {
    const double ratio = std::pow(10.0, -3.0 + 6.0 * i / 60.0);
    const double omega = 1.0, a = omega / ratio;
    const double T = thermo::unruh_temperature(a);
    const double q = std::exp(-omega / T);
    const double nb = thermo::occupation(Statistics::Boson, omega, a);
    const double nf = thermo::occupation(Statistics::Fermion, omega, a);
    CHECK(nb * (1.0 - q) == Approx(q).epsilon(1e-12));
    CHECK(nf * (1.0 + q) == Approx(q).epsilon(1e-12));

    const double r = thermo::accel_param(Statistics::Boson, omega, a);
    const double rf = thermo::accel_param(Statistics::Fermion, omega, a);
    const double q2 = std::exp(-2 * kPi * omega / a);
    CHECK(std::tanh(r) * std::tanh(r) == Approx(q2).epsilon(1e-12));
    CHECK(std::tan(rf) * std::tan(rf) == Approx(q2).epsilon(1e-12));

    // link between thermal and trigonometric parametrizations
    CHECK(thermo::partition(Statistics::Boson, omega, a) ==
          Approx(std::cosh(r) * std::cosh(r)).epsilon(1e-12));
    CHECK(1.0 / thermo::partition(Statistics::Fermion, omega, a) ==
          Approx(std::cos(rf) * std::cos(rf)).epsilon(1e-12));
  }
}

TEST_CASE("monotonicity in the acceleration") {
  double prev_nb = -1, prev_nf = -1, prev_r = -1, prev_rf = -1;
  for (double a = 0.5; a < 40.0; a += 0.5) {
    const double nb = thermo::occupation(Statistics::Boson, 1.0, a);
    const double nf = thermo::occupation(Statistics::Fermion, 1.0, a);
    const double r = thermo::accel_param(Statistics::Boson, 1.0, a);
    const double rf = thermo::accel_param(Statistics::Fermion, 1.0, a);
    CHECK(nb > prev_nb);
    CHECK(nf > prev_nf);
    CHECK(r > prev_r);
    CHECK(rf > prev_rf);
    prev_nb = nb;
    prev_nf = nf;
    prev_r = r;
    prev_rf = rf;
  }
}

TEST_CASE("accel_params bundles the scalar operations") {
  const ModeSpec mode{Statistics::Fermion, 2.0, 5.0};
  const AccelParams p = thermo::accel_params(mode);
  CHECK(p.r_or_rf == thermo::accel_param(mode.statistics, 2.0, 5.0));
  CHECK(p.partition == thermo::partition(mode.statistics, 2.0, 5.0));
  CHECK(p.occupation == thermo::occupation(mode.statistics, 2.0, 5.0));
  CHECK(p.unruh_temperature == thermo::unruh_temperature(5.0));
  CHECK(p.r_or_rf <= kPi / 4);
  CHECK(p.partition >= 1.0);
  CHECK(p.partition <= 2.0);
  CHECK(p.occupation <= 0.5);
  // inertial bundle uses limit values
  const AccelParams p0 = thermo::accel_params(Statistics::Boson, 1.0, 0.0);
  CHECK(p0.helmholtz_free_energy == 0.0);
  CHECK(p0.partition == 1.0);
}
