#include "unruh/thermo.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace unruh::thermo {

namespace {

void check_mode(double omega, double a) {
  if (!(omega > 0.0)) throw std::invalid_argument("thermo: frequency must be positive");
  if (!(a >= 0.0)) throw std::invalid_argument("thermo: acceleration must be non-negative");
}

}  // namespace

double unruh_temperature(double a) {
  if (!(a >= 0.0)) throw std::invalid_argument("thermo: acceleration must be non-negative");
  return a / (2.0 * std::numbers::pi);
}

double partition(Statistics st, double omega, double a) {
  check_mode(omega, a);
  if (a == 0.0) return 1.0;
  const double q = std::exp(-omega / unruh_temperature(a));
  if (st == Statistics::Fermion) return 1.0 + q;
  return 1.0 / (1.0 - q);
}

double occupation(Statistics st, double omega, double a) {
  check_mode(omega, a);
  if (a == 0.0) return 0.0;
  const double x = omega / unruh_temperature(a);
  if (st == Statistics::Fermion) return 1.0 / (std::exp(x) + 1.0);
  return 1.0 / std::expm1(x);
}

double accel_param(Statistics st, double omega, double a) {
  check_mode(omega, a);
  if (a == 0.0) return 0.0;
  const double q = std::exp(-std::numbers::pi * omega / a);
  if (st == Statistics::Fermion) return std::atan(q);
  return std::atanh(q);
}

double helmholtz_free_energy(Statistics st, double omega, double a) {
  check_mode(omega, a);
  if (a == 0.0)
    throw std::invalid_argument("thermo: free energy undefined at a = 0; use the limit 0");
  return -unruh_temperature(a) * std::log(partition(st, omega, a));
}

AccelParams accel_params(Statistics st, double omega, double a) {
  check_mode(omega, a);
  AccelParams p;
  p.r_or_rf = accel_param(st, omega, a);
  p.unruh_temperature = unruh_temperature(a);
  p.partition = partition(st, omega, a);
  p.occupation = occupation(st, omega, a);
  p.helmholtz_free_energy = (a == 0.0) ? 0.0 : helmholtz_free_energy(st, omega, a);
  return p;
}

AccelParams accel_params(const ModeSpec& mode) {
  return accel_params(mode.statistics, mode.frequency, mode.acceleration);
}

}  // namespace unruh::thermo

namespace unruh {

std::string to_string(Statistics s) {
  switch (s) {
    case Statistics::Boson: return "boson";
    case Statistics::ChargedBoson: return "charged-boson";
    case Statistics::Fermion: return "fermion";
  }
  return "?";
}

}  // namespace unruh
