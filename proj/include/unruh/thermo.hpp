#pragma once

#include <string>

namespace unruh {

enum class Statistics { Boson, ChargedBoson, Fermion };

inline bool is_bosonic(Statistics s) { return s != Statistics::Fermion; }

/// One Unruh mode: field statistics, the frequency seen by its observer and
/// the observer's proper acceleration (units 1/length, c = hbar = k_B = 1).
struct ModeSpec {
  Statistics statistics = Statistics::Boson;
  double frequency = 1.0;
  double acceleration = 0.0;
};

/// Thermal and kinematic quantities derived from a (frequency, acceleration)
/// pair. For bosons r_or_rf is the squeezing parameter r in [0, inf); for
/// fermions it is the rotation angle r_f in [0, pi/4].
struct AccelParams {
  double r_or_rf = 0.0;
  double unruh_temperature = 0.0;
  double partition = 1.0;
  double occupation = 0.0;
  double helmholtz_free_energy = 0.0;
};

namespace thermo {

/// T = a / (2 pi). Zero for an inertial observer.
double unruh_temperature(double a);

/// Z_B = 1/(1 - e^{-omega/T}), Z_F = 1 + e^{-omega/T}; 1 in the inertial limit.
double partition(Statistics st, double omega, double a);

/// n_B = (e^{omega/T} - 1)^{-1}, n_F = (e^{omega/T} + 1)^{-1}; 0 when a = 0.
double occupation(Statistics st, double omega, double a);

/// r = arctanh(e^{-pi omega/a}) for bosons, r_f = arctan(e^{-pi omega/a})
/// for fermions; 0 when a = 0.
double accel_param(Statistics st, double omega, double a);

/// F = -T ln Z. Rejects a = 0 (callers use the limit value 0).
double helmholtz_free_energy(Statistics st, double omega, double a);

AccelParams accel_params(Statistics st, double omega, double a);
AccelParams accel_params(const ModeSpec& mode);

}  // namespace thermo

std::string to_string(Statistics s);

}  // namespace unruh
