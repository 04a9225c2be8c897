#pragma once

#include "unruh/analytic.hpp"
#include "unruh/entanglement.hpp"
#include "unruh/states.hpp"
#include "unruh/thermo.hpp"

#include <optional>
#include <vector>

namespace unruh::blackhole {

/// An observer hovering at fixed Schwarzschild radius r0 > R_S, watching
/// modes of frequencies omega and Omega. R_S is the length unit throughout;
/// distances are reported as d/R_S = r0/R_S - 1.
struct HoverSpec {
  double schwarzschild_radius = 1.0;
  double hover_radius = 2.0;
  double omega = 1.0;
  double Omega = 1.0;
};

void validate(const HoverSpec& spec);

/// a = (1/(2 R_S)) (1 - R_S/r0)^{-1/2}; diverges at the horizon and tends to
/// 1/(2 R_S) far away.
double acceleration_at_radius(double schwarzschild_radius, double hover_radius);

/// Rescaled frequency omega_g = 4 pi R_S omega.
double rescaled_frequency(double schwarzschild_radius, double omega);

/// Acceleration parameters of the hovering observer,
/// r = arctanh(exp(-(omega_g/2) sqrt(1 - R_S/r0))) and the arctan analog;
/// identical to composing acceleration_at_radius with thermo::accel_param.
AccelParams horizon_accel_params(const HoverSpec& spec, Statistics statistics,
                                 int mode_index = 0);

/// Distance d*/R_S at which the Phi-family cut-off function reaches zero,
/// located by bisection in r0/R_S on the analytic condition (monotone in r0).
/// BB: n_B(omega) n_B(Omega) = 1; BF: n_B(omega) n_F(Omega) = 1. The second
/// observer hovers at d2 = ratio2 * d.
double vanishing_distance(analytic::ConditionKind kind, const HoverSpec& spec,
                          double ratio2 = 1.0, double tol = 1e-10);

enum class Method { Analytic, Numeric };

struct DistanceRow {
  double d_over_rs = 0;
  double a_rs = 0;  // first observer's acceleration in units 1/R_S
  double negativity = 0;
};

struct DistanceTable {
  std::vector<DistanceRow> rows;
  std::optional<double> d_star_over_rs;  // Phi_BB / Phi_BF families only
};

/// Negativity of `family` (statistics and kind; accelerations are overwritten)
/// for observers hovering at each distance in `distances_over_rs`. With
/// ratio2 != 1 the second observer hovers at d2 = ratio2 * d instead of being
/// co-located. Reports d* where the Phi cut-off closes.
DistanceTable negativity_vs_distance(const states::StateFamily& family, const HoverSpec& spec,
                                     const std::vector<double>& distances_over_rs,
                                     Method method, double ratio2 = 1.0,
                                     const analytic::SeriesConfig& series = {},
                                     const ent::TruncationConfig& trunc = {});

}  // namespace unruh::blackhole
