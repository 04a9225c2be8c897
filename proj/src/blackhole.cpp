#include "unruh/blackhole.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace unruh::blackhole {

void validate(const HoverSpec& spec) {
  if (!(spec.schwarzschild_radius > 0.0))
    throw std::invalid_argument("blackhole: R_S must be positive");
  if (!(spec.hover_radius > spec.schwarzschild_radius))
    throw std::invalid_argument("blackhole: hover radius must exceed R_S");
  if (!(spec.omega > 0.0) || !(spec.Omega > 0.0))
    throw std::invalid_argument("blackhole: frequencies must be positive");
}

double acceleration_at_radius(double rs, double r0) {
  if (!(rs > 0.0) || !(r0 > rs))
    throw std::invalid_argument("blackhole: need r0 > R_S > 0");
  return 1.0 / (2.0 * rs) / std::sqrt(1.0 - rs / r0);
}

double rescaled_frequency(double rs, double omega) {
  return 4.0 * std::numbers::pi * rs * omega;
}

AccelParams horizon_accel_params(const HoverSpec& spec, Statistics statistics,
                                 int mode_index) {
  validate(spec);
  const double omega = mode_index == 0 ? spec.omega : spec.Omega;
  const double a = acceleration_at_radius(spec.schwarzschild_radius, spec.hover_radius);
  return thermo::accel_params(statistics, omega, a);
}

namespace {

/// Entanglement-condition left side at hover distances (d, ratio2*d), in
/// units of R_S; the Phi state is entangled while this is below 1.
double condition_lhs(analytic::ConditionKind kind, const HoverSpec& spec, double d,
                     double ratio2) {
  // work in units of R_S: a carries a factor R_S, frequencies likewise
  const double a1 = acceleration_at_radius(1.0, 1.0 + d);
  const double a2 = acceleration_at_radius(1.0, 1.0 + ratio2 * d);
  const double omega = spec.omega * spec.schwarzschild_radius;
  const double Omega = spec.Omega * spec.schwarzschild_radius;
  if (kind == analytic::ConditionKind::BB)
    return thermo::occupation(Statistics::Boson, omega, a1) *
           thermo::occupation(Statistics::Boson, Omega, a2);
  return thermo::occupation(Statistics::Boson, omega, a1) *
         thermo::occupation(Statistics::Fermion, Omega, a2);
}

}  // namespace

double vanishing_distance(analytic::ConditionKind kind, const HoverSpec& spec, double ratio2,
                          double tol) {
  validate(spec);
  if (!(ratio2 > 0.0)) throw std::invalid_argument("blackhole: ratio2 must be positive");
  // n_B n_X -> infinity at the horizon and -> its asymptotic flat value far
  // away; the product is monotone decreasing in d.
  double lo = 1e-14, hi = 1.0;
  if (condition_lhs(kind, spec, lo, ratio2) < 1.0)
    throw std::invalid_argument("blackhole: condition already satisfied at the horizon");
  while (condition_lhs(kind, spec, hi, ratio2) > 1.0 && hi < 1e12) hi *= 2.0;
  if (hi >= 1e12)
    throw std::runtime_error("blackhole: cut-off never closes for these frequencies");
  while (hi - lo > tol * std::max(1.0, lo)) {
    const double mid = 0.5 * (lo + hi);
    (condition_lhs(kind, spec, mid, ratio2) > 1.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

DistanceTable negativity_vs_distance(const states::StateFamily& family, const HoverSpec& spec,
                                     const std::vector<double>& distances_over_rs,
                                     Method method, double ratio2,
                                     const analytic::SeriesConfig& series,
                                     const ent::TruncationConfig& trunc) {
  validate(spec);
  using states::FamilyKind;
  DistanceTable table;
  table.rows.reserve(distances_over_rs.size());
  // R_S units: only omega/a enters, so scaling both by R_S is exact
  const double omega = spec.omega * spec.schwarzschild_radius;
  const double Omega = spec.Omega * spec.schwarzschild_radius;

  for (double d : distances_over_rs) {
    if (!(d > 0.0)) throw std::invalid_argument("blackhole: distances must be positive");
    const double a1 = acceleration_at_radius(1.0, 1.0 + d);
    const double a2 = acceleration_at_radius(1.0, 1.0 + ratio2 * d);
    DistanceRow row;
    row.d_over_rs = d;
    row.a_rs = a1;
    if (method == Method::Numeric) {
      states::StateFamily f = family;
      f.mode1.frequency = omega;
      f.mode1.acceleration = a1;
      f.mode2.frequency = Omega;
      f.mode2.acceleration = a2;
      row.negativity = ent::evaluate(f, trunc).negativity.total;
    } else {
      using analytic::BellKind;
      switch (family.kind) {
        case FamilyKind::PsiFF:
          row.negativity = analytic::neg_ff(BellKind::Psi, omega, Omega, a1, a2);
          break;
        case FamilyKind::PhiFF:
          row.negativity = analytic::neg_ff(BellKind::Phi, omega, Omega, a1, a2);
          break;
        case FamilyKind::PsiBB:
          row.negativity = analytic::neg_bb(BellKind::Psi, omega, Omega, a1, a2, series).total;
          break;
        case FamilyKind::PhiBB:
          row.negativity = analytic::neg_bb(BellKind::Phi, omega, Omega, a1, a2, series).total;
          break;
        case FamilyKind::X1:
          row.negativity =
              analytic::neg_x(analytic::XKind::X1, omega, Omega, a1, a2, series).total;
          break;
        case FamilyKind::X2:
          row.negativity =
              analytic::neg_x(analytic::XKind::X2, omega, Omega, a1, a2, series).total;
          break;
        case FamilyKind::PsiBF:
          row.negativity = analytic::neg_bf(BellKind::Psi, omega, Omega, a1, a2, series).total;
          break;
        case FamilyKind::PhiBF:
          row.negativity = analytic::neg_bf(BellKind::Phi, omega, Omega, a1, a2, series).total;
          break;
        default:
          throw std::invalid_argument(
              "blackhole: analytic distance scan supports the Bell/X families only");
      }
    }
    table.rows.push_back(row);
  }

  if (family.kind == FamilyKind::PhiBB)
    table.d_star_over_rs = vanishing_distance(analytic::ConditionKind::BB, spec, ratio2);
  else if (family.kind == FamilyKind::PhiBF)
    table.d_star_over_rs = vanishing_distance(analytic::ConditionKind::BF, spec, ratio2);
  return table;
}

}  // namespace unruh::blackhole
