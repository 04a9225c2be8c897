#include "unruh/analytic.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace unruh::analytic {

namespace {

constexpr double kPi = std::numbers::pi;

double sq(double x) { return x * x; }

/// Clamped negativity of a Hermitian 2x2 block [[A, C], [C, B]] with A, B >= 0.
double neg2x2(double A, double B, double C) {
  const double rad = std::sqrt(0.25 * sq(A - B) + C * C);
  return std::max(0.0, rad - 0.5 * (A + B));
}

/// Spectral-radius bound of the same block, used for tail control.
double bound2x2(double A, double B, double C) { return A + B + 2.0 * std::abs(C); }

struct BosonParams {
  double T;   // tanh^2 r
  double c2;  // cosh^2 r
};

BosonParams boson_params(double r) { return {sq(std::tanh(r)), sq(std::cosh(r))}; }

double pow_or_zero(double x, int n) {
  // x^n with the n = 0 convention x^0 = 1 even at x = 0
  if (n == 0) return 1.0;
  return std::pow(x, n);
}

struct Block2 {
  double A, B, C;
};

/// Phi_BB 2x2 block at window (n, m); singular 1/sinh^2 factors are folded
/// into the tanh powers so every entry is finite down to r = 0.
Block2 phi_bb_block(int n, int m, const BosonParams& p1, const BosonParams& p2) {
  const double pref = 0.5 / (p1.c2 * p2.c2);
  const double T1n = pow_or_zero(p1.T, n), T2m = pow_or_zero(p2.T, m);
  Block2 b;
  b.A = pref * (T1n * T2m * p2.T +
                (m + 1.0) * n * pow_or_zero(p1.T, n - 1) * T2m / (p1.c2 * p2.c2));
  b.B = pref * (T1n * p1.T * T2m +
                (n + 1.0) * m * T1n * pow_or_zero(p2.T, m - 1) / (p1.c2 * p2.c2));
  b.C = 0.5 * std::sqrt((m + 1.0) * (n + 1.0)) * T1n * T2m / std::pow(p1.c2 * p2.c2, 1.5);
  return b;
}

Block2 psi_bb_block(int n, int m, const BosonParams& p1, const BosonParams& p2) {
  const double pref = 0.5 / (p1.c2 * p2.c2);
  const double T1n = pow_or_zero(p1.T, n), T2m = pow_or_zero(p2.T, m);
  Block2 b;
  b.A = pref * (m * T1n * pow_or_zero(p2.T, m - 1) / p2.c2 +
                n * pow_or_zero(p1.T, n - 1) * T2m / p1.c2);
  b.B = pref * ((m + 1.0) * T1n * p1.T * T2m / p2.c2 + (n + 1.0) * T1n * T2m * p2.T / p1.c2);
  b.C = 0.5 * std::sqrt((m + 1.0) * (n + 1.0)) * T1n * T2m / std::pow(p1.c2 * p2.c2, 1.5);
  return b;
}

/// X1 one-accelerated-boson block (the cos^2 r_f fermion factor removed).
Block2 x1_block(int n, const BosonParams& p) {
  Block2 b;
  b.A = 0.5 * n * pow_or_zero(p.T, n - 1) / (p.c2 * p.c2);
  b.B = 0.5 * pow_or_zero(p.T, n) * p.T / p.c2;
  b.C = 0.5 * pow_or_zero(p.T, n) * std::sqrt(n + 1.0) / std::pow(p.c2, 1.5);
  return b;
}

Block2 phi_bf_block(int n, const BosonParams& p, double cf2, double sf2) {
  const double Tn = pow_or_zero(p.T, n);
  Block2 b;
  b.A = 0.5 * cf2 * cf2 * Tn * p.T / p.c2;
  b.B = 0.5 * cf2 * (n * pow_or_zero(p.T, n - 1) / (p.c2 * p.c2) + sf2 * Tn / p.c2);
  b.C = 0.5 * cf2 * std::sqrt(cf2) * Tn * std::sqrt(n + 1.0) / std::pow(p.c2, 1.5);
  return b;
}

Block2 psi_bf_block(int n, const BosonParams& p, double cf2, double sf2) {
  const double Tn = pow_or_zero(p.T, n);
  Block2 b;
  b.A = 0.5 * cf2 * cf2 * n * pow_or_zero(p.T, n - 1) / (p.c2 * p.c2);
  b.B = 0.5 * cf2 * ((n + 1.0) * sf2 * Tn / (p.c2 * p.c2) + Tn * p.T / p.c2);
  b.C = 0.5 * cf2 * std::sqrt(cf2) * Tn * std::sqrt(n + 1.0) / std::pow(p.c2, 1.5);
  return b;
}

/// Sum clamped block negativities over n >= from, stopping once the geometric
/// tail bound (ratio T) drops below cfg.term_tol.
template <typename BlockFn>
SeriesResult sum_series(double T, int from, const SeriesConfig& cfg, BlockFn&& block) {
  SeriesResult res;
  const double ratio = std::min(T, 1.0 - 1e-16);
  for (int n = from; n < from + cfg.max_terms; ++n) {
    const Block2 b = block(n);
    res.total += neg2x2(b.A, b.B, b.C);
    ++res.terms_used;
    const double tail = bound2x2(b.A, b.B, b.C) * ratio / (1.0 - ratio);
    if (tail < cfg.term_tol) return res;
  }
  res.converged = false;
  return res;
}

void check_freqs(double omega, double Omega, double a1, double a2) {
  if (!(omega > 0.0) || !(Omega > 0.0))
    throw std::invalid_argument("analytic: frequencies must be positive");
  if (!(a1 >= 0.0) || !(a2 >= 0.0))
    throw std::invalid_argument("analytic: accelerations must be non-negative");
}

double r_of(Statistics st, double omega, double a) { return thermo::accel_param(st, omega, a); }

}  // namespace

// ---- fermion-fermion -------------------------------------------------------

double neg_ff_r(BellKind kind, double rf1, double rf2) {
  const double c1 = sq(std::cos(rf1)), c2 = sq(std::cos(rf2));
  if (kind == BellKind::Phi) return 0.5 * c1 * c2;
  const double s = sq(std::sin(rf1)) + sq(std::sin(rf2));
  return 0.25 * (std::sqrt(s * s + 4.0 * c1 * c2) - s);
}

double neg_ff(BellKind kind, double omega, double Omega, double a_omega, double a_Omega) {
  check_freqs(omega, Omega, a_omega, a_Omega);
  return neg_ff_r(kind, r_of(Statistics::Fermion, omega, a_omega),
                  r_of(Statistics::Fermion, Omega, a_Omega));
}

double neg_f_single(double rf) { return 0.5 * sq(std::cos(rf)); }

double factorization_check_ff(double rf1, double rf2) {
  return std::abs(neg_ff_r(BellKind::Phi, rf1, rf2) -
                  2.0 * neg_f_single(rf1) * neg_f_single(rf2));
}

// ---- boson-boson -----------------------------------------------------------

SeriesResult neg_bb_r(BellKind kind, double r1, double r2, const SeriesConfig& cfg) {
  const BosonParams p1 = boson_params(r1), p2 = boson_params(r2);
  auto block = [&](int n, int m) {
    return kind == BellKind::Phi ? phi_bb_block(n, m, p1, p2) : psi_bb_block(n, m, p1, p2);
  };
  const Block2 b0 = block(0, 0);
  SeriesResult res;
  res.leading = neg2x2(b0.A, b0.B, b0.C);
  res.total = res.leading;
  res.terms_used = 1;
  if (r1 > 0.0) {
    SeriesResult row = sum_series(p1.T, 1, cfg, [&](int n) { return block(n, 0); });
    res.total += row.total;
    res.terms_used += row.terms_used;
    res.converged = res.converged && row.converged;
  }
  if (r2 > 0.0) {
    SeriesResult col = sum_series(p2.T, 1, cfg, [&](int m) { return block(0, m); });
    res.total += col.total;
    res.terms_used += col.terms_used;
    res.converged = res.converged && col.converged;
  }
  return res;
}

SeriesResult neg_bb(BellKind kind, double omega, double Omega, double a_omega, double a_Omega,
                    const SeriesConfig& cfg) {
  check_freqs(omega, Omega, a_omega, a_Omega);
  return neg_bb_r(kind, r_of(Statistics::Boson, omega, a_omega),
                  r_of(Statistics::Boson, Omega, a_Omega), cfg);
}

// ---- boson-fermion ---------------------------------------------------------

SeriesResult neg_x_r(XKind kind, double r, double rf, const SeriesConfig& cfg) {
  const double nf = neg_f_single(rf);
  SeriesResult res;
  if (kind == XKind::X2) {
    const double inv_zb = 1.0 / sq(std::cosh(r));
    res.leading = res.total = 2.0 * nf * 0.5 * inv_zb;
    res.terms_used = 1;
    return res;
  }
  const BosonParams p = boson_params(r);
  const Block2 b0 = x1_block(0, p);
  res.leading = 2.0 * nf * neg2x2(b0.A, b0.B, b0.C);
  res.total = res.leading;
  res.terms_used = 1;
  if (r > 0.0) {
    SeriesResult tailr = sum_series(p.T, 1, cfg, [&](int n) { return x1_block(n, p); });
    res.total += 2.0 * nf * tailr.total;
    res.terms_used += tailr.terms_used;
    res.converged = tailr.converged;
  }
  return res;
}

SeriesResult neg_x(XKind kind, double omega, double Omega, double a_omega, double a_Omega,
                   const SeriesConfig& cfg) {
  check_freqs(omega, Omega, a_omega, a_Omega);
  return neg_x_r(kind, r_of(Statistics::Boson, omega, a_omega),
                 r_of(Statistics::Fermion, Omega, a_Omega), cfg);
}

SeriesResult neg_bf_r(BellKind kind, double r, double rf, const SeriesConfig& cfg) {
  const BosonParams p = boson_params(r);
  const double cf2 = sq(std::cos(rf)), sf2 = sq(std::sin(rf));
  const double doubling = 1.0 + sq(std::tan(rf));
  auto block = [&](int n) {
    return kind == BellKind::Phi ? phi_bf_block(n, p, cf2, sf2) : psi_bf_block(n, p, cf2, sf2);
  };
  const Block2 b0 = block(0);
  SeriesResult res;
  res.leading = doubling * neg2x2(b0.A, b0.B, b0.C);
  res.total = res.leading;
  res.terms_used = 1;
  if (r > 0.0) {
    SeriesResult tailr = sum_series(p.T, 1, cfg, block);
    res.total += doubling * tailr.total;
    res.terms_used += tailr.terms_used;
    res.converged = tailr.converged;
  }
  return res;
}

SeriesResult neg_bf(BellKind kind, double omega, double Omega, double a_omega, double a_Omega,
                    const SeriesConfig& cfg) {
  check_freqs(omega, Omega, a_omega, a_Omega);
  return neg_bf_r(kind, r_of(Statistics::Boson, omega, a_omega),
                  r_of(Statistics::Fermion, Omega, a_Omega), cfg);
}

// ---- compact form ----------------------------------------------------------

double gamma_structure(GammaKind tag, double omega, double Omega, double a_omega,
                       double a_Omega) {
  check_freqs(omega, Omega, a_omega, a_Omega);
  using thermo::occupation;
  using thermo::partition;
  switch (tag) {
    case GammaKind::PsiBF:
    case GammaKind::PhiFF:
      return 1.0;
    case GammaKind::PsiBB: {
      const double z1 = partition(Statistics::Boson, omega, a_omega);
      const double z2 = partition(Statistics::Boson, Omega, a_Omega);
      const double nbar = 0.5 * (occupation(Statistics::Boson, omega, a_omega) +
                                 occupation(Statistics::Boson, Omega, a_Omega));
      return std::sqrt(z1 * z2 + nbar * nbar) - nbar;
    }
    case GammaKind::PsiFF: {
      const double z1 = partition(Statistics::Fermion, omega, a_omega);
      const double z2 = partition(Statistics::Fermion, Omega, a_Omega);
      const double nbar = 0.5 * (occupation(Statistics::Fermion, omega, a_omega) +
                                 occupation(Statistics::Fermion, Omega, a_Omega));
      return std::sqrt(z1 * z2 + sq(z1 * z2 * nbar)) - z1 * z2 * nbar;
    }
    case GammaKind::PhiBB:
      return 1.0 - occupation(Statistics::Boson, omega, a_omega) *
                       occupation(Statistics::Boson, Omega, a_Omega);
    case GammaKind::PhiBF: {
      const double nb = occupation(Statistics::Boson, omega, a_omega);
      const double nf = occupation(Statistics::Fermion, Omega, a_Omega);
      if (nf == 0.0) return nb == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
      return std::sqrt(nb / nf) - nb;
    }
  }
  throw std::logic_error("unreachable");
}

double general_bell_negativity(GammaKind tag, double omega, double Omega, double a_omega,
                               double a_Omega) {
  check_freqs(omega, Omega, a_omega, a_Omega);
  const bool first_boson =
      tag == GammaKind::PsiBB || tag == GammaKind::PhiBB || tag == GammaKind::PsiBF ||
      tag == GammaKind::PhiBF;
  const bool second_boson = tag == GammaKind::PsiBB || tag == GammaKind::PhiBB;
  const double zx = thermo::partition(first_boson ? Statistics::Boson : Statistics::Fermion,
                                      omega, a_omega);
  const double zy = thermo::partition(second_boson ? Statistics::Boson : Statistics::Fermion,
                                      Omega, a_Omega);
  const double x = first_boson ? 2.0 : 1.0;
  const double y = second_boson ? 2.0 : 1.0;
  const double gamma = gamma_structure(tag, omega, Omega, a_omega, a_Omega);
  if (tag == GammaKind::PhiBF && std::isinf(gamma)) {
    // inertial fermion: the compact reduction degenerates; the leading block
    // value is the faithful limit
    return neg_bf(BellKind::Phi, omega, Omega, a_omega, a_Omega).leading;
  }
  return std::max(0.0, 0.5 * std::pow(zx, -x) * std::pow(zy, -y) * gamma);
}

// ---- entanglement conditions -----------------------------------------------

ConditionResult entanglement_condition(ConditionKind kind, double omega, double Omega,
                                       double a_omega, double a_Omega) {
  check_freqs(omega, Omega, a_omega, a_Omega);
  ConditionResult res;
  if (kind == ConditionKind::BB) {
    const double q1 =
        a_omega == 0.0 ? 0.0 : std::exp(-omega / thermo::unruh_temperature(a_omega));
    const double q2 =
        a_Omega == 0.0 ? 0.0 : std::exp(-Omega / thermo::unruh_temperature(a_Omega));
    res.margin = 1.0 - q1 - q2;
  } else {
    res.margin = 1.0 - thermo::occupation(Statistics::Boson, omega, a_omega) *
                           thermo::occupation(Statistics::Fermion, Omega, a_Omega);
  }
  res.entangled = res.margin > 0.0;
  return res;
}

HelmholtzResult helmholtz_condition(ConditionKind kind, double omega, double Omega, double a) {
  check_freqs(omega, Omega, a, a);
  HelmholtzResult res;
  if (a == 0.0) {
    res.lhs = kind == ConditionKind::BB ? omega : omega + Omega;
    res.rhs = 0.0;
    res.partner_lhs = Omega;
    res.partner_rhs = 0.0;
    res.holds = true;
    return res;
  }
  if (kind == ConditionKind::BB) {
    res.lhs = omega;
    res.rhs = -thermo::helmholtz_free_energy(Statistics::Boson, Omega, a);
    res.partner_lhs = Omega;
    res.partner_rhs = -thermo::helmholtz_free_energy(Statistics::Boson, omega, a);
  } else {
    res.lhs = omega + Omega;
    res.rhs = -thermo::helmholtz_free_energy(Statistics::Boson, omega, a) +
              thermo::helmholtz_free_energy(Statistics::Fermion, Omega, a);
    res.partner_lhs = res.lhs;
    res.partner_rhs = res.rhs;
  }
  res.holds = res.lhs >= res.rhs;
  return res;
}

// ---- infinite-acceleration constants ---------------------------------------

AsymptoticLimits asymptotic_limits() {
  AsymptoticLimits lim;
  lim.neg_phi_ff = 0.125;
  lim.neg_psi_ff = 0.25 * (std::numbers::sqrt2 - 1.0);
  lim.neg_f_single = 0.25;
  const double sp = 3.0 + 2.0 * std::numbers::sqrt2;
  const double sm = 3.0 - 2.0 * std::numbers::sqrt2;
  lim.entropy_phi_ff_nats = std::log(32.0) / 4.0 - sp / 8.0 * std::log(sp / 32.0) +
                            (2.0 * std::numbers::sqrt2 - 3.0) / 8.0 * std::log(sm / 32.0);
  lim.entropy_psi_ff_nats = std::log(8.0);
  lim.mutual_info_phi_ff_bits =
      (-std::log(531441.0 / 256.0) + sp * std::log(sp) + sm * std::log(sm)) /
      (8.0 * std::numbers::ln2);
  lim.mutual_info_psi_ff_bits = std::log(8.0 / (3.0 * std::sqrt(3.0))) / std::numbers::ln2;
  return lim;
}

std::vector<std::pair<std::string, double>> asymptotic_limit_rows() {
  const AsymptoticLimits lim = asymptotic_limits();
  return {
      {"negativity Phi_FF", lim.neg_phi_ff},
      {"negativity Psi_FF", lim.neg_psi_ff},
      {"negativity one-observer N_f", lim.neg_f_single},
      {"entropy Phi_FF [nats]", lim.entropy_phi_ff_nats},
      {"entropy Psi_FF [nats]", lim.entropy_psi_ff_nats},
      {"mutual information Phi_FF [bits]", lim.mutual_info_phi_ff_bits},
      {"mutual information Psi_FF [bits]", lim.mutual_info_psi_ff_bits},
  };
}

}  // namespace unruh::analytic
