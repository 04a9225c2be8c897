#pragma once

#include "unruh/thermo.hpp"

#include <string>
#include <vector>

namespace unruh::analytic {

enum class BellKind { Psi, Phi };
enum class XKind { X1, X2 };
enum class GammaKind { PsiBB, PsiBF, PsiFF, PhiBB, PhiBF, PhiFF };
enum class ConditionKind { BB, BF };

struct SeriesConfig {
  double term_tol = 1e-14;
  int max_terms = 10000;
};

struct SeriesResult {
  double leading = 0;
  double total = 0;
  bool converged = true;
  int terms_used = 0;
};

// ---- fermion-fermion -------------------------------------------------------

/// Closed-form negativity of the fermionic Bell families, exact for all
/// acceleration pairs. Psi uses the average-occupation form, Phi is
/// (1/2) (Z_F^w Z_F^W)^{-1}.
double neg_ff(BellKind kind, double omega, double Omega, double a_omega, double a_Omega);
double neg_ff_r(BellKind kind, double rf1, double rf2);

/// One accelerated observer: N_f = cos^2(r_f)/2.
double neg_f_single(double rf);

/// |N_Phi(r1, r2) - 2 N_f(r1) N_f(r2)|, zero by the product structure.
double factorization_check_ff(double rf1, double rf2);

// ---- boson-boson -----------------------------------------------------------

/// Leading closed form plus the correction series, both per the block
/// matrices of the reduced partially transposed state with each 2x2 block
/// treated independently and its negativity clamped at zero.
///
/// This series is exact when either mode is inertial. When both modes
/// accelerate, the exact partially transposed matrix couples the 2x2 blocks
/// into tridiagonal chains; the series then underestimates the brute-force
/// negativity and vanishes at n_B n_B = 1 while the exact value does not.
SeriesResult neg_bb(BellKind kind, double omega, double Omega, double a_omega, double a_Omega,
                    const SeriesConfig& cfg = {});
SeriesResult neg_bb_r(BellKind kind, double r1, double r2, const SeriesConfig& cfg = {});

// ---- boson-fermion ---------------------------------------------------------

/// X-state negativities: N_X1 = 2 N_f N_{b,1} with N_{b,1} summed over the
/// one-accelerated-boson blocks; N_X2 = 2 N_f (1/2) Z_B^{-1} in closed form.
SeriesResult neg_x(XKind kind, double omega, double Omega, double a_omega, double a_Omega,
                   const SeriesConfig& cfg = {});
SeriesResult neg_x_r(XKind kind, double r, double rf, const SeriesConfig& cfg = {});

/// Bell boson-fermion families from the exact 2x2 block matrices (these
/// blocks genuinely decouple). Every block crosses to positive semidefinite
/// at n_B n_F = 1 for Phi, so leading and total share the vanishing point.
SeriesResult neg_bf(BellKind kind, double omega, double Omega, double a_omega, double a_Omega,
                    const SeriesConfig& cfg = {});
SeriesResult neg_bf_r(BellKind kind, double r, double rf, const SeriesConfig& cfg = {});

// ---- compact form ----------------------------------------------------------

/// Structure function gamma of the compact negativity form.
/// gamma(PsiBF) = gamma(PhiFF) = 1 identically.
double gamma_structure(GammaKind tag, double omega, double Omega, double a_omega,
                       double a_Omega);

/// N^(0) = (1/2) (Z_X^w)^-x (Z_Y^W)^-y gamma, clamped at zero; x, y = 1 for
/// fermions and 2 for bosons.
///
/// Matches the leading neg_ff / neg_bb / neg_x / neg_bf(Psi) terms for all
/// parameters. For PhiBF the printed gamma reduction only holds on the
/// equal-thermal-ratio diagonal e^{-omega/T_w} = e^{-Omega/T_W}; off it,
/// neg_bf's block form is the faithful leading value.
double general_bell_negativity(GammaKind tag, double omega, double Omega, double a_omega,
                               double a_Omega);

// ---- entanglement conditions -----------------------------------------------

struct ConditionResult {
  bool entangled = true;
  double margin = 1.0;  // 1 - (condition left side); entangled iff > 0
};

/// BB: margin = 1 - e^{-omega/T_w} - e^{-Omega/T_W}. BF: margin = 1 - n_B n_F.
ConditionResult entanglement_condition(ConditionKind kind, double omega, double Omega,
                                       double a_omega, double a_Omega);

struct HelmholtzResult {
  double lhs = 0, rhs = 0;
  bool holds = true;
  double partner_lhs = 0, partner_rhs = 0;  // the symmetric BB check
};

/// Free-energy form of the condition at equal accelerations:
/// BB: omega >= -F_W (and Omega >= -F_w); BF: omega + Omega >= -F_w + F_W.
HelmholtzResult helmholtz_condition(ConditionKind kind, double omega, double Omega, double a);

// ---- infinite-acceleration constants ---------------------------------------

struct AsymptoticLimits {
  double neg_phi_ff;            // 1/8
  double neg_psi_ff;            // (sqrt 2 - 1)/4
  double neg_f_single;          // 1/4
  double entropy_phi_ff_nats;
  double entropy_psi_ff_nats;   // ln 8
  double mutual_info_phi_ff_bits;
  double mutual_info_psi_ff_bits;
};

AsymptoticLimits asymptotic_limits();
std::vector<std::pair<std::string, double>> asymptotic_limit_rows();

}  // namespace unruh::analytic
