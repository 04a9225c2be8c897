#pragma once

#include "unruh/fock.hpp"
#include "unruh/thermo.hpp"

#include <string>
#include <vector>

namespace unruh::states {

enum class FamilyKind {
  PsiFF,
  PhiFF,
  PsiBB,
  PhiBB,
  X1,
  X2,
  PsiBF,
  PhiBF,
  PsiAlphaBB,
  PhiAlphaBB,
};

enum class BellSign { Plus, Minus };

/// A two-mode Bell-type state family. mode1 carries frequency omega, mode2
/// frequency Omega; their statistics must match the family kind.
struct StateFamily {
  FamilyKind kind = FamilyKind::PhiFF;
  BellSign sign = BellSign::Plus;
  double alpha = 0.78539816339744830961;  // pi/4, alpha families only
  ModeSpec mode1;
  ModeSpec mode2;
};

bool is_alpha_family(FamilyKind k);
bool has_bosonic_mode(FamilyKind k);
std::string to_string(FamilyKind k);
FamilyKind family_from_string(const std::string& name);

/// Throws std::invalid_argument on kind/statistics mismatch or alpha outside
/// (0, pi/2).
void validate(const StateFamily& family);

/// Rindler expansion coefficients of one uncharged bosonic Unruh mode,
/// a_n = tanh^n(r)/cosh(r) and abar_n = tanh^n(r) sqrt(n+1)/cosh^2(r),
/// truncated at n = cutoff.
struct ModeExpansion {
  std::vector<double> a;
  std::vector<double> abar;
  int cutoff = 0;
  double norm_deficit = 0;
};

ModeExpansion mode_expansion(double r, int nmax);

enum class ChargeOcc { Vacuum, ParticleOne, AntiparticleOne };

/// |0>_U or |1>_U of a massless uncharged scalar Unruh mode in the Rindler
/// basis, truncated at nmax. Factors: (I, particle), (II, particle).
fock::LabeledState boson_unruh_state(int occ, double r, int nmax, int mode_id);

/// Charged-scalar expansions; labels carry particle and antiparticle
/// occupations per region, truncated on the total n + m <= nmax.
fock::LabeledState charged_boson_unruh_state(ChargeOcc occ, double r, int nmax, int mode_id);

/// Exact 16-dimensional fermionic expansion in the |i>_I+ |j>_II- |k>_I- |l>_II+
/// factor order.
fock::LabeledState fermion_unruh_state(ChargeOcc occ, double rf, int mode_id);

/// The joint two-mode state: (c1 +- c2)/sqrt(2) for Bell/X families,
/// sin(alpha) c1 + cos(alpha) c2 for alpha families. mode1 -> mode id 0,
/// mode2 -> mode id 1. nmax applies to each bosonic mode.
fock::LabeledState build_state(const StateFamily& family, int nmax);

/// rho = Tr_II |psi><psi|. When trace_region_I_antiparticles is set, the
/// region-I antiparticle factors of fermionic modes are traced out as well
/// (the negativity is unchanged by this).
fock::DensityMatrix reduce_to_region_I(const fock::LabeledState& state,
                                       bool trace_region_I_antiparticles = false);

/// c1 * a + c2 * b over the merged label set. Factor lists must agree.
fock::LabeledState superpose(fock::Complex c1, const fock::LabeledState& a, fock::Complex c2,
                             const fock::LabeledState& b);

}  // namespace unruh::states
