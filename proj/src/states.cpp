#include "unruh/states.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace unruh::states {

using fock::Basis;
using fock::Complex;
using fock::Factor;
using fock::LabeledState;
using fock::Occ;
using fock::Region;
using fock::Species;

bool is_alpha_family(FamilyKind k) {
  return k == FamilyKind::PsiAlphaBB || k == FamilyKind::PhiAlphaBB;
}

bool has_bosonic_mode(FamilyKind k) {
  return k != FamilyKind::PsiFF && k != FamilyKind::PhiFF;
}

std::string to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::PsiFF: return "Psi_FF";
    case FamilyKind::PhiFF: return "Phi_FF";
    case FamilyKind::PsiBB: return "Psi_BB";
    case FamilyKind::PhiBB: return "Phi_BB";
    case FamilyKind::X1: return "X1";
    case FamilyKind::X2: return "X2";
    case FamilyKind::PsiBF: return "Psi_BF";
    case FamilyKind::PhiBF: return "Phi_BF";
    case FamilyKind::PsiAlphaBB: return "Psi_alpha_BB";
    case FamilyKind::PhiAlphaBB: return "Phi_alpha_BB";
  }
  return "?";
}

FamilyKind family_from_string(const std::string& name) {
  for (FamilyKind k :
       {FamilyKind::PsiFF, FamilyKind::PhiFF, FamilyKind::PsiBB, FamilyKind::PhiBB,
        FamilyKind::X1, FamilyKind::X2, FamilyKind::PsiBF, FamilyKind::PhiBF,
        FamilyKind::PsiAlphaBB, FamilyKind::PhiAlphaBB})
    if (to_string(k) == name) return k;
  throw std::invalid_argument("unknown state family: " + name);
}

void validate(const StateFamily& f) {
  const Statistics s1 = f.mode1.statistics;
  const Statistics s2 = f.mode2.statistics;
  auto expect = [&](Statistics e1, Statistics e2) {
    if (s1 != e1 || s2 != e2)
      throw std::invalid_argument("state family " + to_string(f.kind) +
                                  ": mode statistics mismatch");
  };
  switch (f.kind) {
    case FamilyKind::PsiFF:
    case FamilyKind::PhiFF:
      expect(Statistics::Fermion, Statistics::Fermion);
      break;
    case FamilyKind::PsiBB:
    case FamilyKind::PhiBB:
    case FamilyKind::PsiAlphaBB:
    case FamilyKind::PhiAlphaBB:
      expect(Statistics::Boson, Statistics::Boson);
      break;
    case FamilyKind::X1:
    case FamilyKind::PsiBF:
    case FamilyKind::PhiBF:
      expect(Statistics::Boson, Statistics::Fermion);
      break;
    case FamilyKind::X2:
      expect(Statistics::ChargedBoson, Statistics::Fermion);
      break;
  }
  if (is_alpha_family(f.kind) &&
      !(f.alpha > 0.0 && f.alpha < std::numbers::pi / 2))
    throw std::invalid_argument("alpha must lie in (0, pi/2)");
  if (!(f.mode1.frequency > 0.0) || !(f.mode2.frequency > 0.0))
    throw std::invalid_argument("mode frequencies must be positive");
  if (f.mode1.acceleration < 0.0 || f.mode2.acceleration < 0.0)
    throw std::invalid_argument("accelerations must be non-negative");
}

ModeExpansion mode_expansion(double r, int nmax) {
  if (nmax < 1) throw std::invalid_argument("mode_expansion: nmax must be >= 1");
  ModeExpansion ex;
  ex.cutoff = nmax;
  ex.a.resize(nmax + 1);
  ex.abar.resize(nmax + 1);
  const double t = std::tanh(r), c = std::cosh(r);
  double tn = 1.0, sum = 0.0;
  for (int n = 0; n <= nmax; ++n) {
    ex.a[n] = tn / c;
    ex.abar[n] = tn * std::sqrt(n + 1.0) / (c * c);
    sum += ex.a[n] * ex.a[n];
    tn *= t;
  }
  ex.norm_deficit = std::max(0.0, 1.0 - sum);
  return ex;
}

namespace {

Factor boson_factor(int mode, Region region, Species species = Species::Particle) {
  return {mode, region, species, false};
}

Factor fermi_factor(int mode, Region region, Species species) {
  return {mode, region, species, true};
}

}  // namespace

LabeledState boson_unruh_state(int occ, double r, int nmax, int mode_id) {
  if (occ != 0 && occ != 1) throw std::invalid_argument("boson occupation must be 0 or 1");
  if (!(r >= 0.0)) throw std::invalid_argument("r must be non-negative");
  std::vector<Factor> factors{boson_factor(mode_id, Region::I),
                              boson_factor(mode_id, Region::II)};
  if (r == 0.0) {
    Basis basis(std::move(factors), {{occ, 0}});
    Eigen::VectorXcd amps(1);
    amps[0] = 1.0;
    return {std::move(basis), std::move(amps), {nmax, 0.0}};
  }
  ModeExpansion ex = mode_expansion(r, nmax);
  std::vector<Occ> labels;
  labels.reserve(nmax + 1);
  for (int n = 0; n <= nmax; ++n)
    labels.push_back(occ == 0 ? Occ{n, n} : Occ{n + 1, n});
  Basis basis(std::move(factors), std::move(labels));
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(basis.dim());
  double sum = 0.0;
  for (int n = 0; n <= nmax; ++n) {
    const double v = (occ == 0) ? ex.a[n] : ex.abar[n];
    amps[basis.index_of(occ == 0 ? Occ{n, n} : Occ{n + 1, n})] = v;
    sum += v * v;
  }
  return {std::move(basis), std::move(amps), {nmax, std::max(0.0, 1.0 - sum)}};
}

LabeledState charged_boson_unruh_state(ChargeOcc occ, double r, int nmax, int mode_id) {
  if (!(r >= 0.0)) throw std::invalid_argument("r must be non-negative");
  std::vector<Factor> factors{
      boson_factor(mode_id, Region::I, Species::Particle),
      boson_factor(mode_id, Region::I, Species::Antiparticle),
      boson_factor(mode_id, Region::II, Species::Particle),
      boson_factor(mode_id, Region::II, Species::Antiparticle)};
  if (r == 0.0) {
    Occ l = occ == ChargeOcc::Vacuum         ? Occ{0, 0, 0, 0}
            : occ == ChargeOcc::ParticleOne  ? Occ{1, 0, 0, 0}
                                             : Occ{0, 1, 0, 0};
    Basis basis(std::move(factors), {l});
    Eigen::VectorXcd amps(1);
    amps[0] = 1.0;
    return {std::move(basis), std::move(amps), {nmax, 0.0}};
  }
  const double t = std::tanh(r), c = std::cosh(r);
  std::vector<Occ> labels;
  std::vector<double> values;
  double sum = 0.0;
  for (int n = 0; n <= nmax; ++n) {
    for (int m = 0; n + m <= nmax; ++m) {
      const double tnm = std::pow(t, n + m);
      double v;
      Occ l;
      switch (occ) {
        case ChargeOcc::Vacuum:
          v = tnm / (c * c);
          l = {n, m, n, m};
          break;
        case ChargeOcc::ParticleOne:
          v = tnm * std::sqrt(n + 1.0) / (c * c * c);
          l = {n + 1, m, n, m};
          break;
        case ChargeOcc::AntiparticleOne:
          v = tnm * std::sqrt(m + 1.0) / (c * c * c);
          l = {n, m + 1, n, m};
          break;
      }
      labels.push_back(l);
      values.push_back(v);
      sum += v * v;
    }
  }
  Basis basis(std::move(factors), labels);
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(basis.dim());
  for (std::size_t i = 0; i < labels.size(); ++i) amps[basis.index_of(labels[i])] = values[i];
  return {std::move(basis), std::move(amps), {nmax, std::max(0.0, 1.0 - sum)}};
}

LabeledState fermion_unruh_state(ChargeOcc occ, double rf, int mode_id) {
  if (!(rf >= 0.0 && rf <= std::numbers::pi / 4 + 1e-12))
    throw std::invalid_argument("r_f must lie in [0, pi/4]");
  // factor order per mode: I+, II-, I-, II+
  std::vector<Factor> factors{
      fermi_factor(mode_id, Region::I, Species::Particle),
      fermi_factor(mode_id, Region::II, Species::Antiparticle),
      fermi_factor(mode_id, Region::I, Species::Antiparticle),
      fermi_factor(mode_id, Region::II, Species::Particle)};
  const double c = std::cos(rf), s = std::sin(rf);
  std::vector<std::pair<Occ, double>> terms;
  switch (occ) {
    case ChargeOcc::Vacuum:
      terms = {{{0, 0, 0, 0}, c * c},
               {{0, 0, 1, 1}, -c * s},
               {{1, 1, 0, 0}, c * s},
               {{1, 1, 1, 1}, -s * s}};
      break;
    case ChargeOcc::ParticleOne:
      terms = {{{1, 0, 0, 0}, c}, {{1, 0, 1, 1}, -s}};
      break;
    case ChargeOcc::AntiparticleOne:
      terms = {{{0, 0, 1, 0}, c}, {{1, 1, 1, 0}, s}};
      break;
  }
  std::vector<Occ> labels;
  for (const auto& [l, v] : terms) labels.push_back(l);
  Basis basis(std::move(factors), labels);
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(basis.dim());
  for (const auto& [l, v] : terms) amps[basis.index_of(l)] = v;
  return {std::move(basis), std::move(amps), {0, 0.0}};
}

LabeledState superpose(Complex c1, const LabeledState& a, Complex c2, const LabeledState& b) {
  if (!a.basis.same_factors(b.basis))
    throw std::invalid_argument("superpose: factor lists differ");
  std::vector<Occ> labels = a.basis.labels();
  labels.insert(labels.end(), b.basis.labels().begin(), b.basis.labels().end());
  Basis basis(a.basis.factors(), std::move(labels));
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(basis.dim());
  for (Eigen::Index i = 0; i < a.basis.dim(); ++i)
    amps[basis.index_of(a.basis.labels()[i])] += c1 * a.amps[i];
  for (Eigen::Index i = 0; i < b.basis.dim(); ++i)
    amps[basis.index_of(b.basis.labels()[i])] += c2 * b.amps[i];
  fock::TruncationMeta meta{std::max(a.meta.cutoff, b.meta.cutoff), 0.0};
  LabeledState out{std::move(basis), std::move(amps), meta};
  out.meta.norm_deficit = std::max(0.0, 1.0 - out.norm2());
  return out;
}

LabeledState build_state(const StateFamily& family, int nmax) {
  validate(family);
  const double r1 = thermo::accel_param(family.mode1.statistics, family.mode1.frequency,
                                        family.mode1.acceleration);
  const double r2 = thermo::accel_param(family.mode2.statistics, family.mode2.frequency,
                                        family.mode2.acceleration);
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  const double sgn = (family.sign == BellSign::Plus) ? 1.0 : -1.0;
  const double w1 = is_alpha_family(family.kind) ? std::sin(family.alpha) : inv_sqrt2;
  const double w2 = is_alpha_family(family.kind) ? std::cos(family.alpha) : sgn * inv_sqrt2;

  auto b = [&](int occ, double r, int id) { return boson_unruh_state(occ, r, nmax, id); };
  auto f = [&](ChargeOcc occ, double rf, int id) { return fermion_unruh_state(occ, rf, id); };

  using fock::tensor;
  switch (family.kind) {
    case FamilyKind::PsiFF:
      return superpose(w1, tensor(f(ChargeOcc::ParticleOne, r1, 0), f(ChargeOcc::Vacuum, r2, 1)),
                       w2, tensor(f(ChargeOcc::Vacuum, r1, 0), f(ChargeOcc::ParticleOne, r2, 1)));
    case FamilyKind::PhiFF:
      return superpose(w1, tensor(f(ChargeOcc::Vacuum, r1, 0), f(ChargeOcc::Vacuum, r2, 1)),
                       w2,
                       tensor(f(ChargeOcc::ParticleOne, r1, 0), f(ChargeOcc::ParticleOne, r2, 1)));
    case FamilyKind::PsiBB:
    case FamilyKind::PsiAlphaBB:
      return superpose(w1, tensor(b(0, r1, 0), b(1, r2, 1)), w2,
                       tensor(b(1, r1, 0), b(0, r2, 1)));
    case FamilyKind::PhiBB:
    case FamilyKind::PhiAlphaBB:
      return superpose(w1, tensor(b(0, r1, 0), b(0, r2, 1)), w2,
                       tensor(b(1, r1, 0), b(1, r2, 1)));
    case FamilyKind::X1:
      return superpose(w1, tensor(b(0, r1, 0), f(ChargeOcc::ParticleOne, r2, 1)), w2,
                       tensor(b(1, r1, 0), f(ChargeOcc::AntiparticleOne, r2, 1)));
    case FamilyKind::X2:
      return superpose(
          w1,
          tensor(charged_boson_unruh_state(ChargeOcc::ParticleOne, r1, nmax, 0),
                 f(ChargeOcc::AntiparticleOne, r2, 1)),
          w2,
          tensor(charged_boson_unruh_state(ChargeOcc::AntiparticleOne, r1, nmax, 0),
                 f(ChargeOcc::ParticleOne, r2, 1)));
    case FamilyKind::PsiBF:
      return superpose(w1, tensor(b(1, r1, 0), f(ChargeOcc::Vacuum, r2, 1)), w2,
                       tensor(b(0, r1, 0), f(ChargeOcc::ParticleOne, r2, 1)));
    case FamilyKind::PhiBF:
      return superpose(w1, tensor(b(0, r1, 0), f(ChargeOcc::Vacuum, r2, 1)), w2,
                       tensor(b(1, r1, 0), f(ChargeOcc::ParticleOne, r2, 1)));
  }
  throw std::logic_error("unreachable");
}

fock::DensityMatrix reduce_to_region_I(const LabeledState& state,
                                       bool trace_region_I_antiparticles) {
  auto rho = fock::reduce_pure(state, fock::region_is(Region::I));
  if (!trace_region_I_antiparticles) return rho;
  return fock::partial_trace(rho, [](const Factor& f) {
    return !(f.fermionic && f.species == Species::Antiparticle);
  });
}

}  // namespace unruh::states
