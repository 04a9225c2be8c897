#include "unruh/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace unruh::ent {

using fock::Basis;
using fock::Block;
using fock::DensityMatrix;
using fock::Factor;
using fock::FactorPred;
using fock::Occ;

namespace {

/// Occupation string of one mode inside a label: bosons print the integer,
/// fermionic/charged modes print 0, 1+, 1-, 1+1-, 2+1-, ...
std::string mode_occ_string(const Basis& basis, const Occ& label, int mode) {
  int particles = -1, antiparticles = -1;
  bool plain_boson = false;
  int plain_count = 0;
  for (std::size_t i = 0; i < label.size(); ++i) {
    const Factor& f = basis.factors()[i];
    if (f.mode != mode) continue;
    if (!f.fermionic && f.species == fock::Species::Particle && particles < 0 &&
        antiparticles < 0) {
      plain_boson = true;
    }
    if (f.species == fock::Species::Particle) {
      particles = label[i];
      plain_count = label[i];
    } else {
      antiparticles = label[i];
      plain_boson = false;
    }
  }
  if (plain_boson && antiparticles < 0) return std::to_string(plain_count);
  std::string s;
  if (particles > 0)
    s += (particles == 1 ? "1+" : std::to_string(particles) + "+");
  if (antiparticles > 0)
    s += (antiparticles == 1 ? "1-" : std::to_string(antiparticles) + "-");
  if (s.empty()) s = "0";
  return s;
}

std::string sector_label(const Basis& basis, const Block& blk, int index) {
  std::vector<int> modes;
  for (const Factor& f : basis.factors())
    if (std::find(modes.begin(), modes.end(), f.mode) == modes.end()) modes.push_back(f.mode);
  std::sort(modes.begin(), modes.end());
  if (blk.labels.size() == 2 && modes.size() == 2) {
    auto one = [&](const Occ& l) {
      return mode_occ_string(basis, l, modes[0]) + "," + mode_occ_string(basis, l, modes[1]);
    };
    return "N(" + one(blk.labels[0]) + "|" + one(blk.labels[1]) + ")";
  }
  return "block" + std::to_string(index) + ":d" + std::to_string(blk.labels.size());
}

}  // namespace

NegativityReport negativity(const DensityMatrix& rho, const FactorPred& party,
                            double eig_floor) {
  bool any = false, all = true;
  for (const Factor& f : rho.basis.factors()) {
    if (party(f)) any = true;
    else all = false;
  }
  if (!any || all)
    throw std::invalid_argument("negativity: party split must select a proper factor subset");

  DensityMatrix pt = fock::partial_transpose(rho, party);
  if (pt.hermiticity_error() > 1e-10)
    throw std::invalid_argument("negativity: partially transposed matrix is not Hermitian");

  NegativityReport rep;
  rep.meta = rho.meta;
  rep.eig_floor = eig_floor;
  int index = 0;
  for (const Block& blk : fock::block_decompose(pt)) {
    double n = 0;
    if (blk.mat.rows() == 1) {
      const double v = blk.mat(0, 0).real();
      if (v < -eig_floor) n = -v;
    } else {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(blk.mat, Eigen::EigenvaluesOnly);
      for (double ev : es.eigenvalues())
        if (ev < -eig_floor) n += -ev;
    }
    if (n > 0) {
      rep.sectors.push_back(
          {sector_label(pt.basis, blk, index), n, static_cast<int>(blk.mat.rows())});
      rep.total += n;
    }
    ++index;
  }
  std::sort(rep.sectors.begin(), rep.sectors.end(),
            [](const Sector& a, const Sector& b) {
              return a.negativity != b.negativity ? a.negativity > b.negativity
                                                  : a.label < b.label;
            });
  return rep;
}

std::vector<Sector> sector_negativities(const DensityMatrix& rho, const FactorPred& party,
                                        double eig_floor) {
  return negativity(rho, party, eig_floor).sectors;
}

double von_neumann_entropy(const DensityMatrix& rho, double floor) {
  double s = 0;
  for (const Block& blk : fock::block_decompose(rho)) {
    if (blk.mat.rows() == 1) {
      const double v = blk.mat(0, 0).real();
      if (v > floor) s -= v * std::log(v);
      continue;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(blk.mat, Eigen::EigenvaluesOnly);
    for (double ev : es.eigenvalues())
      if (ev > floor) s -= ev * std::log(ev);
  }
  return s;
}

CorrelationReport mutual_information(const DensityMatrix& rho, int mode1, int mode2) {
  CorrelationReport rep;
  rep.entropy_nats = von_neumann_entropy(rho);
  rep.marginal_entropy_1 = von_neumann_entropy(fock::partial_trace(rho, fock::mode_is(mode1)));
  rep.marginal_entropy_2 = von_neumann_entropy(fock::partial_trace(rho, fock::mode_is(mode2)));
  rep.mutual_information_bits =
      (rep.marginal_entropy_1 + rep.marginal_entropy_2 - rep.entropy_nats) / std::numbers::ln2;
  return rep;
}

PointEval evaluate(const states::StateFamily& family, const TruncationConfig& trunc,
                   bool want_correlations) {
  states::validate(family);
  const bool bosonic = states::has_bosonic_mode(family.kind);

  auto measure = [&](int nmax) {
    auto state = states::build_state(family, nmax);
    auto rho = states::reduce_to_region_I(state);
    PointEval pe;
    pe.negativity = negativity(rho, fock::mode_is(1));
    pe.nmax_used = nmax;
    pe.norm_deficit = state.meta.norm_deficit;
    if (want_correlations) {
      pe.correlations = mutual_information(rho);
      pe.has_correlations = true;
    }
    return pe;
  };

  if (!bosonic || trunc.fixed_nmax > 0) {
    PointEval pe = measure(bosonic ? trunc.fixed_nmax : 1);
    pe.converged = !bosonic || pe.norm_deficit < trunc.norm_tol;
    if (!bosonic) pe.nmax_used = 0;
    return pe;
  }
  // accelerations zero: the expansions are exact at any cutoff
  if (family.mode1.acceleration == 0.0 && family.mode2.acceleration == 0.0)
    return measure(trunc.start_nmax);

  PointEval prev = measure(trunc.start_nmax);
  for (int nmax = trunc.start_nmax * 2; nmax <= trunc.max_nmax; nmax *= 2) {
    PointEval cur = measure(nmax);
    const double shift = std::abs(cur.negativity.total - prev.negativity.total);
    if (cur.norm_deficit < trunc.norm_tol && shift < trunc.negativity_tol) {
      cur.converged = true;
      return cur;
    }
    prev = std::move(cur);
  }
  prev.converged = false;
  return prev;
}

}  // namespace unruh::ent
