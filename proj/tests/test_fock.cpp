#include "unruh/fock.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "unruh/states.hpp"

using namespace unruh;
using namespace unruh::fock;
using doctest::Approx;

namespace {

// Two-level toy mode: a single region-I factor with occupations {0, 1}.
LabeledState qubit(int mode, std::complex<double> c0, std::complex<double> c1) {
  Basis basis({Factor{mode, Region::I, Species::Particle, false}}, {{0}, {1}});
  Eigen::VectorXcd amps(2);
  amps[basis.index_of({0})] = c0;
  amps[basis.index_of({1})] = c1;
  return {std::move(basis), std::move(amps), {}};
}

LabeledState bell_pair(double relative_sign = 1.0) {
  // (|00> + s|11>)/sqrt(2) over two single-factor modes
  Basis basis({Factor{0, Region::I, Species::Particle, false},
               Factor{1, Region::I, Species::Particle, false}},
              {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(4);
  amps[basis.index_of({0, 0})] = 1.0 / std::numbers::sqrt2;
  amps[basis.index_of({1, 1})] = relative_sign / std::numbers::sqrt2;
  return {std::move(basis), std::move(amps), {}};
}

DensityMatrix identity_dm(int mode, int dim) {
  std::vector<Occ> labels;
  for (int i = 0; i < dim; ++i) labels.push_back({i});
  Basis basis({Factor{mode, Region::I, Species::Particle, false}}, std::move(labels));
  SparseCd mat(dim, dim);
  mat.setIdentity();
  return {std::move(basis), std::move(mat), {}};
}

}  // namespace

TEST_CASE("tensor norm multiplicativity and dimensions") {
  auto a = qubit(0, 0.6, 0.8);
  auto b = qubit(1, std::complex<double>(0, 1.0) * 0.48, 0.36);
  auto ab = tensor(a, b);
  CHECK(ab.basis.dim() == 4);
  CHECK(ab.norm2() == Approx(a.norm2() * b.norm2()).epsilon(1e-15));
  CHECK_THROWS_AS(tensor(a, qubit(0, 1, 0)), std::invalid_argument);
}

TEST_CASE("tensor of identities is the identity") {
  auto id4 = tensor(identity_dm(0, 2), identity_dm(1, 2));
  CHECK(id4.dim() == 4);
  CHECK(id4.dense().isApprox(Eigen::MatrixXcd::Identity(4, 4)));
}

TEST_CASE("partial trace of a product state leaves a pure marginal") {
  auto ab = tensor(qubit(0, 0.6, 0.8), qubit(1, 1.0 / std::numbers::sqrt2,
                                             -1.0 / std::numbers::sqrt2));
  auto rho = reduce_pure(ab, mode_is(0));
  CHECK(rho.dim() == 2);
  CHECK(rho.trace().real() == Approx(1.0).epsilon(1e-14));
  CHECK(rho.purity() == Approx(1.0).epsilon(1e-14));
}

TEST_CASE("partial trace of a Bell pair is maximally mixed") {
  auto rho = reduce_pure(bell_pair(), mode_is(0));
  CHECK(rho.dense().isApprox(0.5 * Eigen::MatrixXcd::Identity(2, 2), 1e-14));
}

TEST_CASE("partial transpose is an involution and fixes diagonals") {
  auto rho = reduce_pure(bell_pair(), [](const Factor&) { return true; });
  auto pt = partial_transpose(rho, mode_is(1));
  auto ptpt = partial_transpose(pt, mode_is(1));
  // elementwise exact round trip on the common label set
  for (Eigen::Index i = 0; i < rho.dim(); ++i)
    for (Eigen::Index j = 0; j < rho.dim(); ++j) {
      const Occ& li = rho.basis.labels()[i];
      const Occ& lj = rho.basis.labels()[j];
      const Eigen::Index pi = ptpt.basis.index_of(li);
      const Eigen::Index pj = ptpt.basis.index_of(lj);
      CHECK(ptpt.dense()(pi, pj) == rho.dense()(i, j));
    }
  CHECK(pt.trace().real() == Approx(1.0).epsilon(1e-15));
  CHECK(pt.hermiticity_error() == 0.0);

  // diagonal density matrices are unchanged
  auto diag = identity_dm(0, 3);
  diag.mat *= 1.0 / 3.0;
  auto diag2 = tensor(diag, identity_dm(1, 2));
  auto diag_pt = partial_transpose(diag2, mode_is(1));
  CHECK(diag_pt.dense().isApprox(diag2.dense()));
}

TEST_CASE("negativity of the textbook two-qubit cases") {
  auto rho = reduce_pure(bell_pair(), [](const Factor&) { return true; });
  auto pt = partial_transpose(rho, mode_is(1));
  auto res = negativity_from_matrix(pt);
  CHECK(res.total == Approx(0.5).epsilon(1e-14));
  REQUIRE(res.negative_eigs.size() == 1);
  CHECK(res.negative_eigs[0] == Approx(-0.5).epsilon(1e-14));

  auto mixed = tensor(identity_dm(0, 2), identity_dm(1, 2));
  mixed.mat *= 0.25;
  CHECK(negativity_from_matrix(partial_transpose(mixed, mode_is(1))).total == 0.0);
}

TEST_CASE("negativity rejects non-Hermitian input") {
  auto rho = reduce_pure(bell_pair(), [](const Factor&) { return true; });
  DensityMatrix bad = rho;
  std::vector<Eigen::Triplet<Complex>> trips{{0, 1, Complex(0.5, 0.0)}};
  bad.mat.setFromTriplets(trips.begin(), trips.end());
  CHECK_THROWS_AS(negativity_from_matrix(bad), std::invalid_argument);
}

TEST_CASE("block decomposition") {
  auto diag = identity_dm(0, 5);
  auto blocks = block_decompose(diag);
  CHECK(blocks.size() == 5);
  for (const auto& b : blocks) CHECK(b.mat.rows() == 1);

  // blocks of a Bell pair's partial transpose reproduce the full negativity
  auto rho = reduce_pure(bell_pair(), [](const Factor&) { return true; });
  auto pt = partial_transpose(rho, mode_is(1));
  double per_block = 0;
  for (const auto& b : block_decompose(pt)) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(b.mat, Eigen::EigenvaluesOnly);
    for (double ev : es.eigenvalues())
      if (ev < -1e-12) per_block += -ev;
  }
  CHECK(per_block == Approx(negativity_from_matrix(pt).total).epsilon(1e-12));
}

TEST_CASE("fermionic blocks of Psi+_FF match the per-sector matrices") {
  // rho^pT of Psi+_FF at r_f = pi/6 for both modes, particles and
  // antiparticles kept: four coupled 2x2 blocks
  //   c_eps = (1/2) cos^2 cos^2 [[0, eps cos cos], [eps cos cos, sin^2+sin^2]]
  // scaled by 1, tan^2, tan^2, tan^2 tan^2; the eps = -1 scalings carry the
  // reordering parity of the traced region-II operators.
  const double rf = std::numbers::pi / 6;
  const double c = std::cos(rf), s = std::sin(rf), t2 = std::tan(rf) * std::tan(rf);
  const double pref = 0.5 * c * c * c * c;
  const double off = c * c;  // cos(rf^w) cos(rf^W)
  const double dia = s * s + s * s;

  states::StateFamily fam;
  fam.kind = states::FamilyKind::PsiFF;
  fam.mode1 = {Statistics::Fermion, 1.0, 0.0};
  fam.mode2 = {Statistics::Fermion, 1.0, 0.0};
  // acceleration reproducing r_f = pi/6 at omega = 1
  const double a = -std::numbers::pi / std::log(std::tan(rf));
  fam.mode1.acceleration = a;
  fam.mode2.acceleration = a;
  auto state = states::build_state(fam, 1);
  auto rho = states::reduce_to_region_I(state);
  auto pt = partial_transpose(rho, mode_is(1));

  std::vector<std::pair<double, double>> expected = {
      {1.0, +1.0}, {t2, -1.0}, {t2, +1.0}, {t2 * t2, -1.0}};
  int matched = 0;
  for (const auto& blk : block_decompose(pt)) {
    if (blk.mat.rows() != 2) continue;
    for (auto it = expected.begin(); it != expected.end(); ++it) {
      auto [scale, eps] = *it;
      Eigen::MatrixXcd want(2, 2);
      want << 0.0, eps * off, eps * off, dia;
      want *= pref * scale;
      // label order inside the block is basis order; accept either
      Eigen::MatrixXcd swapped = want;
      std::swap(swapped(0, 0), swapped(1, 1));
      if (blk.mat.isApprox(want, 1e-12) || blk.mat.isApprox(swapped, 1e-12)) {
        ++matched;
        expected.erase(it);
        break;
      }
    }
  }
  CHECK(matched == 4);
  CHECK(expected.empty());
}

TEST_CASE("fermionic sign bookkeeping is invariant under factor reordering") {
  states::StateFamily fam;
  fam.kind = states::FamilyKind::PhiFF;
  fam.mode1 = {Statistics::Fermion, 1.0, 3.0};
  fam.mode2 = {Statistics::Fermion, 1.0, 8.0};
  auto state = states::build_state(fam, 1);

  auto rho1 = states::reduce_to_region_I(state);
  auto n1 = negativity_from_matrix(partial_transpose(rho1, mode_is(1)));

  // interleave the two modes' factors: another legal fixed ordering
  std::vector<int> perm{0, 4, 1, 5, 2, 6, 3, 7};
  auto reordered = reorder_factors(state, perm);
  auto rho2 = reduce_pure(reordered, region_is(Region::I));
  auto n2 = negativity_from_matrix(partial_transpose(rho2, mode_is(1)));

  CHECK(n1.total == Approx(n2.total).epsilon(1e-12));
}

TEST_CASE("negativity does not depend on which party is transposed") {
  states::StateFamily fam;
  fam.kind = states::FamilyKind::PsiFF;
  fam.mode1 = {Statistics::Fermion, 1.0, 4.0};
  fam.mode2 = {Statistics::Fermion, 1.0, 9.0};
  auto rho = states::reduce_to_region_I(states::build_state(fam, 1));
  auto na = negativity_from_matrix(partial_transpose(rho, mode_is(1)));
  auto nb = negativity_from_matrix(partial_transpose(rho, mode_is(0)));
  CHECK(na.total == Approx(nb.total).epsilon(1e-10));
}

TEST_CASE("trace predicates: keep-all copies, keep-none leaves the scalar trace") {
  auto rho = reduce_pure(bell_pair(), [](const Factor&) { return true; });
  auto all = partial_trace(rho, [](const Factor&) { return true; });
  CHECK(all.dense().isApprox(rho.dense(), 1e-15));
  auto none = partial_trace(rho, [](const Factor&) { return false; });
  CHECK(none.dim() == 1);
  CHECK(none.dense()(0, 0).real() == Approx(1.0).epsilon(1e-14));
}

TEST_CASE("csv debug dump has the documented shape") {
  auto rho = reduce_pure(bell_pair(), mode_is(0));
  std::ostringstream os;
  dump_csv(rho, os);
  const std::string text = os.str();
  CHECK(text.rfind("row_label,col_label,re,im\n", 0) == 0);
  CHECK(text.find("m0.I=0") != std::string::npos);
}
