#include "unruh/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace unruh::fock {

namespace {

std::vector<int> pred_indices(const std::vector<Factor>& factors, const FactorPred& pred) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(factors.size()); ++i)
    if (pred(factors[i])) out.push_back(i);
  return out;
}

Occ select(const Occ& label, const std::vector<int>& idx) {
  Occ out(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) out[i] = label[idx[i]];
  return out;
}

/// Parity of sorting the label's fermionic creation operators so that kept
/// factors precede traced ones (relative order within each class preserved).
/// One inversion per (traced occupied q, kept occupied p > q) pair.
int trace_sign(const Occ& label, const std::vector<Factor>& factors,
               const std::vector<char>& keep_mask) {
  int inversions = 0;
  int kept_after = 0;
  for (int q = static_cast<int>(factors.size()) - 1; q >= 0; --q) {
    if (!factors[q].fermionic || label[q] == 0) continue;
    if (keep_mask[q]) {
      ++kept_after;
    } else {
      inversions += kept_after;
    }
  }
  return (inversions % 2) ? -1 : 1;
}

class UnionFind {
 public:
  explicit UnionFind(Eigen::Index n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), Eigen::Index{0});
  }
  Eigen::Index find(Eigen::Index x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(Eigen::Index a, Eigen::Index b) { parent_[find(a)] = find(b); }

 private:
  std::vector<Eigen::Index> parent_;
};

}  // namespace

Basis::Basis(std::vector<Factor> factors, std::vector<Occ> labels)
    : factors_(std::move(factors)), labels_(std::move(labels)) {
  for (const Occ& l : labels_)
    if (l.size() != factors_.size())
      throw std::invalid_argument("fock: label length does not match factor count");
  std::sort(labels_.begin(), labels_.end());
  labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
  index_.reserve(labels_.size());
  for (Eigen::Index i = 0; i < dim(); ++i) index_.emplace(labels_[i], i);
}

Eigen::Index Basis::index_of(const Occ& label) const {
  auto it = index_.find(label);
  return it == index_.end() ? Eigen::Index{-1} : it->second;
}

Complex DensityMatrix::trace() const {
  Complex t = 0;
  for (int k = 0; k < mat.outerSize(); ++k)
    for (SparseCd::InnerIterator it(mat, k); it; ++it)
      if (it.row() == it.col()) t += it.value();
  return t;
}

double DensityMatrix::purity() const {
  // Tr rho^2 = sum_{ij} rho_ij rho_ji = |rho|_F^2 for Hermitian rho
  double p = 0;
  for (int k = 0; k < mat.outerSize(); ++k)
    for (SparseCd::InnerIterator it(mat, k); it; ++it) p += std::norm(it.value());
  return p;
}

double DensityMatrix::hermiticity_error() const {
  SparseCd diff = SparseCd(mat.adjoint()) - mat;
  double m = 0;
  for (int k = 0; k < diff.outerSize(); ++k)
    for (SparseCd::InnerIterator it(diff, k); it; ++it)
      m = std::max(m, std::abs(it.value()));
  return m;
}

namespace {

void check_disjoint_modes(const std::vector<Factor>& a, const std::vector<Factor>& b) {
  for (const Factor& fa : a)
    for (const Factor& fb : b)
      if (fa.mode == fb.mode)
        throw std::invalid_argument("fock: tensor factors share a mode id");
}

std::vector<Factor> concat(const std::vector<Factor>& a, const std::vector<Factor>& b) {
  std::vector<Factor> f = a;
  f.insert(f.end(), b.begin(), b.end());
  return f;
}

Occ concat(const Occ& a, const Occ& b) {
  Occ l = a;
  l.insert(l.end(), b.begin(), b.end());
  return l;
}

}  // namespace

LabeledState tensor(const LabeledState& a, const LabeledState& b) {
  check_disjoint_modes(a.basis.factors(), b.basis.factors());
  std::vector<Occ> labels;
  labels.reserve(a.basis.dim() * b.basis.dim());
  for (const Occ& la : a.basis.labels())
    for (const Occ& lb : b.basis.labels()) labels.push_back(concat(la, lb));
  Basis basis(concat(a.basis.factors(), b.basis.factors()), std::move(labels));
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(basis.dim());
  for (Eigen::Index i = 0; i < a.basis.dim(); ++i)
    for (Eigen::Index j = 0; j < b.basis.dim(); ++j) {
      const Eigen::Index k = basis.index_of(concat(a.basis.labels()[i], b.basis.labels()[j]));
      amps[k] = a.amps[i] * b.amps[j];
    }
  TruncationMeta meta{std::max(a.meta.cutoff, b.meta.cutoff),
                      1.0 - (1.0 - a.meta.norm_deficit) * (1.0 - b.meta.norm_deficit)};
  return {std::move(basis), std::move(amps), meta};
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  check_disjoint_modes(a.basis.factors(), b.basis.factors());
  std::vector<Occ> labels;
  labels.reserve(a.dim() * b.dim());
  for (const Occ& la : a.basis.labels())
    for (const Occ& lb : b.basis.labels()) labels.push_back(concat(la, lb));
  Basis basis(concat(a.basis.factors(), b.basis.factors()), std::move(labels));
  std::vector<Eigen::Triplet<Complex>> trips;
  trips.reserve(static_cast<std::size_t>(a.mat.nonZeros()) * b.mat.nonZeros());
  for (int ka = 0; ka < a.mat.outerSize(); ++ka)
    for (SparseCd::InnerIterator ia(a.mat, ka); ia; ++ia)
      for (int kb = 0; kb < b.mat.outerSize(); ++kb)
        for (SparseCd::InnerIterator ib(b.mat, kb); ib; ++ib) {
          const Eigen::Index r = basis.index_of(
              concat(a.basis.labels()[ia.row()], b.basis.labels()[ib.row()]));
          const Eigen::Index c = basis.index_of(
              concat(a.basis.labels()[ia.col()], b.basis.labels()[ib.col()]));
          trips.emplace_back(r, c, ia.value() * ib.value());
        }
  SparseCd mat(basis.dim(), basis.dim());
  mat.setFromTriplets(trips.begin(), trips.end());
  TruncationMeta meta{std::max(a.meta.cutoff, b.meta.cutoff),
                      1.0 - (1.0 - a.meta.norm_deficit) * (1.0 - b.meta.norm_deficit)};
  return {std::move(basis), std::move(mat), meta};
}

LabeledState reorder_factors(const LabeledState& s, const std::vector<int>& perm) {
  const auto& factors = s.basis.factors();
  if (perm.size() != factors.size())
    throw std::invalid_argument("fock: permutation length mismatch");
  std::vector<Factor> nf(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) nf[i] = factors[perm[i]];
  std::vector<Occ> labels;
  labels.reserve(s.basis.dim());
  std::vector<double> signs(s.basis.dim());
  for (Eigen::Index k = 0; k < s.basis.dim(); ++k) {
    const Occ& l = s.basis.labels()[k];
    Occ nl(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) nl[i] = l[perm[i]];
    // parity of the permutation restricted to occupied fermionic factors
    std::vector<int> occupied;
    for (std::size_t i = 0; i < perm.size(); ++i)
      if (nf[i].fermionic && nl[i] > 0) occupied.push_back(perm[i]);
    int inv = 0;
    for (std::size_t x = 0; x < occupied.size(); ++x)
      for (std::size_t y = x + 1; y < occupied.size(); ++y)
        if (occupied[x] > occupied[y]) ++inv;
    signs[k] = (inv % 2) ? -1.0 : 1.0;
    labels.push_back(std::move(nl));
  }
  Basis basis(std::move(nf), labels);
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(basis.dim());
  for (Eigen::Index k = 0; k < s.basis.dim(); ++k) {
    const Occ& l = s.basis.labels()[k];
    Occ nl(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) nl[i] = l[perm[i]];
    amps[basis.index_of(nl)] = signs[k] * s.amps[k];
  }
  return {std::move(basis), std::move(amps), s.meta};
}

DensityMatrix project(const LabeledState& s) {
  std::vector<Eigen::Triplet<Complex>> trips;
  for (Eigen::Index i = 0; i < s.basis.dim(); ++i) {
    if (s.amps[i] == Complex{}) continue;
    for (Eigen::Index j = 0; j < s.basis.dim(); ++j) {
      if (s.amps[j] == Complex{}) continue;
      trips.emplace_back(i, j, s.amps[i] * std::conj(s.amps[j]));
    }
  }
  SparseCd mat(s.basis.dim(), s.basis.dim());
  mat.setFromTriplets(trips.begin(), trips.end());
  return {s.basis, std::move(mat), s.meta};
}

DensityMatrix reduce_pure(const LabeledState& s, const FactorPred& keep) {
  const auto& factors = s.basis.factors();
  std::vector<char> keep_mask(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) keep_mask[i] = keep(factors[i]) ? 1 : 0;
  const auto kidx = pred_indices(factors, keep);
  std::vector<int> tidx;
  for (int i = 0; i < static_cast<int>(factors.size()); ++i)
    if (!keep_mask[i]) tidx.push_back(i);

  std::vector<Occ> kept_labels;
  kept_labels.reserve(s.basis.dim());
  for (const Occ& l : s.basis.labels()) kept_labels.push_back(select(l, kidx));
  std::vector<Factor> kept_factors;
  for (int i : kidx) kept_factors.push_back(factors[i]);
  Basis basis(std::move(kept_factors), std::move(kept_labels));

  // group amplitudes by traced occupation pattern
  std::unordered_map<Occ, std::vector<std::pair<Eigen::Index, Complex>>, OccHash> groups;
  for (Eigen::Index i = 0; i < s.basis.dim(); ++i) {
    if (s.amps[i] == Complex{}) continue;
    const Occ& l = s.basis.labels()[i];
    const double sign = trace_sign(l, factors, keep_mask);
    groups[select(l, tidx)].emplace_back(basis.index_of(select(l, kidx)), sign * s.amps[i]);
  }
  std::vector<Eigen::Triplet<Complex>> trips;
  for (const auto& [pattern, members] : groups) {
    (void)pattern;
    for (const auto& [ra, va] : members)
      for (const auto& [rb, vb] : members)
        trips.emplace_back(ra, rb, va * std::conj(vb));
  }
  SparseCd mat(basis.dim(), basis.dim());
  mat.setFromTriplets(trips.begin(), trips.end());
  return {std::move(basis), std::move(mat), s.meta};
}

DensityMatrix partial_trace(const DensityMatrix& rho, const FactorPred& keep) {
  const auto& factors = rho.basis.factors();
  std::vector<char> keep_mask(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) keep_mask[i] = keep(factors[i]) ? 1 : 0;
  const auto kidx = pred_indices(factors, keep);
  std::vector<int> tidx;
  for (int i = 0; i < static_cast<int>(factors.size()); ++i)
    if (!keep_mask[i]) tidx.push_back(i);

  std::vector<Occ> kept_labels;
  kept_labels.reserve(rho.dim());
  for (const Occ& l : rho.basis.labels()) kept_labels.push_back(select(l, kidx));
  std::vector<Factor> kept_factors;
  for (int i : kidx) kept_factors.push_back(factors[i]);
  Basis basis(std::move(kept_factors), std::move(kept_labels));

  std::vector<Eigen::Triplet<Complex>> trips;
  const auto& labels = rho.basis.labels();
  for (int k = 0; k < rho.mat.outerSize(); ++k)
    for (SparseCd::InnerIterator it(rho.mat, k); it; ++it) {
      const Occ& lr = labels[it.row()];
      const Occ& lc = labels[it.col()];
      bool match = true;
      for (int t : tidx)
        if (lr[t] != lc[t]) {
          match = false;
          break;
        }
      if (!match) continue;
      const double sign =
          trace_sign(lr, factors, keep_mask) * trace_sign(lc, factors, keep_mask);
      trips.emplace_back(basis.index_of(select(lr, kidx)), basis.index_of(select(lc, kidx)),
                         sign * it.value());
    }
  SparseCd mat(basis.dim(), basis.dim());
  mat.setFromTriplets(trips.begin(), trips.end());
  return {std::move(basis), std::move(mat), rho.meta};
}

DensityMatrix partial_transpose(const DensityMatrix& rho, const FactorPred& party) {
  const auto& factors = rho.basis.factors();
  std::vector<int> pidx = pred_indices(factors, party);
  const auto& labels = rho.basis.labels();

  // label set must be closed under the row/col occupation swap
  std::vector<Occ> all_labels = labels;
  struct Entry {
    Occ r, c;
    Complex v;
  };
  std::vector<Entry> entries;
  entries.reserve(rho.mat.nonZeros());
  for (int k = 0; k < rho.mat.outerSize(); ++k)
    for (SparseCd::InnerIterator it(rho.mat, k); it; ++it) {
      Occ nr = labels[it.row()];
      Occ nc = labels[it.col()];
      for (int p : pidx) std::swap(nr[p], nc[p]);
      all_labels.push_back(nr);
      all_labels.push_back(nc);
      entries.push_back({std::move(nr), std::move(nc), it.value()});
    }
  Basis basis(factors, std::move(all_labels));
  std::vector<Eigen::Triplet<Complex>> trips;
  trips.reserve(entries.size());
  for (const Entry& e : entries)
    trips.emplace_back(basis.index_of(e.r), basis.index_of(e.c), e.v);
  SparseCd mat(basis.dim(), basis.dim());
  mat.setFromTriplets(trips.begin(), trips.end());
  return {std::move(basis), std::move(mat), rho.meta};
}

std::vector<Block> block_decompose(const DensityMatrix& rho, double threshold) {
  const Eigen::Index d = rho.dim();
  UnionFind uf(d);
  for (int k = 0; k < rho.mat.outerSize(); ++k)
    for (SparseCd::InnerIterator it(rho.mat, k); it; ++it)
      if (it.row() != it.col() && std::abs(it.value()) > threshold)
        uf.unite(it.row(), it.col());

  std::unordered_map<Eigen::Index, std::vector<Eigen::Index>> comps;
  for (Eigen::Index i = 0; i < d; ++i) comps[uf.find(i)].push_back(i);
  std::vector<std::vector<Eigen::Index>> ordered;
  ordered.reserve(comps.size());
  for (auto& [root, members] : comps) {
    (void)root;
    std::sort(members.begin(), members.end());
    ordered.push_back(std::move(members));
  }
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  std::vector<Block> blocks;
  blocks.reserve(ordered.size());
  for (auto& members : ordered) {
    Block blk;
    blk.indices = members;
    blk.mat = Eigen::MatrixXcd::Zero(members.size(), members.size());
    std::unordered_map<Eigen::Index, Eigen::Index> pos;
    for (std::size_t i = 0; i < members.size(); ++i) pos[members[i]] = i;
    for (Eigen::Index m : members) {
      for (SparseCd::InnerIterator it(rho.mat, m); it; ++it) {
        auto r = pos.find(it.row());
        if (r != pos.end()) blk.mat(r->second, pos[m]) = it.value();
      }
      blk.labels.push_back(rho.basis.labels()[m]);
    }
    blocks.push_back(std::move(blk));
  }
  return blocks;
}

NegativityResult negativity_from_matrix(const DensityMatrix& rho_pt, double eig_floor) {
  if (rho_pt.hermiticity_error() > 1e-10)
    throw std::invalid_argument("fock: negativity input is not Hermitian");
  NegativityResult res;
  for (const Block& blk : block_decompose(rho_pt)) {
    if (blk.mat.rows() == 1) {
      const double v = blk.mat(0, 0).real();
      if (v < -eig_floor) {
        res.total += -v;
        res.negative_eigs.push_back(v);
      }
      continue;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(blk.mat, Eigen::EigenvaluesOnly);
    for (double ev : es.eigenvalues())
      if (ev < -eig_floor) {
        res.total += -ev;
        res.negative_eigs.push_back(ev);
      }
  }
  std::sort(res.negative_eigs.begin(), res.negative_eigs.end());
  return res;
}

std::string to_string(const Factor& f) {
  std::string s = "m" + std::to_string(f.mode);
  s += (f.region == Region::I) ? ".I" : ".II";
  if (f.fermionic || f.species == Species::Antiparticle)
    s += (f.species == Species::Particle) ? "+" : "-";
  return s;
}

std::string label_to_string(const Basis& basis, const Occ& label) {
  std::string s;
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (i) s += ";";
    s += to_string(basis.factors()[i]) + "=" + std::to_string(label[i]);
  }
  return s;
}

void dump_csv(const DensityMatrix& rho, std::ostream& os) {
  os << "row_label,col_label,re,im\n";
  for (int k = 0; k < rho.mat.outerSize(); ++k)
    for (SparseCd::InnerIterator it(rho.mat, k); it; ++it)
      os << label_to_string(rho.basis, rho.basis.labels()[it.row()]) << ','
         << label_to_string(rho.basis, rho.basis.labels()[it.col()]) << ','
         << it.value().real() << ',' << it.value().imag() << '\n';
}

}  // namespace unruh::fock
