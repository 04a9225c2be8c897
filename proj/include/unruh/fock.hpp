#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <complex>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

namespace unruh::fock {

using Complex = std::complex<double>;
using SparseCd = Eigen::SparseMatrix<Complex>;

enum class Region : std::uint8_t { I, II };
enum class Species : std::uint8_t { Particle, Antiparticle };

/// One tensor factor of an occupation-number basis. The position of a factor
/// in the basis fixes the operator ordering for fermionic sign bookkeeping;
/// it never changes after construction.
struct Factor {
  int mode = 0;
  Region region = Region::I;
  Species species = Species::Particle;
  bool fermionic = false;
  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Occupation numbers, one entry per factor. Fermionic entries are 0/1.
using Occ = std::vector<int>;

struct OccHash {
  std::size_t operator()(const Occ& o) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (int v : o) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ull;
    return h;
  }
};

using FactorPred = std::function<bool(const Factor&)>;

/// An explicitly labeled basis: a fixed ordered factor list plus the sorted
/// list of occupation labels actually present. Kept sparse on purpose; the
/// bosonic towers would make a full cartesian basis enormous.
class Basis {
 public:
  Basis() = default;
  Basis(std::vector<Factor> factors, std::vector<Occ> labels);

  const std::vector<Factor>& factors() const { return factors_; }
  const std::vector<Occ>& labels() const { return labels_; }
  Eigen::Index dim() const { return static_cast<Eigen::Index>(labels_.size()); }
  Eigen::Index index_of(const Occ& label) const;  // -1 if absent
  bool same_factors(const Basis& other) const { return factors_ == other.factors_; }

 private:
  std::vector<Factor> factors_;
  std::vector<Occ> labels_;
  std::unordered_map<Occ, Eigen::Index, OccHash> index_;
};

struct TruncationMeta {
  int cutoff = 0;           // N_max per bosonic mode (0 for purely fermionic)
  double norm_deficit = 0;  // 1 - |psi|^2 lost to truncation
};

struct LabeledState {
  Basis basis;
  Eigen::VectorXcd amps;
  TruncationMeta meta;

  double norm2() const { return amps.squaredNorm(); }
};

struct DensityMatrix {
  Basis basis;
  SparseCd mat;  // dim x dim over basis.labels()
  TruncationMeta meta;

  Eigen::Index dim() const { return basis.dim(); }
  Complex trace() const;
  double purity() const;  // Tr rho^2
  double hermiticity_error() const;
  Eigen::MatrixXcd dense() const { return Eigen::MatrixXcd(mat); }
};

/// Kronecker composite with concatenated factor lists. Rejects overlapping
/// mode ids; amplitudes are stored against the fixed ordered basis, so no
/// fermionic signs arise at composition.
LabeledState tensor(const LabeledState& a, const LabeledState& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// Re-expresses a state over a permuted factor order, applying the fermionic
/// reordering parity per label. perm[i] = index into the old factor list of
/// the factor that lands at position i.
LabeledState reorder_factors(const LabeledState& s, const std::vector<int>& perm);

/// |psi><psi| over the state's own basis.
DensityMatrix project(const LabeledState& s);

/// Tr over the factors NOT selected by `keep`, straight from a pure state.
/// Fermionic factors traced out contribute the parity factor fixed by the
/// basis factor order.
DensityMatrix reduce_pure(const LabeledState& s, const FactorPred& keep);

/// Same contract on a density-matrix input.
DensityMatrix partial_trace(const DensityMatrix& rho, const FactorPred& keep);

/// Index swap on the selected factors only. Trace and Hermiticity preserved
/// exactly; the label set is extended where the swap leaves the original one.
DensityMatrix partial_transpose(const DensityMatrix& rho, const FactorPred& party);

struct Block {
  Eigen::MatrixXcd mat;
  std::vector<Occ> labels;
  std::vector<Eigen::Index> indices;  // positions in the parent basis
};

/// Connected components of the nonzero-structure graph (entries above
/// `threshold`), each returned with its basis labels. Deterministic order
/// (by smallest contained index).
std::vector<Block> block_decompose(const DensityMatrix& rho, double threshold = 1e-14);

struct NegativityResult {
  double total = 0;
  std::vector<double> negative_eigs;
};

/// N = (1/2) sum_j (|lambda_j| - lambda_j) over the eigenvalues of rho_pt,
/// computed block by block. Eigenvalues inside [-eig_floor, eig_floor] count
/// as zero. Rejects inputs that are not Hermitian to 1e-10.
NegativityResult negativity_from_matrix(const DensityMatrix& rho_pt, double eig_floor = 1e-12);

std::string to_string(const Factor& f);
std::string label_to_string(const Basis& basis, const Occ& label);

/// Debug dump as dense CSV rows (row_label, col_label, re, im).
void dump_csv(const DensityMatrix& rho, std::ostream& os);

// Common predicates.
inline FactorPred region_is(Region r) {
  return [r](const Factor& f) { return f.region == r; };
}
inline FactorPred mode_is(int mode) {
  return [mode](const Factor& f) { return f.mode == mode; };
}

}  // namespace unruh::fock
