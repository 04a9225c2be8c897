#pragma once

#include "unruh/fock.hpp"
#include "unruh/states.hpp"

#include <string>
#include <vector>

namespace unruh::ent {

struct Sector {
  std::string label;
  double negativity = 0;
  int block_dim = 0;
};

/// Total negativity plus the per-block breakdown of the partially transposed
/// matrix. The sector sum equals the total by eigenvalue additivity over
/// direct sums.
struct NegativityReport {
  double total = 0;
  std::vector<Sector> sectors;  // nonzero sectors, descending negativity
  fock::TruncationMeta meta;
  double eig_floor = 1e-12;
};

/// Partial transpose on the factors selected by `party`, block decomposition,
/// per-block and total negativity.
NegativityReport negativity(const fock::DensityMatrix& rho, const fock::FactorPred& party,
                            double eig_floor = 1e-12);

std::vector<Sector> sector_negativities(const fock::DensityMatrix& rho,
                                        const fock::FactorPred& party,
                                        double eig_floor = 1e-12);

/// -sum lambda ln lambda in nats; eigenvalues below `floor` contribute 0.
double von_neumann_entropy(const fock::DensityMatrix& rho, double floor = 1e-14);

struct CorrelationReport {
  double entropy_nats = 0;
  double marginal_entropy_1 = 0;  // mode1 kept
  double marginal_entropy_2 = 0;
  double mutual_information_bits = 0;
};

/// I = [S(rho_1) + S(rho_2) - S(rho)] / ln 2 between the two mode parties.
CorrelationReport mutual_information(const fock::DensityMatrix& rho, int mode1 = 0,
                                     int mode2 = 1);

struct TruncationConfig {
  int start_nmax = 20;
  double norm_tol = 1e-8;
  double negativity_tol = 1e-8;
  int max_nmax = 1280;
  int fixed_nmax = 0;  // > 0 disables the adaptive ladder
};

/// One fully evaluated parameter point of a state family on the numeric path.
struct PointEval {
  NegativityReport negativity;
  CorrelationReport correlations;
  bool has_correlations = false;
  int nmax_used = 0;
  double norm_deficit = 0;
  bool converged = true;
};

/// Build, reduce to region I and measure one family. Bosonic cutoffs follow
/// the adaptive ladder: start at start_nmax and double until the norm deficit
/// and the negativity shift both clear their tolerances. Purely fermionic
/// families are exact in one pass.
PointEval evaluate(const states::StateFamily& family, const TruncationConfig& trunc = {},
                   bool want_correlations = false);

}  // namespace unruh::ent
