#pragma once

#include "uebk/construct.hpp"
#include "uebk/types.hpp"

#include <cstdint>

namespace uebk {

/// Dense density operator on the d*d'-dimensional bipartite space, tagged
/// with the family it complements.
struct DensityMatrix {
  int d = 0;
  int dprime = 0;
  Eigen::MatrixXcd entries;  // (d*d') x (d*d'), Hermitian
  FamilyParams origin;

  int dim() const { return d * dprime; }
};

/// The complementary state (I - sum |phi><phi|) / (d*d' - m): the normalized
/// projector onto the orthocomplement of the family's span. Throws when the
/// family is not orthonormal or when m == d*d' (nothing left to project on).
DensityMatrix rho_perp(const UebkFamily& family);

/// Result of probing the range of a density matrix for high Schmidt rank.
struct RangeSchmidtBound {
  int max_rank_observed = 0;
  bool below_k = false;
};

/// Orthonormalize the range of rho (eigenvectors with eigenvalue above an
/// absolute 1e-10 cut) and run the randomized max-rank probe on it. Throws
/// on the zero state.
RangeSchmidtBound range_schmidt_bound(const DensityMatrix& rho, int k,
                                      int trials = kDefaultTrials,
                                      std::uint64_t seed = kDefaultSeed,
                                      double tol_rank = kDefaultRankTol);

}  // namespace uebk
