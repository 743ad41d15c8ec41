#pragma once

#include "uebk/types.hpp"

#include <span>
#include <vector>

namespace uebk {

/// Reshape a bipartite vector into its d x d' coefficient matrix,
/// entries(i, j) = amps[i*d' + j]. Exact (bit-identical) in both directions.
CoefficientMatrix matricize(const BipartiteVector& v);

/// Inverse of matricize.
BipartiteVector vectorize(const CoefficientMatrix& m);

/// Singular values of the coefficient matrix, sorted descending.
/// These are the Schmidt coefficients of the corresponding state.
std::vector<double> singular_values(const CoefficientMatrix& m);

/// Number of singular values above tol_rank * sigma_max. Equals the rank of
/// the reduced state. Rejects vectors with norm below tol_rank.
int schmidt_rank(const BipartiteVector& v, double tol_rank = kDefaultRankTol);

/// Gram matrix G(a, b) = <v_a|v_b>, conjugate-linear in the first argument.
/// All vectors must share (d, d').
Eigen::MatrixXcd gram(std::span<const BipartiteVector> vs);

/// Unit-norm pseudo-random combination of the basis vectors. Deterministic
/// for a fixed seed; coefficients are i.i.d. standard complex Gaussians.
BipartiteVector random_unit_in_span(const SubspaceBasis& basis, std::uint64_t seed);

/// Deterministic stream-splitting for per-trial seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace uebk
