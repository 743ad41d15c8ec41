#pragma once

#include "uebk/construct.hpp"
#include "uebk/types.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace uebk {

/// Tolerances and randomized-probe parameters for verification.
struct VerifyConfig {
  double tol_orth = kDefaultOrthTol;   // Gram deviation, singular values, supports
  double tol_rank = kDefaultRankTol;   // relative singular value cutoff for ranks
  int trials = kDefaultTrials;         // random vectors sampled in the complement
  std::uint64_t seed = kDefaultSeed;

  bool operator==(const VerifyConfig&) const = default;
};

/// Which rows/columns of the coefficient matrix the complement basis touches,
/// plus the partition of the touched rows by identical column signature. The
/// partition feeds the structural rank certificate: a matrix supported on
/// these rows has rank at most the sum over groups of min(#rows, #cols).
struct ComplementSupport {
  std::vector<int> row_support;              // sorted ascending
  std::vector<int> col_support;              // sorted ascending
  std::vector<std::vector<int>> row_groups;  // partition of row_support
  std::vector<std::vector<int>> group_cols;  // column signature of each group

  bool operator==(const ComplementSupport&) const = default;
};

/// Member count from the closed formula and the complementary dimension.
struct ExpectedCounts {
  int member_count = 0;
  int complement_dim = 0;
};

/// Everything verify_family measured, with one flag per claimed property.
/// Complement-derived fields are absent when the family is not orthonormal
/// (the orthocomplement of a non-orthonormal "basis" proves nothing).
struct VerificationReport {
  FamilyParams params;
  VerifyConfig config;

  bool count_ok = false;
  int expected_count = 0;
  int actual_count = 0;

  bool orthonormal_ok = false;
  double max_gram_deviation = 0.0;

  bool schmidt_ok = false;
  std::vector<int> schmidt_ranks;
  double max_singular_deviation = 0.0;  // vs the flat spectrum k^{-1/2}

  std::optional<int> complement_dim;
  std::optional<ComplementSupport> support;
  int generic_max_rank = 0;                  // 0 until the probe runs
  std::optional<int> certificate_bound;      // attached only when < k (conclusive)
  bool unextendible_ok = false;

  bool pass() const {
    return count_ok && orthonormal_ok && schmidt_ok && unextendible_ok &&
           (!certificate_bound || *certificate_bound < params.k);
  }
};

/// Orthonormal basis of the orthocomplement of span(family): project the
/// d*d' coordinate vectors with I - sum |phi><phi| and orthonormalize with
/// column pivoting at threshold tol. Throws if the family itself is not
/// orthonormal within tol.
SubspaceBasis complement_basis(const UebkFamily& family, double tol = kDefaultOrthTol);

/// Rows/columns touched by the basis at amplitude threshold tol, with the
/// row partition by column signature.
ComplementSupport complement_support(const SubspaceBasis& basis, double tol = kDefaultOrthTol);

/// min(|col_support|, |row_support|, sum over groups of min(#rows, #cols)):
/// an upper bound on the Schmidt rank of every vector in the subspace.
int structural_rank_bound(const ComplementSupport& support, const SubspaceBasis& basis);

/// Max Schmidt rank over `trials` seeded random unit vectors in the span.
/// Deterministic for a fixed seed; 0 for an empty basis. The maximum rank
/// over a matrix subspace is attained on a Zariski-open set, so generic
/// samples reach it with probability 1.
int generic_max_schmidt_rank(const SubspaceBasis& basis, int trials = kDefaultTrials,
                             std::uint64_t seed = kDefaultSeed,
                             double tol_rank = kDefaultRankTol);

/// Closed-form member count and d*d' minus it. Throws on inadmissible params.
ExpectedCounts expected_counts(const FamilyParams& params);

/// Run every check; never throws on a bad family — failures land in the
/// report. Checks in order: count vs formula, Gram vs identity, per-vector
/// Schmidt rank k with flat spectrum, then (if orthonormal) complement
/// extraction, structural certificate, and the randomized rank probe.
VerificationReport verify_family(const UebkFamily& family, const VerifyConfig& config = {});

}  // namespace uebk
