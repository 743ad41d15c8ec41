#include "uebk/verify.hpp"

#include "uebk/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

namespace uebk {

SubspaceBasis complement_basis(const UebkFamily& family, double tol) {
  const int d = family.params.d;
  const int dp = family.params.dprime;
  if (d < 1 || dp < 1) {
    throw std::invalid_argument("complement_basis: family params carry no valid dimensions");
  }
  const Eigen::Index n = static_cast<Eigen::Index>(d) * dp;
  const Eigen::Index m = static_cast<Eigen::Index>(family.vectors.size());
  Eigen::MatrixXcd span(n, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const BipartiteVector& v = family.vectors[static_cast<std::size_t>(i)];
    if (v.d() != d || v.dprime() != dp) {
      throw std::invalid_argument("complement_basis: vector dimensions disagree with params");
    }
    span.col(i) = v.amps();
  }
  if (m > 0) {
    Eigen::MatrixXcd g = span.adjoint() * span;
    g -= Eigen::MatrixXcd::Identity(m, m);
    const double dev = g.cwiseAbs().maxCoeff();
    if (dev > tol) {
      throw std::invalid_argument("complement_basis: family is not orthonormal (max Gram deviation " +
                                  std::to_string(dev) + ")");
    }
  }

  // Residual columns of the projector I - sum |phi><phi| span the complement.
  // Rank-revealing modified Gram-Schmidt: repeatedly peel off the largest
  // remaining column until everything left is numerical noise.
  Eigen::MatrixXcd residual = Eigen::MatrixXcd::Identity(n, n);
  if (m > 0) residual -= span * span.adjoint();
  const double pivot_tol = std::max(tol, 1e-14);
  std::vector<Eigen::VectorXcd> accepted;
  while (true) {
    Eigen::Index best_col = -1;
    double best_norm = pivot_tol;
    for (Eigen::Index j = 0; j < n; ++j) {
      const double nrm = residual.col(j).norm();
      if (nrm > best_norm) {
        best_norm = nrm;
        best_col = j;
      }
    }
    if (best_col < 0) break;
    Eigen::VectorXcd u = residual.col(best_col) / best_norm;
    // One re-orthogonalization pass keeps the basis orthonormal to machine
    // precision even after many deflations.
    if (m > 0) u -= span * (span.adjoint() * u);
    for (const Eigen::VectorXcd& c : accepted) u -= c * c.dot(u);
    u /= u.norm();
    accepted.push_back(u);
    residual -= u * (u.adjoint() * residual);
  }

  Eigen::MatrixXcd basis(n, static_cast<Eigen::Index>(accepted.size()));
  for (Eigen::Index j = 0; j < basis.cols(); ++j) basis.col(j) = accepted[static_cast<std::size_t>(j)];
  return SubspaceBasis(d, dp, std::move(basis));
}

ComplementSupport complement_support(const SubspaceBasis& basis, double tol) {
  const int d = basis.d();
  const int dp = basis.dprime();
  std::vector<std::vector<bool>> present(static_cast<std::size_t>(d),
                                         std::vector<bool>(static_cast<std::size_t>(dp), false));
  for (int c = 0; c < basis.size(); ++c) {
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < dp; ++j) {
        if (std::abs(basis.matrix()(static_cast<Eigen::Index>(i) * dp + j, c)) > tol) {
          present[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
        }
      }
    }
  }

  ComplementSupport out;
  std::map<std::vector<int>, std::vector<int>> by_signature;
  std::vector<bool> col_touched(static_cast<std::size_t>(dp), false);
  for (int i = 0; i < d; ++i) {
    std::vector<int> signature;
    for (int j = 0; j < dp; ++j) {
      if (present[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
        signature.push_back(j);
        col_touched[static_cast<std::size_t>(j)] = true;
      }
    }
    if (!signature.empty()) {
      out.row_support.push_back(i);
      by_signature[signature].push_back(i);
    }
  }
  for (int j = 0; j < dp; ++j) {
    if (col_touched[static_cast<std::size_t>(j)]) out.col_support.push_back(j);
  }

  // Deterministic group order: by smallest row index.
  std::vector<std::pair<std::vector<int>, std::vector<int>>> groups(by_signature.begin(),
                                                                    by_signature.end());
  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) { return a.second.front() < b.second.front(); });
  for (auto& [cols, rows] : groups) {
    out.row_groups.push_back(std::move(rows));
    out.group_cols.push_back(std::move(cols));
  }
  return out;
}

int structural_rank_bound(const ComplementSupport& support, const SubspaceBasis& basis) {
  for (int i : support.row_support) {
    if (i < 0 || i >= basis.d()) {
      throw std::invalid_argument("structural_rank_bound: row support outside 0..d-1");
    }
  }
  for (int j : support.col_support) {
    if (j < 0 || j >= basis.dprime()) {
      throw std::invalid_argument("structural_rank_bound: column support outside 0..d'-1");
    }
  }
  if (support.row_support.empty() || support.col_support.empty()) return 0;
  int by_groups = 0;
  for (std::size_t g = 0; g < support.row_groups.size(); ++g) {
    by_groups += static_cast<int>(
        std::min(support.row_groups[g].size(), support.group_cols[g].size()));
  }
  return std::min({static_cast<int>(support.col_support.size()),
                   static_cast<int>(support.row_support.size()), by_groups});
}

int generic_max_schmidt_rank(const SubspaceBasis& basis, int trials, std::uint64_t seed,
                             double tol_rank) {
  if (trials < 1) throw std::invalid_argument("generic_max_schmidt_rank: trials must be >= 1");
  if (basis.is_empty()) return 0;
  int max_rank = 0;
  for (int t = 0; t < trials; ++t) {
    const BipartiteVector v = random_unit_in_span(basis, mix_seed(seed, static_cast<std::uint64_t>(t)));
    max_rank = std::max(max_rank, schmidt_rank(v, tol_rank));
  }
  return max_rank;
}

ExpectedCounts expected_counts(const FamilyParams& params) {
  params.validate();
  const int members = member_count_formula(params);
  return {members, params.d * params.dprime - members};
}

VerificationReport verify_family(const UebkFamily& family, const VerifyConfig& config) {
  VerificationReport rep;
  rep.params = family.params;
  rep.config = config;
  const int k = family.params.k;

  rep.actual_count = static_cast<int>(family.vectors.size());
  rep.expected_count = family.expected_count;
  try {
    rep.expected_count = member_count_formula(family.params);
  } catch (const std::exception&) {
    // Malformed params: fall back to the count stored with the family.
  }
  rep.count_ok = rep.actual_count == rep.expected_count;

  try {
    Eigen::MatrixXcd g = gram(family.vectors);
    if (g.rows() > 0) {
      g -= Eigen::MatrixXcd::Identity(g.rows(), g.cols());
      rep.max_gram_deviation = g.cwiseAbs().maxCoeff();
    }
    rep.orthonormal_ok = rep.max_gram_deviation <= config.tol_orth;
  } catch (const std::exception&) {
    rep.max_gram_deviation = std::numeric_limits<double>::infinity();
    rep.orthonormal_ok = false;
  }

  const double target = 1.0 / std::sqrt(static_cast<double>(k));
  bool ranks_ok = true;
  for (const BipartiteVector& v : family.vectors) {
    int rank = 0;
    try {
      const std::vector<double> sv = singular_values(matricize(v));
      if (!sv.empty() && sv.front() > 0.0) {
        for (double s : sv) {
          if (s > config.tol_rank * sv.front()) ++rank;
        }
      }
      for (std::size_t a = 0; a < sv.size(); ++a) {
        const double dev = a < static_cast<std::size_t>(k) ? std::abs(sv[a] - target) : sv[a];
        rep.max_singular_deviation = std::max(rep.max_singular_deviation, dev);
      }
      if (sv.size() < static_cast<std::size_t>(k)) {
        rep.max_singular_deviation = std::max(rep.max_singular_deviation, target);
      }
    } catch (const std::exception&) {
      rep.max_singular_deviation = std::numeric_limits<double>::infinity();
    }
    rep.schmidt_ranks.push_back(rank);
    if (rank != k) ranks_ok = false;
  }
  rep.schmidt_ok = ranks_ok && rep.max_singular_deviation <= config.tol_orth;

  if (rep.orthonormal_ok) {
    try {
      const SubspaceBasis comp = complement_basis(family, config.tol_orth);
      rep.complement_dim = comp.size();
      rep.support = complement_support(comp, config.tol_orth);
      const int bound = structural_rank_bound(*rep.support, comp);
      if (bound < k) rep.certificate_bound = bound;
      rep.generic_max_rank =
          generic_max_schmidt_rank(comp, config.trials, config.seed, config.tol_rank);
      rep.unextendible_ok = rep.generic_max_rank < k;
    } catch (const std::exception&) {
      rep.unextendible_ok = false;
    }
  }

  return rep;
}

}  // namespace uebk
