#include "uebk/mixed_state.hpp"

#include "uebk/verify.hpp"

#include <stdexcept>
#include <string>

namespace uebk {

namespace {
// Absolute eigenvalue cut for range extraction; the spectra in scope are
// exactly {0, 1/(dd'-m)} up to rounding.
constexpr double kRangeEigTol = 1e-10;
}  // namespace

DensityMatrix rho_perp(const UebkFamily& family) {
  const int d = family.params.d;
  const int dp = family.params.dprime;
  if (d < 1 || dp < 1) {
    throw std::invalid_argument("rho_perp: family params carry no valid dimensions");
  }
  const Eigen::Index n = static_cast<Eigen::Index>(d) * dp;
  const Eigen::Index m = static_cast<Eigen::Index>(family.vectors.size());
  if (m >= n) {
    throw std::invalid_argument("rho_perp: member count " + std::to_string(m) +
                                " leaves no complement in dimension " + std::to_string(n));
  }
  Eigen::MatrixXcd span(n, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const BipartiteVector& v = family.vectors[static_cast<std::size_t>(i)];
    if (v.d() != d || v.dprime() != dp) {
      throw std::invalid_argument("rho_perp: vector dimensions disagree with params");
    }
    span.col(i) = v.amps();
  }
  if (m > 0) {
    Eigen::MatrixXcd g = span.adjoint() * span;
    g -= Eigen::MatrixXcd::Identity(m, m);
    const double dev = g.cwiseAbs().maxCoeff();
    if (dev > kDefaultOrthTol) {
      throw std::invalid_argument("rho_perp: family is not orthonormal (max Gram deviation " +
                                  std::to_string(dev) + ")");
    }
  }

  DensityMatrix rho;
  rho.d = d;
  rho.dprime = dp;
  rho.origin = family.params;
  Eigen::MatrixXcd projector = Eigen::MatrixXcd::Identity(n, n);
  if (m > 0) projector -= span * span.adjoint();
  rho.entries = projector / static_cast<double>(n - m);
  // Exact Hermitian symmetry despite rounding in the outer products.
  rho.entries = (rho.entries + rho.entries.adjoint().eval()) / 2.0;
  return rho;
}

RangeSchmidtBound range_schmidt_bound(const DensityMatrix& rho, int k, int trials,
                                      std::uint64_t seed, double tol_rank) {
  if (k < 1) throw std::invalid_argument("range_schmidt_bound: k must be at least 1");
  if (rho.d < 1 || rho.dprime < 1 || rho.entries.rows() != rho.dim() ||
      rho.entries.cols() != rho.dim()) {
    throw std::invalid_argument("range_schmidt_bound: malformed density matrix");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.entries);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("range_schmidt_bound: eigendecomposition failed");
  }
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    if (es.eigenvalues()(i) > kRangeEigTol) keep.push_back(i);
  }
  if (keep.empty()) {
    throw std::invalid_argument("range_schmidt_bound: zero state (empty range)");
  }
  Eigen::MatrixXcd range(rho.dim(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t j = 0; j < keep.size(); ++j) {
    range.col(static_cast<Eigen::Index>(j)) = es.eigenvectors().col(keep[j]);
  }
  const SubspaceBasis basis(rho.d, rho.dprime, std::move(range));
  const int observed = generic_max_schmidt_rank(basis, trials, seed, tol_rank);
  return {observed, observed < k};
}

}  // namespace uebk
