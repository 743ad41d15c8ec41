#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace uebk {

using cplx = std::complex<double>;

/// Matricized view of a bipartite state: entry (i, j) is the amplitude of |i>|j'>.
using CoefficientMatrix = Eigen::MatrixXcd;

// Default tolerances. Constructions are exact to machine precision, so the
// margins are generous.
inline constexpr double kDefaultOrthTol = 1e-10;
inline constexpr double kDefaultRankTol = 1e-9;
inline constexpr int kDefaultTrials = 32;
inline constexpr std::uint64_t kDefaultSeed = 42;

/// Pure state of a d x d' bipartite system, stored over the product basis.
/// Flat index i*d' + j holds the amplitude of |i>|j'>.
class BipartiteVector {
 public:
  BipartiteVector(int d, int dprime, Eigen::VectorXcd amps)
      : d_(d), dprime_(dprime), amps_(std::move(amps)) {
    if (d_ < 1 || dprime_ < 1) {
      throw std::invalid_argument("BipartiteVector: dimensions must be positive");
    }
    if (amps_.size() != static_cast<Eigen::Index>(d_) * dprime_) {
      throw std::invalid_argument("BipartiteVector: amplitude length " +
                                  std::to_string(amps_.size()) + " does not match d*d' = " +
                                  std::to_string(d_ * dprime_));
    }
  }

  static BipartiteVector zero(int d, int dprime) {
    return BipartiteVector(d, dprime, Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(d) * dprime));
  }

  int d() const { return d_; }
  int dprime() const { return dprime_; }
  int dim() const { return d_ * dprime_; }

  const Eigen::VectorXcd& amps() const { return amps_; }
  Eigen::VectorXcd& amps() { return amps_; }

  cplx at(int i, int j) const { return amps_(static_cast<Eigen::Index>(i) * dprime_ + j); }
  cplx& at(int i, int j) { return amps_(static_cast<Eigen::Index>(i) * dprime_ + j); }

  double norm() const { return amps_.norm(); }

 private:
  int d_;
  int dprime_;
  Eigen::VectorXcd amps_;
};

/// Ordered orthonormal spanning set of a subspace of the d*d'-dimensional
/// space. Vectors are the columns of matrix().
class SubspaceBasis {
 public:
  SubspaceBasis(int d, int dprime, Eigen::MatrixXcd vectors)
      : d_(d), dprime_(dprime), vectors_(std::move(vectors)) {
    if (d_ < 1 || dprime_ < 1) {
      throw std::invalid_argument("SubspaceBasis: dimensions must be positive");
    }
    if (vectors_.rows() != static_cast<Eigen::Index>(d_) * dprime_) {
      throw std::invalid_argument("SubspaceBasis: vector length does not match ambient dimension");
    }
  }

  static SubspaceBasis empty(int d, int dprime) {
    return SubspaceBasis(d, dprime, Eigen::MatrixXcd(static_cast<Eigen::Index>(d) * dprime, 0));
  }

  int d() const { return d_; }
  int dprime() const { return dprime_; }
  int ambient_dim() const { return d_ * dprime_; }
  int size() const { return static_cast<int>(vectors_.cols()); }
  bool is_empty() const { return vectors_.cols() == 0; }

  const Eigen::MatrixXcd& matrix() const { return vectors_; }

  BipartiteVector vector(int idx) const {
    return BipartiteVector(d_, dprime_, vectors_.col(idx));
  }

  /// Max absolute deviation of the Gram matrix from the identity.
  double gram_deviation() const {
    if (is_empty()) return 0.0;
    Eigen::MatrixXcd g = vectors_.adjoint() * vectors_;
    g -= Eigen::MatrixXcd::Identity(g.rows(), g.cols());
    return g.cwiseAbs().maxCoeff();
  }

 private:
  int d_;
  int dprime_;
  Eigen::MatrixXcd vectors_;  // ambient_dim x size
};

}  // namespace uebk
