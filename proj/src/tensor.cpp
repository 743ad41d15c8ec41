#include "uebk/tensor.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <numbers>

namespace uebk {

CoefficientMatrix matricize(const BipartiteVector& v) {
  CoefficientMatrix m(v.d(), v.dprime());
  for (int i = 0; i < v.d(); ++i) {
    for (int j = 0; j < v.dprime(); ++j) {
      m(i, j) = v.at(i, j);
    }
  }
  return m;
}

BipartiteVector vectorize(const CoefficientMatrix& m) {
  if (m.rows() < 1 || m.cols() < 1) {
    throw std::invalid_argument("vectorize: empty coefficient matrix");
  }
  BipartiteVector v = BipartiteVector::zero(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      v.at(i, j) = m(i, j);
    }
  }
  return v;
}

std::vector<double> singular_values(const CoefficientMatrix& m) {
  Eigen::JacobiSVD<CoefficientMatrix> svd(m);
  const auto& sv = svd.singularValues();
  return std::vector<double>(sv.data(), sv.data() + sv.size());
}

int schmidt_rank(const BipartiteVector& v, double tol_rank) {
  if (v.norm() < tol_rank) {
    throw std::invalid_argument("schmidt_rank: near-zero vector");
  }
  const std::vector<double> sv = singular_values(matricize(v));
  const double cutoff = tol_rank * sv.front();
  int rank = 0;
  for (double s : sv) {
    if (s > cutoff) ++rank;
  }
  return rank;
}

Eigen::MatrixXcd gram(std::span<const BipartiteVector> vs) {
  const Eigen::Index n = static_cast<Eigen::Index>(vs.size());
  Eigen::MatrixXcd g(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    if (vs[a].d() != vs[0].d() || vs[a].dprime() != vs[0].dprime()) {
      throw std::invalid_argument("gram: vectors do not share (d, d')");
    }
    for (Eigen::Index b = 0; b < n; ++b) {
      g(a, b) = vs[a].amps().dot(vs[b].amps());  // Eigen dot conjugates the first factor
    }
  }
  return g;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer over seed + stream increment
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

// xorshift-free 64-bit generator with Box-Muller, so sampled streams do not
// depend on standard-library distribution internals.
class ComplexGaussianStream {
 public:
  explicit ComplexGaussianStream(std::uint64_t seed) : state_(seed) {}

  cplx next() {
    const double u1 = uniform_open();
    const double u2 = uniform_open();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
  }

 private:
  double uniform_open() {
    // strictly inside (0, 1)
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  std::uint64_t next_u64() {
    state_ = mix_seed(state_, counter_++);
    return state_;
  }

  std::uint64_t state_;
  std::uint64_t counter_ = 0;
};

}  // namespace

BipartiteVector random_unit_in_span(const SubspaceBasis& basis, std::uint64_t seed) {
  if (basis.is_empty()) {
    throw std::invalid_argument("random_unit_in_span: empty basis");
  }
  ComplexGaussianStream stream(seed);
  Eigen::VectorXcd coeff(basis.size());
  for (int i = 0; i < basis.size(); ++i) {
    coeff(i) = stream.next();
  }
  Eigen::VectorXcd combo = basis.matrix() * coeff;
  const double norm = combo.norm();
  if (norm == 0.0) {
    throw std::runtime_error("random_unit_in_span: degenerate sample");
  }
  return BipartiteVector(basis.d(), basis.dprime(), combo / norm);
}

}  // namespace uebk
