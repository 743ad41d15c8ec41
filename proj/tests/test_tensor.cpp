#include "doctest.h"

#include "uebk/tensor.hpp"
#include "uebk/types.hpp"

#include <cmath>
#include <complex>
#include <set>
#include <vector>

using namespace uebk;

namespace {

// Test-local generator, independent of the library's stream-splitting RNG.
struct Xorshift {
  std::uint64_t state;
  explicit Xorshift(std::uint64_t s) : state(s ? s : 1) {}
  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  double uniform() { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53; }
  cplx amp() { return {2.0 * uniform() - 1.0, 2.0 * uniform() - 1.0}; }
};

// Random vector with prescribed Schmidt rank: sum of `rank` generic outer
// products of local vectors.
BipartiteVector rank_controlled_vector(int d, int dprime, int rank, Xorshift& rng) {
  CoefficientMatrix m = CoefficientMatrix::Zero(d, dprime);
  for (int a = 0; a < rank; ++a) {
    Eigen::VectorXcd x(d);
    Eigen::VectorXcd y(dprime);
    for (int i = 0; i < d; ++i) x(i) = rng.amp();
    for (int j = 0; j < dprime; ++j) y(j) = rng.amp();
    m += x * y.transpose();
  }
  BipartiteVector v = vectorize(m);
  return BipartiteVector(d, dprime, v.amps() / v.norm());
}

}  // namespace

TEST_SUITE("tensor") {
  TEST_CASE("matricize places amplitude i*dprime+j at entry (i, j)") {
    Eigen::VectorXcd amps(6);
    for (int i = 0; i < 6; ++i) amps(i) = cplx(i + 1, -i);
    const BipartiteVector v(2, 3, amps);
    const CoefficientMatrix m = matricize(v);
    REQUIRE(m.rows() == 2);
    REQUIRE(m.cols() == 3);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 3; ++j) {
        CHECK(m(i, j) == amps(i * 3 + j));
      }
    }
  }

  TEST_CASE("matricize and vectorize are exact inverses") {
    Xorshift rng(11);
    for (auto [d, dp] : std::vector<std::pair<int, int>>{{2, 2}, {3, 5}, {4, 3}, {6, 7}}) {
      Eigen::VectorXcd amps(d * dp);
      for (int i = 0; i < d * dp; ++i) amps(i) = rng.amp();
      const BipartiteVector v(d, dp, amps);
      const BipartiteVector back = vectorize(matricize(v));
      REQUIRE(back.d() == d);
      REQUIRE(back.dprime() == dp);
      for (int i = 0; i < d * dp; ++i) {
        CHECK(back.amps()(i) == amps(i));  // bit-exact both ways
      }
    }
  }

  TEST_CASE("singular values are descending and recover the Bell spectrum") {
    CoefficientMatrix bell(2, 2);
    bell << cplx(1 / std::sqrt(2.0), 0), cplx(0, 0), cplx(0, 0), cplx(1 / std::sqrt(2.0), 0);
    const std::vector<double> sv = singular_values(bell);
    REQUIRE(sv.size() == 2);
    CHECK(sv[0] == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(sv[1] == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-14));

    CoefficientMatrix skew(2, 3);
    skew << cplx(3, 0), cplx(0, 0), cplx(0, 0), cplx(0, 0), cplx(1, 0), cplx(0, 0);
    const std::vector<double> sv2 = singular_values(skew);
    REQUIRE(sv2.size() == 2);
    CHECK(sv2[0] == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(sv2[1] == doctest::Approx(1.0).epsilon(1e-14));
  }

  TEST_CASE("sum of squared singular values equals the squared norm") {
    Xorshift rng(222);
    for (int rep = 0; rep < 10; ++rep) {
      Eigen::VectorXcd amps(12);
      for (int i = 0; i < 12; ++i) amps(i) = rng.amp();
      const BipartiteVector v(3, 4, amps);
      double sq = 0;
      for (double s : singular_values(matricize(v))) sq += s * s;
      CHECK(sq == doctest::Approx(v.norm() * v.norm()).epsilon(1e-12));
    }
  }

  TEST_CASE("schmidt_rank: product state is 1, Bell state is 2") {
    Eigen::VectorXcd prod = Eigen::VectorXcd::Zero(4);
    prod(0) = 1.0;
    CHECK(schmidt_rank(BipartiteVector(2, 2, prod)) == 1);

    Eigen::VectorXcd bell = Eigen::VectorXcd::Zero(4);
    bell(0) = bell(3) = 1 / std::sqrt(2.0);
    CHECK(schmidt_rank(BipartiteVector(2, 2, bell)) == 2);
  }

  TEST_CASE("schmidt_rank rejects the zero vector") {
    CHECK_THROWS_AS(schmidt_rank(BipartiteVector::zero(2, 3)), std::invalid_argument);
  }

  TEST_CASE("schmidt_rank agrees with the reduced-density-matrix rank") {
    // Independent route: rank of rho_A = M M^dagger via its eigenvalues,
    // never touching the SVD path under test.
    Xorshift rng(20260825);
    int checked = 0;
    for (auto [d, dp] : std::vector<std::pair<int, int>>{
             {2, 2}, {2, 3}, {3, 3}, {3, 5}, {4, 4}, {4, 7}, {5, 6}, {6, 8}}) {
      const int max_rank = std::min(d, dp);
      for (int rank = 1; rank <= max_rank && checked < 120; ++rank) {
        for (int rep = 0; rep < 4; ++rep, ++checked) {
          const BipartiteVector v = rank_controlled_vector(d, dp, rank, rng);
          const CoefficientMatrix m = matricize(v);
          Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m * m.adjoint());
          const double top = es.eigenvalues().maxCoeff();
          int reduced_rank = 0;
          for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
            if (es.eigenvalues()(i) > 1e-12 * top) ++reduced_rank;
          }
          CHECK(schmidt_rank(v) == rank);
          CHECK(reduced_rank == rank);
        }
      }
    }
    CHECK(checked >= 100);
  }

  TEST_CASE("gram is conjugate-linear in the first argument") {
    Eigen::VectorXcd e0 = Eigen::VectorXcd::Zero(4);
    e0(0) = 1.0;
    const BipartiteVector a(2, 2, e0);
    const BipartiteVector b(2, 2, cplx(0, 1) * e0);
    std::vector<BipartiteVector> vs{a, b};
    const Eigen::MatrixXcd g = gram(vs);
    CHECK(std::abs(g(0, 1) - cplx(0, 1)) < 1e-15);   // <a|i a> = i
    CHECK(std::abs(g(1, 0) - cplx(0, -1)) < 1e-15);  // <i a|a> = -i
    CHECK(std::abs(g(0, 0) - cplx(1, 0)) < 1e-15);
  }

  TEST_CASE("gram requires matching dimensions") {
    std::vector<BipartiteVector> vs{BipartiteVector::zero(2, 2), BipartiteVector::zero(2, 3)};
    CHECK_THROWS_AS(gram(vs), std::invalid_argument);
  }

  TEST_CASE("mix_seed separates streams deterministically") {
    CHECK(mix_seed(42, 0) == mix_seed(42, 0));
    CHECK(mix_seed(42, 0) != mix_seed(42, 1));
    CHECK(mix_seed(42, 0) != mix_seed(43, 0));
    std::set<std::uint64_t> seen;
    for (std::uint64_t s = 0; s < 64; ++s) seen.insert(mix_seed(42, s));
    CHECK(seen.size() == 64);
  }

  TEST_CASE("random_unit_in_span is deterministic, normalized, and in-span") {
    // Two-dimensional subspace of a 2x3 space.
    Eigen::MatrixXcd basis = Eigen::MatrixXcd::Zero(6, 2);
    basis(0, 0) = 1.0;
    basis(4, 1) = 1.0;
    const SubspaceBasis sub(2, 3, basis);

    const BipartiteVector v1 = random_unit_in_span(sub, 42);
    const BipartiteVector v2 = random_unit_in_span(sub, 42);
    const BipartiteVector v3 = random_unit_in_span(sub, 43);
    CHECK((v1.amps() - v2.amps()).norm() == 0.0);  // identical draw
    CHECK((v1.amps() - v3.amps()).norm() > 1e-3);
    CHECK(v1.norm() == doctest::Approx(1.0).epsilon(1e-12));
    // Residual after projecting back onto the span vanishes.
    const Eigen::VectorXcd residual = v1.amps() - basis * (basis.adjoint() * v1.amps());
    CHECK(residual.norm() < 1e-12);
  }

  TEST_CASE("random_unit_in_span rejects an empty basis") {
    CHECK_THROWS_AS(random_unit_in_span(SubspaceBasis::empty(2, 2), 42), std::invalid_argument);
  }

  TEST_CASE("BipartiteVector validates dimensions") {
    CHECK_THROWS_AS(BipartiteVector(2, 3, Eigen::VectorXcd::Zero(5)), std::invalid_argument);
    CHECK_THROWS_AS(BipartiteVector(0, 3, Eigen::VectorXcd::Zero(0)), std::invalid_argument);
  }
}
