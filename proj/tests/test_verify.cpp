#include "doctest.h"

#include "uebk/construct.hpp"
#include "uebk/tensor.hpp"
#include "uebk/verify.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace uebk;

TEST_SUITE("verify") {
  TEST_CASE("complement of the smallest row-shift family is one column") {
    const UebkFamily fam = construct_prop1(3, 3, 2);
    const SubspaceBasis comp = complement_basis(fam);
    REQUIRE(comp.size() == 3);
    CHECK(comp.gram_deviation() < 1e-12);

    // Orthogonal to every member.
    for (const BipartiteVector& v : fam.vectors) {
      const Eigen::VectorXcd overlaps = comp.matrix().adjoint() * v.amps();
      CHECK(overlaps.cwiseAbs().maxCoeff() < 1e-10);
    }

    const ComplementSupport sup = complement_support(comp);
    CHECK(sup.row_support == std::vector<int>{0, 1, 2});
    CHECK(sup.col_support == std::vector<int>{2});  // the leftover column block
    CHECK(structural_rank_bound(sup, comp) == 1);
  }

  TEST_CASE("complement dimension equals ambient minus member count") {
    struct Case {
      UebkFamily fam;
      int dim;
    };
    std::vector<Case> cases;
    cases.push_back({construct_prop3(3, 4, 2), 4});
    cases.push_back({construct_prop5(4, 4, 2, 1), 4});
    cases.push_back({construct_prop2(5, 7, 3, 1), 11});
    cases.push_back({construct_eq8(4, 8, 2, 7), 4});
    for (const Case& c : cases) {
      const SubspaceBasis comp = complement_basis(c.fam);
      CHECK(comp.size() == c.dim);
      CHECK(comp.size() + static_cast<int>(c.fam.vectors.size()) ==
            c.fam.params.d * c.fam.params.dprime);
    }
  }

  TEST_CASE("complement supports sit on the leftover blocks") {
    // Column-shift family: the unused row is the last one, sk..d-1.
    const ComplementSupport p3 = complement_support(complement_basis(construct_prop3(3, 4, 2)));
    CHECK(p3.row_support == std::vector<int>{2});
    CHECK(p3.col_support == std::vector<int>{0, 1, 2, 3});

    // Doubly divisible shrink family: the unused column is the last one.
    const ComplementSupport p5 =
        complement_support(complement_basis(construct_prop5(4, 4, 2, 1)));
    CHECK(p5.row_support == std::vector<int>{0, 1, 2, 3});
    CHECK(p5.col_support == std::vector<int>{3});

    // Diagonal-block family: columns m..d'-1.
    const ComplementSupport e8 =
        complement_support(complement_basis(construct_eq8(4, 8, 2, 7)));
    CHECK(e8.col_support == std::vector<int>{7});
  }

  TEST_CASE("complement_basis rejects non-orthonormal families") {
    const UebkFamily literal = construct_prop2(5, 7, 3, 1, Prop2Convention::Literal);
    CHECK_THROWS_AS(complement_basis(literal), std::invalid_argument);
  }

  TEST_CASE("structural bound combines row groups") {
    // The shrunk row-shift family splits into rows seeing only the leftover
    // column and one row seeing everything: bound r + q = 2.
    const UebkFamily fam = construct_prop2(5, 7, 3, 1);
    const SubspaceBasis comp = complement_basis(fam);
    const ComplementSupport sup = complement_support(comp);
    REQUIRE(sup.row_groups.size() == 2);
    CHECK(sup.row_groups[0].size() + sup.row_groups[1].size() == 5);
    CHECK(structural_rank_bound(sup, comp) == 2);

    // Row-shift family at (3,5,2): complement is the single column 4.
    const SubspaceBasis comp1 = complement_basis(construct_prop1(3, 5, 2));
    const ComplementSupport sup1 = complement_support(comp1);
    CHECK(sup1.col_support == std::vector<int>{4});
    CHECK(structural_rank_bound(sup1, comp1) == 1);

    // Full 2x2 space: bound is saturated at 2.
    const SubspaceBasis full(2, 2, Eigen::MatrixXcd::Identity(4, 4));
    CHECK(structural_rank_bound(complement_support(full), full) == 2);
  }

  TEST_CASE("generic rank probe finds the known subspace ranks") {
    CHECK(generic_max_schmidt_rank(complement_basis(construct_prop1(3, 3, 2))) == 1);
    CHECK(generic_max_schmidt_rank(complement_basis(construct_prop2(5, 7, 3, 1))) == 2);
    const SubspaceBasis full(2, 2, Eigen::MatrixXcd::Identity(4, 4));
    CHECK(generic_max_schmidt_rank(full) == 2);
    CHECK(generic_max_schmidt_rank(SubspaceBasis::empty(3, 3)) == 0);
    CHECK_THROWS_AS(generic_max_schmidt_rank(full, 0), std::invalid_argument);
  }

  TEST_CASE("generic rank probe is seed-stable and trial-monotone") {
    const SubspaceBasis comp = complement_basis(construct_prop2(5, 7, 3, 1));
    const int at42 = generic_max_schmidt_rank(comp, 32, 42);
    CHECK(generic_max_schmidt_rank(comp, 32, 7) == at42);
    CHECK(generic_max_schmidt_rank(comp, 32, 1234) == at42);
    CHECK(generic_max_schmidt_rank(comp, 1, 42) <= at42);
    CHECK(generic_max_schmidt_rank(comp, 64, 42) >= at42);
  }

  TEST_CASE("expected counts pair the formula with the complement dimension") {
    const ExpectedCounts p1 = expected_counts({Family::Prop1, 3, 5, 2, std::nullopt, std::nullopt});
    CHECK(p1.member_count == 12);
    CHECK(p1.complement_dim == 3);
    const ExpectedCounts p4 = expected_counts({Family::Prop4, 4, 6, 3, 1, std::nullopt});
    CHECK(p4.member_count == 12);
    CHECK(p4.complement_dim == 12);
    const ExpectedCounts e8 = expected_counts({Family::Eq8, 4, 8, 2, std::nullopt, 7});
    CHECK(e8.member_count == 28);
    CHECK(e8.complement_dim == 4);
    CHECK_THROWS_AS(expected_counts({Family::Prop1, 3, 4, 2, std::nullopt, std::nullopt}),
                    std::invalid_argument);
  }

  TEST_CASE("verify_family passes a known-good family with the certificate") {
    const VerificationReport rep = verify_family(construct_prop5(4, 4, 2, 1));
    CHECK(rep.count_ok);
    CHECK(rep.orthonormal_ok);
    CHECK(rep.max_gram_deviation < 1e-12);
    CHECK(rep.schmidt_ok);
    REQUIRE(rep.complement_dim.has_value());
    CHECK(*rep.complement_dim == 4);
    CHECK(rep.generic_max_rank == 1);
    REQUIRE(rep.certificate_bound.has_value());
    CHECK(*rep.certificate_bound == 1);
    CHECK(rep.unextendible_ok);
    CHECK(rep.pass());
  }

  TEST_CASE("verify_family fails the literal convention at orthonormality") {
    const VerificationReport rep =
        verify_family(construct_prop2(5, 7, 3, 1, Prop2Convention::Literal));
    CHECK(rep.count_ok);
    CHECK_FALSE(rep.orthonormal_ok);
    CHECK(rep.max_gram_deviation == doctest::Approx(1.0).epsilon(1e-9));
    CHECK_FALSE(rep.complement_dim.has_value());  // no complement without orthonormality
    CHECK_FALSE(rep.unextendible_ok);
    CHECK_FALSE(rep.pass());
  }

  TEST_CASE("verify_family flags a member of the wrong Schmidt rank") {
    UebkFamily fam = construct_prop5(4, 4, 2, 1);
    // The span of this family covers the full 4x3 rectangle, so a generic
    // in-span vector has rank 3 = k + 1.
    Eigen::MatrixXcd span(16, fam.vectors.size());
    for (std::size_t i = 0; i < fam.vectors.size(); ++i) span.col(i) = fam.vectors[i].amps();
    const BipartiteVector intruder = random_unit_in_span(SubspaceBasis(4, 4, span), 7);
    REQUIRE(schmidt_rank(intruder) == 3);
    fam.vectors[0] = intruder;

    const VerificationReport rep = verify_family(fam);
    CHECK(rep.count_ok);
    CHECK_FALSE(rep.schmidt_ok);
    CHECK(rep.schmidt_ranks[0] == 3);
    CHECK_FALSE(rep.pass());
  }

  TEST_CASE("verify_family flags a missing member") {
    UebkFamily fam = construct_prop1(3, 3, 2);
    fam.vectors.pop_back();
    fam.labels.pop_back();
    const VerificationReport rep = verify_family(fam);
    CHECK_FALSE(rep.count_ok);
    CHECK(rep.expected_count == 6);
    CHECK(rep.actual_count == 5);
    CHECK(rep.orthonormal_ok);  // the remaining members are still orthonormal
    CHECK_FALSE(rep.pass());
  }

  TEST_CASE("verify_family flags an extendible orthonormal set") {
    // Two product basis vectors: orthonormal, wrong rank, and the huge
    // complement (all of rows 1-2 plus entry (0,2)) holds full-rank vectors.
    UebkFamily fam;
    fam.params = {Family::Prop1, 3, 3, 2, std::nullopt, std::nullopt};
    fam.expected_count = 2;
    Eigen::VectorXcd e0 = Eigen::VectorXcd::Zero(9);
    e0(0) = 1.0;
    Eigen::VectorXcd e1 = Eigen::VectorXcd::Zero(9);
    e1(1) = 1.0;
    fam.vectors.emplace_back(3, 3, e0);
    fam.vectors.emplace_back(3, 3, e1);
    fam.labels = {{0, 0, 1}, {0, 1, 1}};

    const VerificationReport rep = verify_family(fam);
    CHECK_FALSE(rep.count_ok);  // the formula says 6 members
    CHECK(rep.orthonormal_ok);
    CHECK_FALSE(rep.schmidt_ok);  // product states have rank 1
    REQUIRE(rep.complement_dim.has_value());
    CHECK(*rep.complement_dim == 7);
    CHECK(rep.generic_max_rank == 3);
    CHECK_FALSE(rep.unextendible_ok);
    CHECK_FALSE(rep.pass());
  }

  TEST_CASE("verify_family respects the config") {
    VerifyConfig config;
    config.trials = 4;
    config.seed = 999;
    const VerificationReport rep = verify_family(construct_prop1(3, 3, 2), config);
    CHECK(rep.config.trials == 4);
    CHECK(rep.config.seed == 999);
    CHECK(rep.pass());  // probe outcome does not depend on the seed here
  }

  TEST_CASE("certificate is sound for every family up to dprime 8") {
    for (int dp = 3; dp <= 8; ++dp) {
      for (int d = 3; d <= dp; ++d) {
        for (int k = 2; k < d; ++k) {
          for (const FamilyParams& p : enumerate_families(d, dp, k)) {
            const VerificationReport rep = verify_family(construct(p));
            CHECK(rep.pass());
            REQUIRE(rep.certificate_bound.has_value());
            CHECK(*rep.certificate_bound >= rep.generic_max_rank);
            CHECK(*rep.certificate_bound < k);
          }
        }
      }
    }
  }

  TEST_CASE("range of the complement projector matches the complement basis") {
    const UebkFamily fam = construct_prop3(3, 4, 2);
    const SubspaceBasis comp = complement_basis(fam);
    Eigen::MatrixXcd span(12, fam.vectors.size());
    for (std::size_t i = 0; i < fam.vectors.size(); ++i) span.col(i) = fam.vectors[i].amps();
    const Eigen::MatrixXcd residual =
        Eigen::MatrixXcd::Identity(12, 12) - span * span.adjoint();
    // comp spans exactly the range of the residual projector.
    const Eigen::MatrixXcd pc = comp.matrix() * comp.matrix().adjoint();
    CHECK((pc - residual).cwiseAbs().maxCoeff() < 1e-12);
  }
}
