#pragma once

#include "uebk/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace uebk {

/// The seven construction families. Prop1/Prop2 cover d' not a multiple of k,
/// Prop3/Prop4 cover k | d' with k not dividing d, Prop5/Prop6/Eq8 cover the
/// doubly divisible case (Eq8 also builds for k | d alone).
enum class Family { Prop1, Prop2, Prop3, Prop4, Prop5, Prop6, Eq8 };

/// Prop2's row shift admits two readings of the modulus. LITERAL uses
/// d - k + q, which collapses distinct shift blocks and breaks orthonormality
/// whenever 2q < k. REPAIRED uses d - q, which reproduces the member count,
/// the complement decomposition and the rank bound r + q. REPAIRED is the
/// default everywhere; LITERAL is kept to demonstrate the discrepancy.
enum class Prop2Convention { Literal, Repaired };

std::string family_name(Family f);                    // "PROP1" ... "EQ8"
Family family_from_name(const std::string& name);     // accepts "prop1", "PROP1", ...
std::string convention_name(Prop2Convention c);       // "literal" / "repaired"
Prop2Convention convention_from_name(const std::string& name);

/// Discrete parameters selecting one construction. Derived quantities
/// (s, t, r) are always recomputed from (d, d', k), never stored.
struct FamilyParams {
  Family family = Family::Prop1;
  int d = 0;
  int dprime = 0;
  int k = 0;
  std::optional<int> q;                 // PROP2/4/5/6
  std::optional<int> m_offset;          // EQ8
  Prop2Convention prop2_convention = Prop2Convention::Repaired;

  int s() const { return d / k; }
  int t() const { return dprime / k; }
  int r_d() const { return d % k; }
  int r_dprime() const { return dprime % k; }

  /// Throws std::invalid_argument with a parameter diagnostic if the tuple is
  /// out of range for its family. k == d is accepted for PROP1 and EQ8 only
  /// (the UMEB reduction); all other families require k < d.
  void validate() const;

  std::string display_name() const;     // "PROP2 q=1", "EQ8 m=7", ...
  std::string file_key() const;         // "prop2_d5_dp7_k3_q1", ...

  bool operator==(const FamilyParams&) const = default;
};

/// One constructed family: the ordered vectors, their index tuples
/// ((m,n,l), (i,j,m,n) or (i,j,n), all 0-based except l, i, j), and the
/// closed-form member count.
struct UebkFamily {
  FamilyParams params;
  std::vector<BipartiteVector> vectors;
  std::vector<std::vector<int>> labels;
  int expected_count = 0;
};

/// zeta_k^e = exp(2*pi*i*e/k); exactly periodic in e with period k.
cplx phase(int k, long long e);

/// Closed-form member count for admissible params.
int member_count_formula(const FamilyParams& params);

/// Row-shifted construction on the k-column blocks of B, d' = tk + r.
/// Members |phi_mnl>, count t*k*d.
UebkFamily construct_prop1(int d, int dprime, int k);

/// Prop1 with the shift modulus shrunk to d - q (REPAIRED, the default) or
/// kept at d - k + q (LITERAL, retained for regression coverage; it can
/// duplicate members); m ranges over 0..d-q-1. Count (d-q)*t*k. The
/// constructor is permissive within 1 <= q < k - r: families whose repaired
/// modulus d - q drops below k build fine but fail verification.
UebkFamily construct_prop2(int d, int dprime, int k, int q,
                           Prop2Convention convention = Prop2Convention::Repaired);

/// Column-shifted construction for d = sk + r, d' = tk. Count s*t*k^2.
UebkFamily construct_prop3(int d, int dprime, int k);

/// Prop3 with column modulus d' - k + q and the j = t block truncated to
/// m < q. Count s*k*(tk - k + q).
UebkFamily construct_prop4(int d, int dprime, int k, int q);

/// Prop4's formula in the doubly divisible case d = sk, d' = tk.
UebkFamily construct_prop5(int d, int dprime, int k, int q);

/// Mirror of Prop5 with the shift on rows, modulus d - k + q, i = s block
/// truncated. Count t*k*(sk - k + q).
UebkFamily construct_prop6(int d, int dprime, int k, int q);

/// Admissible column moduli m for the EQ8 construction at d = sk:
/// {d'-1..d'-k+1} when d' >= 2d, {d'-1..d'-r} when d < d' < 2d (r = d' mod k,
/// empty for r = 0), empty otherwise. Throws if k does not divide d.
std::vector<int> allowed_m_values(int d, int dprime, int k);

/// Diagonal-block construction |phi_ijn> with column shift mod m_offset.
/// Count s*m_offset*k.
UebkFamily construct_eq8(int d, int dprime, int k, int m_offset);

/// Dispatch on params.family.
UebkFamily construct(const FamilyParams& params);

/// Every admissible FamilyParams at (d, d', k) with 2 <= k < d <= d':
///   k not dividing d'          -> PROP1, PROP2 for each valid q
///   k | d', k not dividing d   -> PROP3, PROP4 for each valid q
///   k | d and k | d'           -> PROP5 and PROP6 for each q, EQ8 for each m
/// "Valid q" keeps only parameters whose family verifies: PROP2 additionally
/// needs q <= d - k (else the repaired row modulus d - q is below k and no
/// Schmidt-rank-k vector fits), PROP4 needs q > d mod k (else the complement
/// keeps rank-k vectors).
std::vector<FamilyParams> enumerate_families(int d, int dprime, int k);

}  // namespace uebk
