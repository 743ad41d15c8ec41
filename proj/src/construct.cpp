#include "uebk/construct.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace uebk {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

std::string tuple_str(const FamilyParams& p) {
  return "(d=" + std::to_string(p.d) + ", d'=" + std::to_string(p.dprime) +
         ", k=" + std::to_string(p.k) + ")";
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::Prop1: return "PROP1";
    case Family::Prop2: return "PROP2";
    case Family::Prop3: return "PROP3";
    case Family::Prop4: return "PROP4";
    case Family::Prop5: return "PROP5";
    case Family::Prop6: return "PROP6";
    case Family::Eq8: return "EQ8";
  }
  throw std::logic_error("family_name: unknown enum value");
}

Family family_from_name(const std::string& name) {
  std::string up = name;
  std::transform(up.begin(), up.end(), up.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (up == "PROP1") return Family::Prop1;
  if (up == "PROP2") return Family::Prop2;
  if (up == "PROP3") return Family::Prop3;
  if (up == "PROP4") return Family::Prop4;
  if (up == "PROP5") return Family::Prop5;
  if (up == "PROP6") return Family::Prop6;
  if (up == "EQ8") return Family::Eq8;
  fail("unknown family '" + name + "' (expected prop1..prop6 or eq8)");
}

std::string convention_name(Prop2Convention c) {
  return c == Prop2Convention::Literal ? "literal" : "repaired";
}

Prop2Convention convention_from_name(const std::string& name) {
  std::string low = name;
  std::transform(low.begin(), low.end(), low.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (low == "literal") return Prop2Convention::Literal;
  if (low == "repaired") return Prop2Convention::Repaired;
  fail("unknown convention '" + name + "' (expected literal or repaired)");
}

void FamilyParams::validate() const {
  const std::string where = family_name(family) + " " + tuple_str(*this);
  if (k < 2) fail(where + ": k must be at least 2");
  // k == d is the maximally entangled reduction; only the row-shift family
  // and the diagonal-block family stay well-formed there.
  const bool k_may_equal_d = family == Family::Prop1 || family == Family::Eq8;
  if (k_may_equal_d ? (d < k) : (d <= k)) {
    fail(where + ": requires " + (k_may_equal_d ? "k <= d" : "k < d"));
  }
  if (dprime < d) fail(where + ": requires d <= d'");

  const bool wants_q = family == Family::Prop2 || family == Family::Prop4 ||
                       family == Family::Prop5 || family == Family::Prop6;
  if (wants_q && !q) fail(where + ": parameter q is required");
  if (!wants_q && q) fail(where + ": parameter q does not apply to this family");
  if (family == Family::Eq8 && !m_offset) fail(where + ": parameter m is required");
  if (family != Family::Eq8 && m_offset) {
    fail(where + ": parameter m does not apply to this family");
  }

  switch (family) {
    case Family::Prop1:
      if (r_dprime() == 0) {
        fail(where + ": requires d' = t*k + r with 0 < r < k (k must not divide d')");
      }
      break;
    case Family::Prop2: {
      if (r_dprime() == 0) {
        fail(where + ": requires d' = t*k + r with 0 < r < k (k must not divide d')");
      }
      const int r = r_dprime();
      if (k - r <= 1) {
        fail(where + ": k - r = " + std::to_string(k - r) +
             " admits no q (need 1 <= q < k - r)");
      }
      if (*q < 1 || *q >= k - r) {
        fail(where + ": q=" + std::to_string(*q) + " out of range 1 <= q < k - r = " +
             std::to_string(k - r));
      }
      break;
    }
    case Family::Prop3:
      if (r_d() == 0) {
        fail(where + ": requires d = s*k + r with 0 < r < k (k must not divide d)");
      }
      if (r_dprime() != 0) fail(where + ": requires d' = t*k (k must divide d')");
      break;
    case Family::Prop4: {
      if (r_d() == 0) {
        fail(where + ": requires d = s*k + r with 0 < r < k (k must not divide d)");
      }
      if (r_dprime() != 0) fail(where + ": requires d' = t*k (k must divide d')");
      const int r = r_d();
      // Either the printed range q < k - r or the repaired range q > r; with
      // r = k - 1 both are empty.
      const bool printed = *q >= 1 && *q < k - r;
      const bool repaired = *q > r && *q <= k - 1;
      if (!printed && !repaired) {
        if (r == k - 1) {
          fail(where + ": r = k - 1 admits no q");
        }
        fail(where + ": q=" + std::to_string(*q) +
             " out of range (need 1 <= q < k - r or r < q <= k - 1, r = d mod k = " +
             std::to_string(r) + ")");
      }
      break;
    }
    case Family::Prop5:
    case Family::Prop6:
      if (r_d() != 0) fail(where + ": requires d = s*k (k must divide d)");
      if (r_dprime() != 0) fail(where + ": requires d' = t*k (k must divide d')");
      if (*q < 1 || *q >= k) {
        fail(where + ": q=" + std::to_string(*q) + " out of range 1 <= q < k");
      }
      break;
    case Family::Eq8: {
      if (r_d() != 0) fail(where + ": requires d = s*k (k must divide d)");
      const std::vector<int> allowed = allowed_m_values(d, dprime, k);
      if (std::find(allowed.begin(), allowed.end(), *m_offset) == allowed.end()) {
        std::string set = "{";
        for (std::size_t i = 0; i < allowed.size(); ++i) {
          if (i) set += ", ";
          set += std::to_string(allowed[i]);
        }
        set += "}";
        fail(where + ": m=" + std::to_string(*m_offset) +
             " is not admissible; allowed values " + set);
      }
      break;
    }
  }
}

std::string FamilyParams::display_name() const {
  std::string out = family_name(family);
  if (q) out += " q=" + std::to_string(*q);
  if (m_offset) out += " m=" + std::to_string(*m_offset);
  if (family == Family::Prop2 && prop2_convention == Prop2Convention::Literal) {
    out += " [literal]";
  }
  return out;
}

std::string FamilyParams::file_key() const {
  std::string out = family_name(family);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  out += "_d" + std::to_string(d) + "_dp" + std::to_string(dprime) + "_k" + std::to_string(k);
  if (q) out += "_q" + std::to_string(*q);
  if (m_offset) out += "_m" + std::to_string(*m_offset);
  if (family == Family::Prop2 && prop2_convention == Prop2Convention::Literal) {
    out += "_literal";
  }
  return out;
}

cplx phase(int k, long long e) {
  if (k < 1) fail("phase: k must be at least 1");
  const long long em = ((e % k) + k) % k;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(em) / k);
}

int member_count_formula(const FamilyParams& p) {
  const bool wants_q = p.family == Family::Prop2 || p.family == Family::Prop4 ||
                       p.family == Family::Prop5 || p.family == Family::Prop6;
  if (wants_q && !p.q) fail(family_name(p.family) + ": parameter q is required");
  if (p.family == Family::Eq8 && !p.m_offset) fail("EQ8: parameter m is required");
  if (p.k < 1) fail(family_name(p.family) + ": k must be positive");
  switch (p.family) {
    case Family::Prop1: return p.t() * p.k * p.d;
    case Family::Prop2: return (p.d - *p.q) * p.t() * p.k;
    case Family::Prop3: return p.s() * p.t() * p.k * p.k;
    case Family::Prop4:
    case Family::Prop5: return p.s() * p.k * (p.t() * p.k - p.k + *p.q);
    case Family::Prop6: return p.t() * p.k * (p.s() * p.k - p.k + *p.q);
    case Family::Eq8: return p.s() * *p.m_offset * p.k;
  }
  throw std::logic_error("member_count_formula: unknown family");
}

namespace {

/// Shared emit step: one member = k amplitudes zeta_k^{np}/sqrt(k) placed at
/// (row(p), col(p)). Column (or row) positions are always distinct across p,
/// so no flat index is written twice.
void emit_member(UebkFamily& fam, std::vector<int> label,
                 const std::function<int(int)>& row_of, const std::function<int(int)>& col_of,
                 int n) {
  const int d = fam.params.d;
  const int dp = fam.params.dprime;
  const int k = fam.params.k;
  const double a = 1.0 / std::sqrt(static_cast<double>(k));
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(d) * dp);
  for (int p = 0; p < k; ++p) {
    const Eigen::Index flat = static_cast<Eigen::Index>(row_of(p)) * dp + col_of(p);
    v(flat) += a * phase(k, static_cast<long long>(n) * p);
  }
  fam.vectors.emplace_back(d, dp, std::move(v));
  fam.labels.push_back(std::move(label));
}

UebkFamily build_prop1(const FamilyParams& pr) {
  UebkFamily fam{pr, {}, {}, member_count_formula(pr)};
  const int d = pr.d, k = pr.k, t = pr.t();
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < k; ++n)
      for (int l = 1; l <= t; ++l) {
        emit_member(
            fam, {m, n, l}, [&](int p) { return (p + m) % d; },
            [&](int p) { return (l - 1) * k + p; }, n);
      }
  return fam;
}

UebkFamily build_prop2(const FamilyParams& pr) {
  UebkFamily fam{pr, {}, {}, member_count_formula(pr)};
  const int d = pr.d, k = pr.k, t = pr.t(), q = *pr.q;
  const int row_mod = pr.prop2_convention == Prop2Convention::Repaired ? d - q : d - k + q;
  for (int m = 0; m < d - q; ++m)
    for (int n = 0; n < k; ++n)
      for (int l = 1; l <= t; ++l) {
        emit_member(
            fam, {m, n, l}, [&](int p) { return (p + m) % row_mod; },
            [&](int p) { return (l - 1) * k + p; }, n);
      }
  return fam;
}

UebkFamily build_prop3(const FamilyParams& pr) {
  UebkFamily fam{pr, {}, {}, member_count_formula(pr)};
  const int dp = pr.dprime, k = pr.k, s = pr.s(), t = pr.t();
  for (int i = 1; i <= s; ++i)
    for (int j = 1; j <= t; ++j)
      for (int m = 0; m < k; ++m)
        for (int n = 0; n < k; ++n) {
          emit_member(
              fam, {i, j, m, n}, [&](int p) { return (i - 1) * k + p; },
              [&](int p) { return ((j - 1) * k + p + m) % dp; }, n);
        }
  return fam;
}

// Props 4 and 5 share one formula; they differ only in which dimension pairs
// are admissible.
UebkFamily build_prop45(const FamilyParams& pr) {
  UebkFamily fam{pr, {}, {}, member_count_formula(pr)};
  const int dp = pr.dprime, k = pr.k, s = pr.s(), t = pr.t(), q = *pr.q;
  const int col_mod = dp - k + q;
  for (int i = 1; i <= s; ++i)
    for (int j = 1; j <= t; ++j)
      for (int m = 0; m < k; ++m) {
        if (j == t && m >= q) continue;  // excluded shifts in the last block
        for (int n = 0; n < k; ++n) {
          emit_member(
              fam, {i, j, m, n}, [&](int p) { return (i - 1) * k + p; },
              [&](int p) { return ((j - 1) * k + p + m) % col_mod; }, n);
        }
      }
  return fam;
}

UebkFamily build_prop6(const FamilyParams& pr) {
  UebkFamily fam{pr, {}, {}, member_count_formula(pr)};
  const int d = pr.d, k = pr.k, s = pr.s(), t = pr.t(), q = *pr.q;
  const int row_mod = d - k + q;
  for (int i = 1; i <= s; ++i)
    for (int j = 1; j <= t; ++j)
      for (int m = 0; m < k; ++m) {
        if (i == s && m >= q) continue;  // excluded shifts in the last block
        for (int n = 0; n < k; ++n) {
          emit_member(
              fam, {i, j, m, n}, [&](int p) { return ((i - 1) * k + p + m) % row_mod; },
              [&](int p) { return (j - 1) * k + p; }, n);
        }
      }
  return fam;
}

UebkFamily build_eq8(const FamilyParams& pr) {
  UebkFamily fam{pr, {}, {}, member_count_formula(pr)};
  const int k = pr.k, s = pr.s(), mo = *pr.m_offset;
  for (int i = 1; i <= s; ++i)
    for (int j = 0; j < mo; ++j)
      for (int n = 0; n < k; ++n) {
        emit_member(
            fam, {i, j, n}, [&](int p) { return (i - 1) * k + p; },
            [&](int p) { return ((i - 1) * k + p + j) % mo; }, n);
      }
  return fam;
}

}  // namespace

std::vector<int> allowed_m_values(int d, int dprime, int k) {
  if (k < 1) fail("allowed_m_values: k must be at least 1");
  if (d % k != 0) {
    fail("allowed_m_values: d=" + std::to_string(d) + " is not a multiple of k=" +
         std::to_string(k));
  }
  std::vector<int> out;
  if (dprime >= 2 * d) {
    for (int m = dprime - 1; m >= dprime - k + 1; --m) out.push_back(m);
  } else if (dprime > d) {
    const int r = dprime % k;
    for (int m = dprime - 1; m >= dprime - r; --m) out.push_back(m);
  }
  return out;
}

UebkFamily construct(const FamilyParams& params) {
  params.validate();
  UebkFamily fam = [&] {
    switch (params.family) {
      case Family::Prop1: return build_prop1(params);
      case Family::Prop2: return build_prop2(params);
      case Family::Prop3: return build_prop3(params);
      case Family::Prop4:
      case Family::Prop5: return build_prop45(params);
      case Family::Prop6: return build_prop6(params);
      case Family::Eq8: return build_eq8(params);
    }
    throw std::logic_error("construct: unknown family");
  }();
  if (static_cast<int>(fam.vectors.size()) != fam.expected_count) {
    throw std::logic_error(params.display_name() + ": generated " +
                           std::to_string(fam.vectors.size()) + " members, formula says " +
                           std::to_string(fam.expected_count));
  }
  return fam;
}

UebkFamily construct_prop1(int d, int dprime, int k) {
  return construct({Family::Prop1, d, dprime, k, std::nullopt, std::nullopt});
}

UebkFamily construct_prop2(int d, int dprime, int k, int q, Prop2Convention convention) {
  return construct({Family::Prop2, d, dprime, k, q, std::nullopt, convention});
}

UebkFamily construct_prop3(int d, int dprime, int k) {
  return construct({Family::Prop3, d, dprime, k, std::nullopt, std::nullopt});
}

UebkFamily construct_prop4(int d, int dprime, int k, int q) {
  return construct({Family::Prop4, d, dprime, k, q, std::nullopt});
}

UebkFamily construct_prop5(int d, int dprime, int k, int q) {
  return construct({Family::Prop5, d, dprime, k, q, std::nullopt});
}

UebkFamily construct_prop6(int d, int dprime, int k, int q) {
  return construct({Family::Prop6, d, dprime, k, q, std::nullopt});
}

UebkFamily construct_eq8(int d, int dprime, int k, int m_offset) {
  return construct({Family::Eq8, d, dprime, k, std::nullopt, m_offset});
}

std::vector<FamilyParams> enumerate_families(int d, int dprime, int k) {
  if (k < 2 || k >= d || d > dprime) {
    fail("enumerate_families: requires 2 <= k < d <= d' (got d=" + std::to_string(d) +
         ", d'=" + std::to_string(dprime) + ", k=" + std::to_string(k) + ")");
  }
  std::vector<FamilyParams> out;
  const auto add = [&](FamilyParams p) {
    p.validate();
    out.push_back(std::move(p));
  };
  const int r_d = d % k;
  const int r_dp = dprime % k;
  if (r_dp != 0) {
    add({Family::Prop1, d, dprime, k, std::nullopt, std::nullopt});
    // The shrunk-modulus variant also needs q <= d - k, else the repaired row
    // modulus d - q leaves fewer than k rows and the members degenerate.
    const int q_max = std::min(k - r_dp - 1, d - k);
    for (int q = 1; q <= q_max; ++q) {
      add({Family::Prop2, d, dprime, k, q, std::nullopt, Prop2Convention::Repaired});
    }
  } else if (r_d != 0) {
    add({Family::Prop3, d, dprime, k, std::nullopt, std::nullopt});
    // Only q > r leaves a complement free of Schmidt-rank-k vectors; see the
    // verification module's structural bound r + (k - q).
    for (int q = r_d + 1; q <= k - 1; ++q) {
      add({Family::Prop4, d, dprime, k, q, std::nullopt});
    }
  } else {
    for (int q = 1; q <= k - 1; ++q) {
      add({Family::Prop5, d, dprime, k, q, std::nullopt});
    }
    for (int q = 1; q <= k - 1; ++q) {
      add({Family::Prop6, d, dprime, k, q, std::nullopt});
    }
    for (int m : allowed_m_values(d, dprime, k)) {
      add({Family::Eq8, d, dprime, k, std::nullopt, m});
    }
  }
  return out;
}

}  // namespace uebk
