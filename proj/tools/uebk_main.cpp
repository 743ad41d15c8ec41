#include "CLI11.hpp"

#include "uebk/construct.hpp"
#include "uebk/io.hpp"
#include "uebk/mixed_state.hpp"
#include "uebk/tensor.hpp"
#include "uebk/verify.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace uebk;

std::optional<std::uint64_t> seed_from_env() {
  const char* s = std::getenv("UEBK_SEED");
  if (!s || !*s) return std::nullopt;
  char* end = nullptr;
  errno = 0;
  const unsigned long long v = std::strtoull(s, &end, 10);
  if (errno != 0 || end == s || *end != '\0') {
    throw std::invalid_argument("UEBK_SEED must be a nonnegative integer, got '" +
                                std::string(s) + "'");
  }
  return v;
}

std::string fmt_e(double x) {
  if (!std::isfinite(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", x);
  return buf;
}

std::string dims_str(const FamilyParams& p) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "(d=%d, d'=%d, k=%d)", p.d, p.dprime, p.k);
  return buf;
}

std::string headline(const FamilyParams& p) { return p.display_name() + " " + dims_str(p); }

void print_report(const VerificationReport& rep) {
  std::printf("%s\n", headline(rep.params).c_str());
  std::printf("  count:        %s (expected %d, actual %d)\n", rep.count_ok ? "ok" : "FAIL",
              rep.expected_count, rep.actual_count);
  std::printf("  orthonormal:  %s (max Gram deviation %s)\n", rep.orthonormal_ok ? "ok" : "FAIL",
              fmt_e(rep.max_gram_deviation).c_str());
  int rank_hits = 0;
  for (int r : rep.schmidt_ranks) {
    if (r == rep.params.k) ++rank_hits;
  }
  std::printf("  schmidt:      %s (%d/%zu vectors rank %d, max singular deviation %s)\n",
              rep.schmidt_ok ? "ok" : "FAIL", rank_hits, rep.schmidt_ranks.size(), rep.params.k,
              fmt_e(rep.max_singular_deviation).c_str());
  const std::string cdim = rep.complement_dim ? std::to_string(*rep.complement_dim) : "n/a";
  const std::string cert =
      rep.certificate_bound ? std::to_string(*rep.certificate_bound) : "none";
  std::printf("  unextendible: %s (complement dim %s, generic max rank %d, certificate %s)\n",
              rep.unextendible_ok ? "ok" : "FAIL", cdim.c_str(), rep.generic_max_rank,
              cert.c_str());
  std::printf("  verdict: %s\n", rep.pass() ? "PASS" : "FAIL");
}

int run_construct(const std::string& family_id, int d, int dprime, int k, std::optional<int> q,
                  std::optional<int> m, const std::string& convention,
                  const std::string& out_path) {
  FamilyParams params;
  params.family = family_from_name(family_id);
  params.d = d;
  params.dprime = dprime;
  params.k = k;
  params.q = q;
  params.m_offset = m;
  params.prop2_convention = convention_from_name(convention);
  const UebkFamily fam = construct(params);
  save_family(fam, out_path);
  std::printf("%s: %d members -> %s\n", headline(fam.params).c_str(),
              static_cast<int>(fam.vectors.size()), out_path.c_str());
  return 0;
}

int run_verify(const std::string& family_file, VerifyConfig config,
               const std::string& report_path) {
  const UebkFamily fam = load_family(family_file);
  const VerificationReport rep = verify_family(fam, config);
  print_report(rep);
  if (!report_path.empty()) {
    save_report(rep, report_path);
    std::printf("report -> %s\n", report_path.c_str());
  }
  return rep.pass() ? 0 : 1;
}

int run_enumerate(int d, int dprime, int k) {
  const std::vector<FamilyParams> families = enumerate_families(d, dprime, k);
  for (const FamilyParams& p : families) {
    std::printf("%s: %d members\n", p.display_name().c_str(), member_count_formula(p));
  }
  return 0;
}

int run_rho_perp(const std::string& family_file, int k, int trials, std::uint64_t seed,
                 const std::string& out_path) {
  const UebkFamily fam = load_family(family_file);
  const DensityMatrix rho = rho_perp(fam);
  if (!out_path.empty()) save_density(rho, out_path);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.entries);
  int rank = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    if (es.eigenvalues()(i) > 1e-10) ++rank;
  }
  const double trace = rho.entries.trace().real();
  const RangeSchmidtBound bound = range_schmidt_bound(rho, k, trials, seed);

  std::printf("rho_perp of %s: dim %d, rank %d, trace %.15f\n", headline(fam.params).c_str(),
              rho.dim(), rank, trace);
  if (!out_path.empty()) std::printf("state -> %s\n", out_path.c_str());
  std::printf("range max Schmidt rank %d vs k=%d: %s\n", bound.max_rank_observed, k,
              bound.below_k ? "PASS" : "FAIL");
  return bound.below_k ? 0 : 1;
}

int run_sweep(int max_dprime, const std::string& report_dir, const VerifyConfig& config) {
  if (max_dprime < 3) {
    throw std::invalid_argument("sweep: --max-dprime must be at least 3 (smallest family needs d' >= 3)");
  }
  if (!report_dir.empty()) std::filesystem::create_directories(report_dir);
  int total = 0;
  int passed = 0;
  for (int dprime = 3; dprime <= max_dprime; ++dprime) {
    for (int d = 3; d <= dprime; ++d) {
      for (int k = 2; k < d; ++k) {
        for (const FamilyParams& params : enumerate_families(d, dprime, k)) {
          const UebkFamily fam = construct(params);
          const VerificationReport rep = verify_family(fam, config);
          ++total;
          if (rep.pass()) ++passed;
          const std::string cert =
              rep.certificate_bound ? std::to_string(*rep.certificate_bound) : "none";
          const std::string cdim =
              rep.complement_dim ? std::to_string(*rep.complement_dim) : "n/a";
          std::printf("[%s] %s members=%d complement=%s generic=%d certificate=%s\n",
                      rep.pass() ? "PASS" : "FAIL", headline(params).c_str(), rep.actual_count,
                      cdim.c_str(), rep.generic_max_rank, cert.c_str());
          if (!report_dir.empty()) {
            save_report(rep, std::filesystem::path(report_dir) / (params.file_key() + ".json"));
          }
        }
      }
    }
  }
  std::printf("sweep: %d families, %d pass, %d fail (max d' = %d)\n", total, passed,
              total - passed, max_dprime);
  return passed == total ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct and verify unextendible entangled bases with fixed Schmidt number"};
  app.require_subcommand(1);

  std::string family_id;
  int d = 0;
  int dprime = 0;
  int k = 0;
  std::optional<int> q;
  std::optional<int> m;
  std::string convention = "repaired";
  std::string out_path;
  CLI::App* c = app.add_subcommand("construct", "Build one family and write it to a file");
  c->add_option("--family", family_id, "prop1..prop6 or eq8")->required();
  c->add_option("--d", d, "first local dimension")->required();
  c->add_option("--dprime", dprime, "second local dimension")->required();
  c->add_option("--k", k, "Schmidt number")->required();
  c->add_option("--q", q, "shrink parameter (prop2/4/5/6)");
  c->add_option("--m", m, "column modulus (eq8)");
  c->add_option("--prop2-convention", convention, "literal or repaired (default repaired)");
  c->add_option("--out", out_path, "output family file")->required();

  std::string family_file;
  std::string report_path;
  VerifyConfig config;
  CLI::App* v = app.add_subcommand("verify", "Verify a family file and report PASS/FAIL");
  v->add_option("family-file", family_file, "family file to verify")->required();
  v->add_option("--tol-orth", config.tol_orth, "orthonormality tolerance");
  v->add_option("--tol-rank", config.tol_rank, "relative rank cutoff");
  v->add_option("--trials", config.trials, "random probe trials");
  v->add_option("--seed", config.seed, "probe seed (overrides UEBK_SEED)");
  v->add_option("--report", report_path, "write the full report here");

  int ed = 0;
  int edprime = 0;
  int ek = 0;
  CLI::App* e = app.add_subcommand("enumerate", "List admissible families for (d, d', k)");
  e->add_option("--d", ed)->required();
  e->add_option("--dprime", edprime)->required();
  e->add_option("--k", ek)->required();

  std::string rho_family_file;
  int rho_k = 0;
  std::string rho_out;
  CLI::App* r = app.add_subcommand("rho-perp", "Build the complementary mixed state");
  r->add_option("family-file", rho_family_file, "family file")->required();
  r->add_option("--k", rho_k, "Schmidt number threshold for the range probe")->required();
  r->add_option("--out", rho_out, "write the density matrix here");

  int max_dprime = 10;
  std::string report_dir;
  CLI::App* s = app.add_subcommand("sweep", "Construct and verify every admissible family");
  s->add_option("--max-dprime", max_dprime, "upper bound on d' (default 10)");
  s->add_option("--report-dir", report_dir, "write one report file per family here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : 2;
  }

  try {
    const std::optional<std::uint64_t> env_seed = seed_from_env();
    if (c->parsed()) {
      return run_construct(family_id, d, dprime, k, q, m, convention, out_path);
    }
    if (v->parsed()) {
      if (v->count("--seed") == 0 && env_seed) config.seed = *env_seed;
      return run_verify(family_file, config, report_path);
    }
    if (e->parsed()) {
      return run_enumerate(ed, edprime, ek);
    }
    if (r->parsed()) {
      return run_rho_perp(rho_family_file, rho_k, kDefaultTrials,
                          env_seed.value_or(kDefaultSeed), rho_out);
    }
    if (s->parsed()) {
      VerifyConfig sweep_config;
      if (env_seed) sweep_config.seed = *env_seed;
      return run_sweep(max_dprime, report_dir, sweep_config);
    }
  } catch (const std::exception& ex) {
    std::fprintf(stderr, "error: %s\n", ex.what());
    return 2;
  }
  return 2;
}
