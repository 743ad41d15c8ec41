#include "uebk/io.hpp"

#include "json.hpp"

#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace uebk {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kSchemaVersion = "1";

[[noreturn]] void io_fail(const std::string& msg) { throw std::runtime_error(msg); }

const ordered_json& require_field(const ordered_json& j, const char* name,
                                  const std::string& context) {
  if (!j.is_object() || !j.contains(name)) {
    io_fail(context + ": missing field '" + name + "'");
  }
  return j.at(name);
}

void check_header(const ordered_json& j, const char* kind, const std::string& context) {
  const ordered_json& ver = require_field(j, "schema_version", context);
  if (!ver.is_string() || ver.get<std::string>() != kSchemaVersion) {
    io_fail(context + ": unsupported schema_version " + ver.dump() + " (supported: \"" +
            kSchemaVersion + "\")");
  }
  const ordered_json& got_kind = require_field(j, "kind", context);
  if (!got_kind.is_string() || got_kind.get<std::string>() != kind) {
    io_fail(context + ": expected kind \"" + std::string(kind) + "\", found " + got_kind.dump());
  }
}

int require_int(const ordered_json& j, const char* name, const std::string& context) {
  const ordered_json& f = require_field(j, name, context);
  if (!f.is_number_integer()) io_fail(context + ": field '" + name + "' must be an integer");
  return f.get<int>();
}

double require_double(const ordered_json& j, const char* name, const std::string& context) {
  const ordered_json& f = require_field(j, name, context);
  if (f.is_null()) return std::numeric_limits<double>::infinity();  // inf round-trips as null
  if (!f.is_number()) io_fail(context + ": field '" + name + "' must be a number");
  return f.get<double>();
}

bool require_bool(const ordered_json& j, const char* name, const std::string& context) {
  const ordered_json& f = require_field(j, name, context);
  if (!f.is_boolean()) io_fail(context + ": field '" + name + "' must be a boolean");
  return f.get<bool>();
}

ordered_json number_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

ordered_json params_to_json(const FamilyParams& p) {
  ordered_json j;
  j["family"] = family_name(p.family);
  j["d"] = p.d;
  j["dprime"] = p.dprime;
  j["k"] = p.k;
  if (p.q) j["q"] = *p.q;
  if (p.m_offset) j["m"] = *p.m_offset;
  if (p.family == Family::Prop2) j["prop2_convention"] = convention_name(p.prop2_convention);
  return j;
}

FamilyParams params_from_json(const ordered_json& j, const std::string& context) {
  FamilyParams p;
  const ordered_json& fam = require_field(j, "family", context);
  if (!fam.is_string()) io_fail(context + ": field 'family' must be a string");
  try {
    p.family = family_from_name(fam.get<std::string>());
  } catch (const std::invalid_argument& e) {
    io_fail(context + ": " + e.what());
  }
  p.d = require_int(j, "d", context);
  p.dprime = require_int(j, "dprime", context);
  p.k = require_int(j, "k", context);
  if (j.contains("q")) p.q = require_int(j, "q", context);
  if (j.contains("m")) p.m_offset = require_int(j, "m", context);
  if (j.contains("prop2_convention")) {
    const ordered_json& conv = j.at("prop2_convention");
    if (!conv.is_string()) io_fail(context + ": field 'prop2_convention' must be a string");
    try {
      p.prop2_convention = convention_from_name(conv.get<std::string>());
    } catch (const std::invalid_argument& e) {
      io_fail(context + ": " + e.what());
    }
  }
  return p;
}

ordered_json amps_to_json(const Eigen::VectorXcd& amps) {
  ordered_json arr = ordered_json::array();
  for (Eigen::Index i = 0; i < amps.size(); ++i) {
    arr.push_back(ordered_json::array({amps(i).real(), amps(i).imag()}));
  }
  return arr;
}

Eigen::VectorXcd amps_from_json(const ordered_json& arr, Eigen::Index expected_len,
                                const std::string& context) {
  if (!arr.is_array()) io_fail(context + ": field 'amps' must be an array");
  if (static_cast<Eigen::Index>(arr.size()) != expected_len) {
    io_fail(context + ": expected " + std::to_string(expected_len) + " amplitudes, found " +
            std::to_string(arr.size()));
  }
  Eigen::VectorXcd out(expected_len);
  for (Eigen::Index i = 0; i < expected_len; ++i) {
    const ordered_json& pair = arr.at(static_cast<std::size_t>(i));
    if (!pair.is_array() || pair.size() != 2 || !pair.at(0).is_number() || !pair.at(1).is_number()) {
      io_fail(context + ": amplitude " + std::to_string(i) + " must be a [re, im] pair");
    }
    out(i) = cplx(pair.at(0).get<double>(), pair.at(1).get<double>());
  }
  return out;
}

ordered_json support_to_json(const ComplementSupport& s) {
  ordered_json j;
  j["rows"] = s.row_support;
  j["cols"] = s.col_support;
  j["row_groups"] = s.row_groups;
  j["group_cols"] = s.group_cols;
  return j;
}

std::vector<int> int_list(const ordered_json& arr, const std::string& context) {
  if (!arr.is_array()) io_fail(context + ": expected an integer array");
  std::vector<int> out;
  for (const ordered_json& v : arr) {
    if (!v.is_number_integer()) io_fail(context + ": expected an integer array");
    out.push_back(v.get<int>());
  }
  return out;
}

ComplementSupport support_from_json(const ordered_json& j, const std::string& context) {
  ComplementSupport s;
  s.row_support = int_list(require_field(j, "rows", context), context + ".rows");
  s.col_support = int_list(require_field(j, "cols", context), context + ".cols");
  for (const ordered_json& g : require_field(j, "row_groups", context)) {
    s.row_groups.push_back(int_list(g, context + ".row_groups"));
  }
  for (const ordered_json& g : require_field(j, "group_cols", context)) {
    s.group_cols.push_back(int_list(g, context + ".group_cols"));
  }
  return s;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json parse(const std::string& text, const std::string& context) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    io_fail(context + ": " + e.what());
  }
}

std::string read_file(const std::filesystem::path& path, const std::string& context) {
  std::ifstream in(path, std::ios::binary);
  if (!in) io_fail(context + ": cannot open " + path.string() + " for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& text,
                const std::string& context) {
  std::ofstream out(path, std::ios::binary);
  if (!out) io_fail(context + ": cannot open " + path.string() + " for writing");
  out << text;
  if (!out) io_fail(context + ": write to " + path.string() + " failed");
}

}  // namespace

std::string family_to_json(const UebkFamily& family) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "family";
  j["params"] = params_to_json(family.params);
  j["expected_count"] = family.expected_count;
  ordered_json vecs = ordered_json::array();
  for (std::size_t i = 0; i < family.vectors.size(); ++i) {
    ordered_json v;
    v["label"] = i < family.labels.size() ? ordered_json(family.labels[i]) : ordered_json::array();
    v["amps"] = amps_to_json(family.vectors[i].amps());
    vecs.push_back(std::move(v));
  }
  j["vectors"] = std::move(vecs);
  return dump(j);
}

UebkFamily family_from_json(const std::string& text) {
  const std::string context = "family file";
  const ordered_json j = parse(text, context);
  check_header(j, "family", context);
  UebkFamily fam;
  fam.params = params_from_json(require_field(j, "params", context), context + ".params");
  try {
    fam.params.validate();
  } catch (const std::invalid_argument& e) {
    io_fail(context + ": invalid params: " + e.what());
  }
  fam.expected_count = require_int(j, "expected_count", context);

  const std::size_t label_arity =
      fam.params.family == Family::Prop3 || fam.params.family == Family::Prop4 ||
              fam.params.family == Family::Prop5 || fam.params.family == Family::Prop6
          ? 4
          : 3;
  const Eigen::Index amp_len =
      static_cast<Eigen::Index>(fam.params.d) * fam.params.dprime;
  const ordered_json& vecs = require_field(j, "vectors", context);
  if (!vecs.is_array()) io_fail(context + ": field 'vectors' must be an array");
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    const std::string vctx = context + ".vectors[" + std::to_string(i) + "]";
    const ordered_json& v = vecs.at(i);
    const std::vector<int> label = int_list(require_field(v, "label", vctx), vctx + ".label");
    if (label.size() != label_arity) {
      io_fail(vctx + ": label must have " + std::to_string(label_arity) + " indices");
    }
    fam.labels.push_back(label);
    fam.vectors.emplace_back(fam.params.d, fam.params.dprime,
                             amps_from_json(require_field(v, "amps", vctx), amp_len, vctx));
  }
  return fam;
}

void save_family(const UebkFamily& family, const std::filesystem::path& path) {
  write_file(path, family_to_json(family), "save_family");
}

UebkFamily load_family(const std::filesystem::path& path) {
  return family_from_json(read_file(path, "load_family"));
}

std::string report_to_json(const VerificationReport& report) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "report";
  j["params"] = params_to_json(report.params);
  ordered_json cfg;
  cfg["tol_orth"] = report.config.tol_orth;
  cfg["tol_rank"] = report.config.tol_rank;
  cfg["trials"] = report.config.trials;
  cfg["seed"] = report.config.seed;
  j["config"] = std::move(cfg);

  ordered_json checks;
  checks["count"] = {{"ok", report.count_ok},
                     {"expected", report.expected_count},
                     {"actual", report.actual_count}};
  checks["orthonormal"] = {{"ok", report.orthonormal_ok},
                           {"max_gram_deviation", number_or_null(report.max_gram_deviation)}};
  checks["schmidt"] = {{"ok", report.schmidt_ok},
                       {"ranks", report.schmidt_ranks},
                       {"max_singular_deviation", number_or_null(report.max_singular_deviation)}};
  ordered_json un;
  un["ok"] = report.unextendible_ok;
  un["complement_dim"] = report.complement_dim ? ordered_json(*report.complement_dim) : nullptr;
  un["generic_max_rank"] = report.generic_max_rank;
  un["certificate_bound"] =
      report.certificate_bound ? ordered_json(*report.certificate_bound) : nullptr;
  un["support"] = report.support ? support_to_json(*report.support) : ordered_json(nullptr);
  checks["unextendible"] = std::move(un);
  j["checks"] = std::move(checks);
  j["verdict"] = report.pass() ? "PASS" : "FAIL";
  return dump(j);
}

VerificationReport report_from_json(const std::string& text) {
  const std::string context = "report file";
  const ordered_json j = parse(text, context);
  check_header(j, "report", context);
  VerificationReport rep;
  rep.params = params_from_json(require_field(j, "params", context), context + ".params");
  const ordered_json& cfg = require_field(j, "config", context);
  rep.config.tol_orth = require_double(cfg, "tol_orth", context + ".config");
  rep.config.tol_rank = require_double(cfg, "tol_rank", context + ".config");
  rep.config.trials = require_int(cfg, "trials", context + ".config");
  const ordered_json& seed = require_field(cfg, "seed", context + ".config");
  if (!seed.is_number_unsigned() && !seed.is_number_integer()) {
    io_fail(context + ".config: field 'seed' must be an integer");
  }
  rep.config.seed = seed.get<std::uint64_t>();

  const ordered_json& checks = require_field(j, "checks", context);
  const ordered_json& count = require_field(checks, "count", context + ".checks");
  rep.count_ok = require_bool(count, "ok", context + ".checks.count");
  rep.expected_count = require_int(count, "expected", context + ".checks.count");
  rep.actual_count = require_int(count, "actual", context + ".checks.count");
  const ordered_json& orth = require_field(checks, "orthonormal", context + ".checks");
  rep.orthonormal_ok = require_bool(orth, "ok", context + ".checks.orthonormal");
  rep.max_gram_deviation =
      require_double(orth, "max_gram_deviation", context + ".checks.orthonormal");
  const ordered_json& sch = require_field(checks, "schmidt", context + ".checks");
  rep.schmidt_ok = require_bool(sch, "ok", context + ".checks.schmidt");
  rep.schmidt_ranks =
      int_list(require_field(sch, "ranks", context + ".checks.schmidt"), context + ".checks.schmidt");
  rep.max_singular_deviation =
      require_double(sch, "max_singular_deviation", context + ".checks.schmidt");
  const ordered_json& un = require_field(checks, "unextendible", context + ".checks");
  rep.unextendible_ok = require_bool(un, "ok", context + ".checks.unextendible");
  const ordered_json& cdim = require_field(un, "complement_dim", context + ".checks.unextendible");
  if (!cdim.is_null()) rep.complement_dim = cdim.get<int>();
  rep.generic_max_rank = require_int(un, "generic_max_rank", context + ".checks.unextendible");
  const ordered_json& cert = require_field(un, "certificate_bound", context + ".checks.unextendible");
  if (!cert.is_null()) rep.certificate_bound = cert.get<int>();
  const ordered_json& sup = require_field(un, "support", context + ".checks.unextendible");
  if (!sup.is_null()) {
    rep.support = support_from_json(sup, context + ".checks.unextendible.support");
  }
  return rep;
}

void save_report(const VerificationReport& report, const std::filesystem::path& path) {
  write_file(path, report_to_json(report), "save_report");
}

VerificationReport load_report(const std::filesystem::path& path) {
  return report_from_json(read_file(path, "load_report"));
}

std::string density_to_json(const DensityMatrix& rho) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "density";
  j["d"] = rho.d;
  j["dprime"] = rho.dprime;
  j["origin"] = params_to_json(rho.origin);
  ordered_json rows = ordered_json::array();
  for (Eigen::Index i = 0; i < rho.entries.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index c = 0; c < rho.entries.cols(); ++c) {
      row.push_back(ordered_json::array({rho.entries(i, c).real(), rho.entries(i, c).imag()}));
    }
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return dump(j);
}

void save_density(const DensityMatrix& rho, const std::filesystem::path& path) {
  write_file(path, density_to_json(rho), "save_density");
}

}  // namespace uebk
