#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "uebk/construct.hpp"
#include "uebk/io.hpp"
#include "uebk/mixed_state.hpp"
#include "uebk/tensor.hpp"
#include "uebk/types.hpp"
#include "uebk/verify.hpp"

namespace py = pybind11;
using namespace uebk;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Unextendible entangled bases with fixed Schmidt number: "
            "constructions, verification, and complementary mixed states";

  m.attr("DEFAULT_ORTH_TOL") = kDefaultOrthTol;
  m.attr("DEFAULT_RANK_TOL") = kDefaultRankTol;
  m.attr("DEFAULT_TRIALS") = kDefaultTrials;
  m.attr("DEFAULT_SEED") = kDefaultSeed;

  py::enum_<Family>(m, "Family")
      .value("PROP1", Family::Prop1)
      .value("PROP2", Family::Prop2)
      .value("PROP3", Family::Prop3)
      .value("PROP4", Family::Prop4)
      .value("PROP5", Family::Prop5)
      .value("PROP6", Family::Prop6)
      .value("EQ8", Family::Eq8);

  py::enum_<Prop2Convention>(m, "Prop2Convention")
      .value("LITERAL", Prop2Convention::Literal)
      .value("REPAIRED", Prop2Convention::Repaired);

  py::class_<FamilyParams>(m, "FamilyParams")
      .def(py::init([](Family family, int d, int dprime, int k, std::optional<int> q,
                       std::optional<int> m_offset, Prop2Convention convention) {
             return FamilyParams{family, d, dprime, k, q, m_offset, convention};
           }),
           py::arg("family"), py::arg("d"), py::arg("dprime"), py::arg("k"),
           py::arg("q") = py::none(), py::arg("m") = py::none(),
           py::arg("prop2_convention") = Prop2Convention::Repaired)
      .def_readwrite("family", &FamilyParams::family)
      .def_readwrite("d", &FamilyParams::d)
      .def_readwrite("dprime", &FamilyParams::dprime)
      .def_readwrite("k", &FamilyParams::k)
      .def_readwrite("q", &FamilyParams::q)
      .def_readwrite("m", &FamilyParams::m_offset)
      .def_readwrite("prop2_convention", &FamilyParams::prop2_convention)
      .def_property_readonly("s", &FamilyParams::s)
      .def_property_readonly("t", &FamilyParams::t)
      .def_property_readonly("r_d", &FamilyParams::r_d)
      .def_property_readonly("r_dprime", &FamilyParams::r_dprime)
      .def("validate", &FamilyParams::validate)
      .def("display_name", &FamilyParams::display_name)
      .def("file_key", &FamilyParams::file_key)
      .def("__eq__", [](const FamilyParams& a, const FamilyParams& b) { return a == b; })
      .def("__repr__", [](const FamilyParams& p) {
        return "<FamilyParams " + p.display_name() + " d=" + std::to_string(p.d) +
               " dprime=" + std::to_string(p.dprime) + " k=" + std::to_string(p.k) + ">";
      });

  py::class_<BipartiteVector>(m, "BipartiteVector")
      .def(py::init<int, int, Eigen::VectorXcd>(), py::arg("d"), py::arg("dprime"),
           py::arg("amps"))
      .def_static("zero", &BipartiteVector::zero, py::arg("d"), py::arg("dprime"))
      .def_property_readonly("d", &BipartiteVector::d)
      .def_property_readonly("dprime", &BipartiteVector::dprime)
      .def_property_readonly("dim", &BipartiteVector::dim)
      .def_property_readonly("amps",
                             [](const BipartiteVector& v) -> Eigen::VectorXcd { return v.amps(); })
      .def("at", [](const BipartiteVector& v, int i, int j) { return v.at(i, j); }, py::arg("i"),
           py::arg("j"))
      .def("norm", &BipartiteVector::norm);

  py::class_<SubspaceBasis>(m, "SubspaceBasis")
      .def(py::init<int, int, Eigen::MatrixXcd>(), py::arg("d"), py::arg("dprime"),
           py::arg("vectors"))
      .def_property_readonly("d", &SubspaceBasis::d)
      .def_property_readonly("dprime", &SubspaceBasis::dprime)
      .def_property_readonly("ambient_dim", &SubspaceBasis::ambient_dim)
      .def_property_readonly("size", &SubspaceBasis::size)
      .def_property_readonly("matrix",
                             [](const SubspaceBasis& b) -> Eigen::MatrixXcd { return b.matrix(); })
      .def("vector", &SubspaceBasis::vector, py::arg("idx"))
      .def("gram_deviation", &SubspaceBasis::gram_deviation);

  py::class_<UebkFamily>(m, "UebkFamily")
      .def_readonly("params", &UebkFamily::params)
      .def_readonly("vectors", &UebkFamily::vectors)
      .def_readonly("labels", &UebkFamily::labels)
      .def_readonly("expected_count", &UebkFamily::expected_count)
      .def("__len__", [](const UebkFamily& f) { return f.vectors.size(); })
      .def("__repr__", [](const UebkFamily& f) {
        return "<UebkFamily " + f.params.display_name() + " with " +
               std::to_string(f.vectors.size()) + " members>";
      });

  // tensor-core
  m.def("matricize", &matricize, py::arg("v"));
  m.def("vectorize", &vectorize, py::arg("matrix"));
  m.def("singular_values", &singular_values, py::arg("matrix"));
  m.def("schmidt_rank", &schmidt_rank, py::arg("v"), py::arg("tol_rank") = kDefaultRankTol);
  m.def("random_unit_in_span", &random_unit_in_span, py::arg("basis"), py::arg("seed"));
  m.def("mix_seed", &mix_seed, py::arg("seed"), py::arg("stream"));

  // constructions
  m.def("phase", &phase, py::arg("k"), py::arg("e"));
  m.def("member_count_formula", &member_count_formula, py::arg("params"));
  m.def("construct", &construct, py::arg("params"));
  m.def("construct_prop1", &construct_prop1, py::arg("d"), py::arg("dprime"), py::arg("k"));
  m.def("construct_prop2", &construct_prop2, py::arg("d"), py::arg("dprime"), py::arg("k"),
        py::arg("q"), py::arg("convention") = Prop2Convention::Repaired);
  m.def("construct_prop3", &construct_prop3, py::arg("d"), py::arg("dprime"), py::arg("k"));
  m.def("construct_prop4", &construct_prop4, py::arg("d"), py::arg("dprime"), py::arg("k"),
        py::arg("q"));
  m.def("construct_prop5", &construct_prop5, py::arg("d"), py::arg("dprime"), py::arg("k"),
        py::arg("q"));
  m.def("construct_prop6", &construct_prop6, py::arg("d"), py::arg("dprime"), py::arg("k"),
        py::arg("q"));
  m.def("allowed_m_values", &allowed_m_values, py::arg("d"), py::arg("dprime"), py::arg("k"));
  m.def("construct_eq8", &construct_eq8, py::arg("d"), py::arg("dprime"), py::arg("k"),
        py::arg("m"));
  m.def("enumerate_families", &enumerate_families, py::arg("d"), py::arg("dprime"), py::arg("k"));

  // verification
  py::class_<VerifyConfig>(m, "VerifyConfig")
      .def(py::init([](double tol_orth, double tol_rank, int trials, std::uint64_t seed) {
             return VerifyConfig{tol_orth, tol_rank, trials, seed};
           }),
           py::arg("tol_orth") = kDefaultOrthTol, py::arg("tol_rank") = kDefaultRankTol,
           py::arg("trials") = kDefaultTrials, py::arg("seed") = kDefaultSeed)
      .def_readwrite("tol_orth", &VerifyConfig::tol_orth)
      .def_readwrite("tol_rank", &VerifyConfig::tol_rank)
      .def_readwrite("trials", &VerifyConfig::trials)
      .def_readwrite("seed", &VerifyConfig::seed);

  py::class_<ComplementSupport>(m, "ComplementSupport")
      .def_readonly("row_support", &ComplementSupport::row_support)
      .def_readonly("col_support", &ComplementSupport::col_support)
      .def_readonly("row_groups", &ComplementSupport::row_groups)
      .def_readonly("group_cols", &ComplementSupport::group_cols);

  py::class_<ExpectedCounts>(m, "ExpectedCounts")
      .def_readonly("member_count", &ExpectedCounts::member_count)
      .def_readonly("complement_dim", &ExpectedCounts::complement_dim);

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("params", &VerificationReport::params)
      .def_readonly("config", &VerificationReport::config)
      .def_readonly("count_ok", &VerificationReport::count_ok)
      .def_readonly("expected_count", &VerificationReport::expected_count)
      .def_readonly("actual_count", &VerificationReport::actual_count)
      .def_readonly("orthonormal_ok", &VerificationReport::orthonormal_ok)
      .def_readonly("max_gram_deviation", &VerificationReport::max_gram_deviation)
      .def_readonly("schmidt_ok", &VerificationReport::schmidt_ok)
      .def_readonly("schmidt_ranks", &VerificationReport::schmidt_ranks)
      .def_readonly("max_singular_deviation", &VerificationReport::max_singular_deviation)
      .def_readonly("complement_dim", &VerificationReport::complement_dim)
      .def_readonly("support", &VerificationReport::support)
      .def_readonly("generic_max_rank", &VerificationReport::generic_max_rank)
      .def_readonly("certificate_bound", &VerificationReport::certificate_bound)
      .def_readonly("unextendible_ok", &VerificationReport::unextendible_ok)
      .def("passes", &VerificationReport::pass)
      .def("__repr__", [](const VerificationReport& r) {
        return "<VerificationReport " + r.params.display_name() + " " +
               (r.pass() ? "PASS" : "FAIL") + ">";
      });

  m.def("complement_basis", &complement_basis, py::arg("family"),
        py::arg("tol") = kDefaultOrthTol);
  m.def("complement_support", &complement_support, py::arg("basis"),
        py::arg("tol") = kDefaultOrthTol);
  m.def("structural_rank_bound", &structural_rank_bound, py::arg("support"), py::arg("basis"));
  m.def("generic_max_schmidt_rank", &generic_max_schmidt_rank, py::arg("basis"),
        py::arg("trials") = kDefaultTrials, py::arg("seed") = kDefaultSeed,
        py::arg("tol_rank") = kDefaultRankTol);
  m.def("expected_counts", &expected_counts, py::arg("params"));
  m.def("verify_family", &verify_family, py::arg("family"), py::arg("config") = VerifyConfig{});

  // mixed state
  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def_readonly("d", &DensityMatrix::d)
      .def_readonly("dprime", &DensityMatrix::dprime)
      .def_property_readonly("entries",
                             [](const DensityMatrix& r) -> Eigen::MatrixXcd { return r.entries; })
      .def_readonly("origin", &DensityMatrix::origin)
      .def_property_readonly("dim", &DensityMatrix::dim);

  py::class_<RangeSchmidtBound>(m, "RangeSchmidtBound")
      .def_readonly("max_rank_observed", &RangeSchmidtBound::max_rank_observed)
      .def_readonly("below_k", &RangeSchmidtBound::below_k);

  m.def("rho_perp", &rho_perp, py::arg("family"));
  m.def("range_schmidt_bound", &range_schmidt_bound, py::arg("rho"), py::arg("k"),
        py::arg("trials") = kDefaultTrials, py::arg("seed") = kDefaultSeed,
        py::arg("tol_rank") = kDefaultRankTol);

  // io
  m.def("family_to_json", &family_to_json, py::arg("family"));
  m.def("family_from_json", &family_from_json, py::arg("text"));
  m.def("save_family",
        [](const UebkFamily& f, const std::string& path) { save_family(f, path); },
        py::arg("family"), py::arg("path"));
  m.def("load_family", [](const std::string& path) { return load_family(path); },
        py::arg("path"));
  m.def("report_to_json", &report_to_json, py::arg("report"));
  m.def("report_from_json", &report_from_json, py::arg("text"));
  m.def("save_report",
        [](const VerificationReport& r, const std::string& path) { save_report(r, path); },
        py::arg("report"), py::arg("path"));
  m.def("load_report", [](const std::string& path) { return load_report(path); },
        py::arg("path"));
  m.def("density_to_json", &density_to_json, py::arg("rho"));
  m.def("save_density",
        [](const DensityMatrix& rho, const std::string& path) { save_density(rho, path); },
        py::arg("rho"), py::arg("path"));
}
