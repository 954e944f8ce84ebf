#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "nctorus/dirac.hpp"
#include "nctorus/errors.hpp"
#include "nctorus/io.hpp"
#include "nctorus/modular.hpp"
#include "nctorus/summation.hpp"
#include "nctorus/verify.hpp"

namespace py = pybind11;
using namespace nctorus;

namespace {

py::object json_to_python(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

Json python_to_json(const py::object& obj) {
  return Json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

Eigen::MatrixXcd coeff_table(const FourierCoeffs& c) { return c.table(); }

MeanSource element_source(const WeylElement& a) { return a; }

py::dict mean_dict(const MeanResult& r) {
  return py::dict(py::arg("mean") = r.mean.coeffs(), py::arg("l2_error") = r.l2_error,
                  py::arg("sup_coeff_error") = r.sup_coeff_error);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bindings for the nctorus C++ library";

  auto base = py::register_exception<Error>(m, "NctorusError", PyExc_RuntimeError);
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());

  py::enum_<TransformKind>(m, "TransformKind")
      .value("Hat", TransformKind::Hat)
      .value("Paren", TransformKind::Paren);

  py::class_<DiffeoSpec>(m, "DiffeoSpec")
      .def(py::init([](double alpha, std::vector<double> sin_coeffs, std::vector<double> cos_coeffs,
                       bool classical) {
             return DiffeoSpec(ConjugatorLift(std::move(sin_coeffs), std::move(cos_coeffs)),
                               alpha, classical);
           }),
           py::arg("alpha"), py::arg("sin_coeffs") = std::vector<double>{},
           py::arg("cos_coeffs") = std::vector<double>{}, py::arg("classical_mode") = false)
      .def_static("rotation", &DiffeoSpec::rotation, py::arg("alpha"),
                  py::arg("classical_mode") = false)
      .def_static("benchmark", &DiffeoSpec::benchmark)
      .def_property_readonly("alpha", &DiffeoSpec::alpha)
      .def_property_readonly("classical_mode", &DiffeoSpec::classical_mode)
      .def_property_readonly("is_rotation", &DiffeoSpec::is_rotation)
      .def_property_readonly("sin_coeffs",
                             [](const DiffeoSpec& d) { return d.conjugator().sin_coeffs(); })
      .def_property_readonly("cos_coeffs",
                             [](const DiffeoSpec& d) { return d.conjugator().cos_coeffs(); })
      .def("lift", [](const DiffeoSpec& d, double x) { return d.conjugator()(x); })
      .def("lift_inverse", [](const DiffeoSpec& d, double y) { return d.conjugator().inverse(y); })
      .def("iterate", py::overload_cast<const DiffeoSpec&, int, double>(&iterate_lift),
           py::arg("n"), py::arg("x"));

  py::class_<TruncationBox>(m, "TruncationBox")
      .def(py::init<int, int, int>(), py::arg("K"), py::arg("M"), py::arg("G"))
      .def_static("with_default_grid", &TruncationBox::with_default_grid)
      .def_readonly("K", &TruncationBox::K)
      .def_readonly("M", &TruncationBox::M)
      .def_readonly("G", &TruncationBox::G)
      .def_property_readonly("dim", &TruncationBox::dim)
      .def("index", &TruncationBox::index)
      .def("__repr__", [](const TruncationBox& b) {
        return "TruncationBox(K=" + std::to_string(b.K) + ", M=" + std::to_string(b.M) +
               ", G=" + std::to_string(b.G) + ")";
      });

  py::class_<WeylElement>(m, "WeylElement")
      .def(py::init<double, int, int>(), py::arg("alpha"), py::arg("S1"), py::arg("S2"))
      .def_static("identity", &WeylElement::identity)
      .def_static("generator",
                  [](double alpha, int m1, int n1, cplx value) {
                    return WeylElement::generator(alpha, {m1, n1}, value);
                  },
                  py::arg("alpha"), py::arg("m"), py::arg("n"), py::arg("value") = cplx(1.0))
      .def_property_readonly("alpha", &WeylElement::alpha)
      .def_property_readonly("S1", &WeylElement::S1)
      .def_property_readonly("S2", &WeylElement::S2)
      .def_property_readonly("table", &WeylElement::table)
      .def("__getitem__",
           [](const WeylElement& f, std::pair<int, int> a) { return f.coeff({a.first, a.second}); })
      .def("__setitem__", [](WeylElement& f, std::pair<int, int> a,
                             cplx v) { f.set({a.first, a.second}, v); })
      .def("support",
           [](const WeylElement& f) {
             std::vector<std::tuple<int, int, cplx>> out;
             for (const auto& [a, v] : f.support()) out.emplace_back(a.m, a.n, v);
             return out;
           })
      .def("__add__", [](const WeylElement& a, const WeylElement& b) { return a + b; })
      .def("__mul__", [](const WeylElement& a, const WeylElement& b) { return star_product(a, b); })
      .def("__rmul__", [](const WeylElement& a, cplx s) { return s * a; });

  m.def("star_product", &star_product);
  m.def("involution", &involution);
  m.def("trace", &trace);

  m.def("rotation_number", &rotation_number, py::arg("d"), py::arg("iterations") = 1000);
  m.def("radon_nikodym_values", &radon_nikodym_values, py::arg("d"), py::arg("n"), py::arg("G"));
  m.def("growth_sequence",
        [](const DiffeoSpec& d, int n_max, int G) { return growth_sequence(d, n_max, G).values(); },
        py::arg("d"), py::arg("n_max"), py::arg("G") = 4096);
  m.def("a_sequence",
        [](const std::vector<double>& gamma, int bound) {
          DiracCoefficients a = a_sequence(GrowthSequence(gamma), bound);
          std::vector<double> out;
          for (int n = -bound; n <= bound; ++n) out.push_back(a[n]);
          return out;
        },
        py::arg("gamma"), py::arg("bound"), "Values a_n for n = -bound..bound.");

  m.def("represent",
        [](const WeylElement& f, const DiffeoSpec& d, const TruncationBox& box) {
          return represent(f, d, box).to_dense();
        },
        "Dense matrix of the compressed representative in the e^{kl} basis.");

  m.def("tomita_check",
        [](const WeylElement& f, const DiffeoSpec& d, const TruncationBox& box) {
          return tomita_check(f, ModularData(d, box));
        });

  py::class_<BorelFunction>(m, "BorelFunction")
      .def_static("power", &BorelFunction::power)
      .def_static("rational", &BorelFunction::rational)
      .def("__call__", &BorelFunction::operator());

  m.def("hat_functional",
        [](const WeylElement& a, const DiffeoSpec& d, const TruncationBox& box) {
          return coeff_table(hat_functional(a, d, box));
        },
        "Table indexed [k + K, l + M].");
  m.def("paren_functional",
        [](const WeylElement& a, const DiffeoSpec& d, const TruncationBox& box, double tol) {
          return coeff_table(paren_functional(a, EpsilonBasis(ModularData(d, box)), tol));
        },
        py::arg("a"), py::arg("d"), py::arg("box"), py::arg("tol") = 1e-7);
  m.def("riemann_lebesgue_profile",
        [](const WeylElement& a, const DiffeoSpec& d, const TruncationBox& box) {
          return riemann_lebesgue_profile(a, d, box).shell_max;
        });

  m.def("fejer_mean",
        [](const WeylElement& a, const DiffeoSpec& d, const TruncationBox& box, int N,
           TransformKind kind) {
          return mean_dict(fejer_mean(element_source(a), N, kind, EpsilonBasis(ModularData(d, box))));
        },
        py::arg("a"), py::arg("d"), py::arg("box"), py::arg("N"),
        py::arg("kind") = TransformKind::Hat);
  m.def("abel_mean",
        [](const WeylElement& a, const DiffeoSpec& d, const TruncationBox& box, double r,
           TransformKind kind) {
          return mean_dict(abel_mean(element_source(a), r, kind, EpsilonBasis(ModularData(d, box))));
        },
        py::arg("a"), py::arg("d"), py::arg("box"), py::arg("r"),
        py::arg("kind") = TransformKind::Hat);

  py::class_<DiracContext>(m, "DiracContext")
      .def(py::init<const DiffeoSpec&, const TruncationBox&, int>(), py::arg("d"), py::arg("box"),
           py::arg("growth_grid") = 4096)
      .def_property_readonly("growth",
                             [](const DiracContext& c) { return c.growth().values(); });
  m.def("undeformed_block",
        [](int n, const DiracContext& ctx) {
          return undeformed_block(n, ctx.coeffs(), ctx.box().M).matrix;
        });
  m.def("deformed_block",
        [](int n, double eta, const DiracContext& ctx) { return deformed_block(n, eta, ctx).matrix; });
  m.def("matrix_element_closed_form", &matrix_element_closed_form);
  m.def("matrix_element_oracle",
        py::overload_cast<double, int, int, int, int, const DiracContext&>(&matrix_element_oracle));

  py::class_<ExperimentConfig>(m, "ExperimentConfig")
      .def_static("from_dict",
                  [](const py::object& obj) { return config_from_json(python_to_json(obj)); })
      .def("to_dict", [](const ExperimentConfig& c) { return json_to_python(config_to_json(c)); })
      .def_readonly("diffeo", &ExperimentConfig::diffeo)
      .def_readonly("box", &ExperimentConfig::box)
      .def_readonly("seed", &ExperimentConfig::seed);
  m.def("load_config", [](const std::filesystem::path& p) { return load_config(p); });
  m.def("run_verify",
        [](const ExperimentConfig& c, double tol_scale) {
          VerifyReport r;
          {
            py::gil_scoped_release release;
            r = run_invariant_suite(c, tol_scale);
          }
          return json_to_python(r.to_json());
        },
        py::arg("config"), py::arg("tol_scale") = 1.0);
}
