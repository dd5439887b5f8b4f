#include <algorithm>
#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "sliceq/errors.hpp"
#include "sliceq/fock.hpp"
#include "sliceq/harness.hpp"
#include "sliceq/random.hpp"
#include "sliceq/report.hpp"
#include "sliceq/series_io.hpp"
#include "sliceq/slice_series.hpp"

namespace py = pybind11;
using namespace sliceq;

namespace {

std::string repr(const Quaternion& q) { return "Quaternion(" + format_quaternion(q) + ")"; }

py::dict to_dict(const CheckResult& r) {
  py::dict d;
  d["check_id"] = r.check_id;
  d["paper_ref"] = r.paper_ref;
  d["lhs"] = r.lhs;
  d["rhs"] = r.rhs;
  d["constant"] = r.constant;
  d["margin"] = r.margin;
  d["pass"] = r.pass;
  d["note"] = r.note;
  d["wall_seconds"] = r.wall_seconds;
  return d;
}

RunConfig make_config(const py::kwargs& kwargs) {
  RunConfig c;
  for (const auto& [k, v] : kwargs) {
    std::string key = py::str(k);
    std::replace(key.begin(), key.end(), '_', '-');
    if (key == "checks" && !py::isinstance<py::str>(v)) {
      c.checks = v.cast<std::vector<std::string>>();
    } else {
      apply_config_value(c, key, py::str(v));
    }
  }
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quaternionic slice-regular power series and Fock-space numerics";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<UsageError>(m, "UsageError", base.ptr());
  py::register_exception<IoError>(m, "IoError", base.ptr());

  py::class_<Quaternion>(m, "Quaternion")
      .def(py::init<>())
      .def(py::init<double>())
      .def(py::init<double, double, double, double>(), py::arg("x0"), py::arg("x1"), py::arg("x2"), py::arg("x3"))
      .def_readwrite("x0", &Quaternion::x0)
      .def_readwrite("x1", &Quaternion::x1)
      .def_readwrite("x2", &Quaternion::x2)
      .def_readwrite("x3", &Quaternion::x3)
      .def("norm", &Quaternion::norm)
      .def("conj", [](const Quaternion& q) { return conj(q); })
      .def("inverse", [](const Quaternion& q) { return inverse(q); })
      .def("to_tuple", [](const Quaternion& q) { return py::make_tuple(q.x0, q.x1, q.x2, q.x3); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self * double())
      .def(double() * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__abs__", &Quaternion::norm)
      .def("__repr__", &repr)
      .def("__str__", [](const Quaternion& q) { return format_quaternion(q); });
  py::implicitly_convertible<double, Quaternion>();

  py::class_<ImaginaryUnit>(m, "ImaginaryUnit")
      .def(py::init([](double a, double b, double c) { return ImaginaryUnit::from_vector(a, b, c); }))
      .def_static("i", &ImaginaryUnit::i)
      .def_static("j", &ImaginaryUnit::j)
      .def_static("k", &ImaginaryUnit::k)
      .def_property_readonly("value", &ImaginaryUnit::value)
      .def("__repr__", [](const ImaginaryUnit& u) { return "ImaginaryUnit(" + format_quaternion(u) + ")"; });

  m.def("axis", &axis);
  m.def("orthogonal_unit", &orthogonal_unit);

  py::class_<SliceSeries>(m, "SliceSeries")
      .def(py::init<>())
      .def(py::init([](std::vector<Quaternion> c) { return SliceSeries(std::move(c)); }), py::arg("coeffs"))
      .def_static("constant", &SliceSeries::constant)
      .def_static("monomial", &SliceSeries::monomial, py::arg("m"), py::arg("a") = Quaternion(1.0))
      .def_property_readonly("degree", &SliceSeries::degree)
      .def_property_readonly("truncated_degrees", &SliceSeries::truncated_degrees)
      .def_property_readonly("coeffs",
                             [](const SliceSeries& f) { return std::vector<Quaternion>(f.coeffs().begin(), f.coeffs().end()); })
      .def("__len__", [](const SliceSeries& f) { return f.degree() + 1; })
      .def("__getitem__", &SliceSeries::coeff)
      .def("__call__", [](const SliceSeries& f, const Quaternion& q) { return eval(f, q); })
      .def("truncate", &SliceSeries::truncate)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * Quaternion())
      .def(py::self == py::self)
      .def("dumps", [](const SliceSeries& f) {
        std::ostringstream os;
        write_series(os, f);
        return os.str();
      })
      .def_static("loads", [](const std::string& text) {
        std::istringstream is(text);
        return read_series(is);
      });

  m.def("eval", &eval, py::arg("f"), py::arg("q"));
  m.def("star_mul", &star_mul, py::arg("f"), py::arg("g"), py::arg("max_degree") = kDefaultMaxDegree);
  m.def("star_pointwise_check", &star_pointwise_check);
  m.def("regular_conjugate", &regular_conjugate);
  m.def("star_reciprocal", &star_reciprocal, py::arg("f"), py::arg("order"));
  m.def("dilate", &dilate, py::arg("f"), py::arg("r"));
  m.def("star_exponential", &star_exponential, py::arg("w"), py::arg("alpha"), py::arg("N"));

  py::class_<SplitPair>(m, "SplitPair")
      .def_readonly("f1", &SplitPair::f1)
      .def_readonly("f2", &SplitPair::f2)
      .def_readonly("I", &SplitPair::I)
      .def_readonly("J", &SplitPair::J)
      .def("recombine", &SplitPair::recombine);
  m.def("split_Q", &split_Q, py::arg("f"), py::arg("I"));
  m.def("extend_P", &extend_P, py::arg("pair"), py::arg("q"));

  py::enum_<Domain>(m, "Domain").value("UnitDisk", Domain::UnitDisk).value("Plane", Domain::Plane);

  py::class_<FockParams>(m, "FockParams")
      .def(py::init([](double alpha, double p, Domain domain, double radius, std::size_t truncation, std::size_t n_r,
                       std::size_t n_theta, std::size_t n_slices) {
             FockParams f{alpha, p, domain, radius, truncation, n_r, n_theta, n_slices};
             f.validate();
             return f;
           }),
           py::arg("alpha") = 1.0, py::arg("p") = 2.0, py::arg("domain") = Domain::UnitDisk, py::arg("radius") = 6.0,
           py::arg("truncation") = 48, py::arg("n_r") = 64, py::arg("n_theta") = 256, py::arg("n_slices") = 64)
      .def_readwrite("alpha", &FockParams::alpha)
      .def_readwrite("p", &FockParams::p)
      .def_readwrite("domain", &FockParams::domain)
      .def_readwrite("radius", &FockParams::radius)
      .def_readwrite("truncation", &FockParams::truncation)
      .def_readwrite("n_r", &FockParams::n_r)
      .def_readwrite("n_theta", &FockParams::n_theta)
      .def_readwrite("n_slices", &FockParams::n_slices);

  m.def("fock_norm_slice", &fock_norm_slice, py::arg("f"), py::arg("I"), py::arg("params") = FockParams{});
  m.def(
      "fock_norm",
      [](const SliceSeries& f, const FockParams& p) {
        const auto s = fock_norm(f, p);
        return py::make_tuple(s.value, s.unit);
      },
      py::arg("f"), py::arg("params") = FockParams{}, "Returns (norm, maximizing unit).");
  m.def("inner_product", &inner_product, py::arg("f"), py::arg("g"), py::arg("I"), py::arg("params") = FockParams{});
  m.def(
      "gram_diagonal", [](const FockParams& p) { return gram_table(p).diag; }, py::arg("params") = FockParams{});
  m.def("kernel_eval", &kernel_eval, py::arg("q"), py::arg("w"), py::arg("params") = FockParams{});
  m.def("corrected_kernel_eval", &corrected_kernel_eval, py::arg("q"), py::arg("w"),
        py::arg("params") = FockParams{});

  py::enum_<KernelKind>(m, "KernelKind").value("Exponential", KernelKind::Exponential).value("Corrected", KernelKind::Corrected);
  py::class_<Projector>(m, "Projector")
      .def(py::init<const FockParams&, const ImaginaryUnit&, KernelKind>(), py::arg("params"), py::arg("I"),
           py::arg("kind") = KernelKind::Exponential)
      .def("sample", &Projector::sample)
      .def("apply", [](const Projector& p, const std::vector<Quaternion>& s, const Quaternion& q) {
        return p.apply(s, q);
      });

  m.def("random_series", py::overload_cast<std::uint64_t, std::size_t>(&random_series), py::arg("seed"),
        py::arg("max_degree"));

  m.def("check_ids", &all_check_ids);
  m.def(
      "run_suite",
      [](const py::kwargs& kwargs) {
        const RunConfig c = make_config(kwargs);
        std::vector<CheckResult> results;
        {
          py::gil_scoped_release release;
          results = run_suite(c);
        }
        py::list out;
        for (const auto& r : results) out.append(to_dict(r));
        return out;
      },
      "Runs the check suite. Keyword arguments use the config-file keys (alpha, p, degree, domain, radius, "
      "truncation, quad_r, quad_theta, slices, seed, series_count, threads, checks).");
  m.def(
      "report_json",
      [](const py::kwargs& kwargs) {
        const RunConfig c = make_config(kwargs);
        py::gil_scoped_release release;
        return report_json(c, run_suite(c));
      },
      "Runs the suite and returns the JSON report text.");
}
