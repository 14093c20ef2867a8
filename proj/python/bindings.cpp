#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dde/bandwidth.hpp"
#include "dde/dataset.hpp"
#include "dde/dde_test.hpp"
#include "dde/entropy.hpp"
#include "dde/error.hpp"
#include "dde/families.hpp"
#include "dde/report.hpp"

namespace py = pybind11;
using namespace dde;

namespace {

Family family_arg(const std::string& name) {
  const auto f = parse_family(name);
  if (!f) throw invalid_argument("unknown family '" + name + "'");
  return *f;
}

FitMethod method_arg(const std::string& name) {
  if (name == "mle") return FitMethod::MaximumLikelihood;
  if (name == "moments") return FitMethod::MethodOfMoments;
  throw invalid_argument("fit method must be 'mle' or 'moments'");
}

DatasetRef anonymous(std::size_t n) { return {"<python>", "python", n}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core of the ddetest package";
  m.attr("__version__") = kToolVersion;

  static py::exception<Error> base(m, "DdeError");
  static py::exception<Error> data(m, "DataError", base.ptr());
  static py::exception<Error> fit_err(m, "FitError", base.ptr());
  static py::exception<Error> numeric(m, "NumericError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      switch (e.kind()) {
        case ErrorKind::InvalidArgument: PyErr_SetString(PyExc_ValueError, e.what()); break;
        case ErrorKind::Data: data(e.what()); break;
        case ErrorKind::Fit: fit_err(e.what()); break;
        case ErrorKind::Numeric: numeric(e.what()); break;
      }
    }
  });

  py::class_<FittedModel>(m, "Model")
      .def_property_readonly("family", [](const FittedModel& f) { return std::string(info(f.family).name); })
      .def_readonly("theta", &FittedModel::theta)
      .def_readonly("n_fit", &FittedModel::n_fit)
      .def("log_pdf", [](const FittedModel& f, double x) { return log_pdf(f, x); })
      .def("pdf", [](const FittedModel& f, double x) { return pdf(f, x); })
      .def("entropy", [](const FittedModel& f) { return de_ml(f).value; })
      .def("mean", [](const FittedModel& f) { return mean_of(f); })
      .def("variance", [](const FittedModel& f) { return variance_of(f); })
      .def("quantile", [](const FittedModel& f, double p) { return quantile_of(f, p); })
      .def("sample", [](const FittedModel& f, std::size_t n, std::uint64_t seed) {
        RandomStream rng(seed);
        return sample(f, n, rng);
      }, py::arg("n"), py::arg("seed") = 0)
      .def("__eq__", [](const FittedModel& a, const FittedModel& b) { return a == b; })
      .def("__repr__", [](const FittedModel& f) { return describe(f); });

  m.def("families", [] {
    std::vector<std::string> out;
    for (const FamilyInfo& i : all_families()) out.emplace_back(i.name);
    return out;
  });
  m.def("testable_families", [] {
    std::vector<std::string> out;
    for (Family f : testable_nulls()) out.emplace_back(info(f).name);
    return out;
  });
  m.def("model", [](const std::string& family, std::vector<double> theta) {
    return make_model(family_arg(family), std::move(theta));
  }, py::arg("family"), py::arg("theta"));
  m.def("fit", [](const std::string& family, const std::vector<double>& data, const std::string& method) {
    return fit(family_arg(family), data, method_arg(method));
  }, py::arg("family"), py::arg("data"), py::arg("method") = "mle");

  m.def("_entropy_ml_json", [](const std::vector<double>& data, const std::string& family) {
    EntropyReport r;
    r.dataset = anonymous(data.size());
    r.family = family_arg(family);
    r.fitted = fit(r.family, data);
    r.estimate = de_ml(*r.fitted);
    return dump(to_json(r));
  });
  m.def("_entropy_kde_json", [](const std::vector<double>& data, const std::string& null_family) {
    EntropyReport r;
    r.dataset = anonymous(data.size());
    r.family = family_arg(null_family);
    const FittedModel fitted = fit(r.family, data);
    r.estimate = de_kde(data, select_bandwidth(fitted, data), support_of(r.family));
    return dump(to_json(r));
  });
  m.def("_run_test_json", [](const std::vector<double>& data, const std::string& family, double alpha,
                             std::size_t n_boot, std::uint64_t seed, unsigned threads, const std::string& method) {
    TestReport r;
    r.dataset = anonymous(data.size());
    r.config = {family_arg(family), alpha, n_boot, seed, threads, method_arg(method)};
    {
      py::gil_scoped_release release;
      r.result = run_test(data, r.config);
    }
    r.config.threads = 0;
    return dump(to_json(r));
  });

  m.def("p_value", [](double observed, const std::vector<double>& boot, double mean) {
    return p_value(observed, boot, mean);
  }, py::arg("observed"), py::arg("boot"), py::arg("boot_mean"));
  m.def("critical_interval", [](const std::vector<double>& boot, double alpha) {
    return critical_interval(boot, alpha);
  }, py::arg("boot"), py::arg("alpha") = 0.05);
  m.def("small_sample_inflation", &small_sample_inflation, py::arg("n"));

  m.def("load_dataset", [](const std::string& source, const std::string& column) {
    Dataset d = load_dataset(source, column);
    return py::make_tuple(d.name, d.values, d.source);
  }, py::arg("source"), py::arg("column") = "");
  m.def("fixtures", [] {
    std::vector<std::pair<std::string, std::string>> out;
    for (const FixtureInfo& f : bundled_fixtures()) out.emplace_back(f.id, f.description);
    return out;
  });
}
