#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "commands.hpp"
#include "selftest.hpp"
#include "twistcert/certify.hpp"
#include "twistcert/error.hpp"
#include "twistcert/pipeline.hpp"

namespace py = pybind11;
using namespace twistcert;

namespace {

// JSON crosses the boundary as text; the Python wrapper decodes it.
std::string certify(const std::string& preset, int threads) {
  RunConfig config;
  config.preset = preset;
  config.threads = threads;
  py::gil_scoped_release release;
  return certificate_json(run_certification(config).certificate).dump();
}

std::string classes(int p, int q, int r, const std::string& max_length, int threads) {
  py::gil_scoped_release release;
  TrianglePresentation t = build_presentation(p, q, r);
  return classes_json(t, build_classes(t, parse_rational(max_length), threads)).dump();
}

ResolvedRun preset_run(const std::string& preset) {
  RunConfig config;
  config.preset = preset;
  return resolve(config);
}

std::string group(const std::string& preset) {
  py::gil_scoped_release release;
  return group_json(build_group(preset_run(preset)).group).dump();
}

std::string chartable(const std::string& preset) {
  py::gil_scoped_release release;
  ResolvedRun run = preset_run(preset);
  return character_table_json(build_table(run, build_group(run).group).table).dump();
}

py::list selftest(const std::vector<std::string>& inject, int threads) {
  std::vector<cli::SuiteResult> results;
  {
    py::gil_scoped_release release;
    results = cli::run_selftest({inject, threads});
  }
  py::list out;
  for (const auto& r : results) {
    py::dict d;
    d["name"] = r.name;
    d["pass"] = r.pass;
    d["detail"] = r.detail;
    d["seconds"] = r.seconds;
    out.append(d);
  }
  return out;
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code;
  {
    py::gil_scoped_release release;
    code = cli::run(args, out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Certified twisted trace formula computations for (2,3,r) triangle group quotients";

  auto base = py::register_exception<Error>(m, "TwistcertError", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "InputError", base.ptr());
  py::register_exception<PrecisionError>(m, "PrecisionError", base.ptr());
  py::register_exception<BudgetExhausted>(m, "BudgetExhausted", base.ptr());
  py::register_exception<InconclusiveCertificate>(m, "InconclusiveCertificate", base.ptr());

  m.def("preset_names", &preset_names);
  m.def("default_precision", [] { return static_cast<long>(default_precision()); });
  m.def("set_default_precision", [](long bits) {
    if (bits < 32) throw InputError("precision must be at least 32 bits");
    set_default_precision(static_cast<Precision>(bits));
  });
  m.def("certify", &certify, py::arg("preset"), py::arg("threads") = 1);
  m.def("classes", &classes, py::arg("p"), py::arg("q"), py::arg("r"), py::arg("max_length"),
        py::arg("threads") = 1);
  m.def("group", &group, py::arg("preset"));
  m.def("chartable", &chartable, py::arg("preset"));
  m.def("selftest", &selftest, py::arg("inject") = std::vector<std::string>{}, py::arg("threads") = 1);
  m.def("run_cli", &run_cli, py::arg("args"));
}
