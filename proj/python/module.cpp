// pybind11 bindings for the main operations.  Structured results cross the
// boundary as JSON strings; the Python package decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "grmw/arrangements.hpp"
#include "grmw/constructors.hpp"
#include "grmw/json_io.hpp"

namespace py = pybind11;

namespace {

std::string weights_json(int q, int m, int r) {
  return grmw::weights_answer_json(q, m, r).dump();
}

long long n_points_py(int q, int m, const std::vector<int>& sizes) {
  return grmw::n_points(q, m, grmw::ArrangementType{sizes}.canonical());
}

std::string spectrum_csv_py(int q, int m, int r, int shards, long long cap,
                            int max_distinct) {
  grmw::SpectrumOptions opts;
  opts.shards = shards;
  opts.weight_cap = cap;
  opts.max_distinct = max_distinct;
  return grmw::spectrum_to_csv(grmw::exhaustive_spectrum(q, m, r, opts));
}

std::string construct_third_json(int q, int m, int a, int b) {
  grmw::Poly w = grmw::build_third_weight(q, m, a, b);
  grmw::json out;
  out["poly"] = grmw::poly_to_json(w);
  out["weight"] = w.weight();
  return out.dump();
}

long long poly_weight_py(const std::string& poly_json) {
  return grmw::poly_from_json(grmw::json::parse(poly_json)).weight();
}

std::string verify_json(const std::string& suite, bool extended, int threads) {
  return grmw::report_to_json(
             grmw::run_verification_suite(suite, extended, threads))
      .dump();
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Generalized Reed-Muller weight toolkit (core bindings)";
  py::register_exception<grmw::Error>(mod, "GrmwError");

  mod.def("weights_json", &weights_json, py::arg("q"), py::arg("m"),
          py::arg("r"), "Closed-form w1/w2/w3 record as a JSON string");
  mod.def("n_points", &n_points_py, py::arg("q"), py::arg("m"),
          py::arg("sizes"), "Points covered by a block arrangement union");
  mod.def("spectrum_csv", &spectrum_csv_py, py::arg("q"), py::arg("m"),
          py::arg("r"), py::arg("shards") = 1, py::arg("cap") = -1,
          py::arg("max_distinct") = -1,
          "Exhaustive weight spectrum in CSV form",
          py::call_guard<py::gil_scoped_release>());
  mod.def("top3_csv", &grmw::top3_to_csv, py::arg("q"), py::arg("m"),
          py::arg("d"), "Top-three arrangement union counts in CSV form");
  mod.def("construct_third_json", &construct_third_json, py::arg("q"),
          py::arg("m"), py::arg("a"), py::arg("b"),
          "Exact third-weight witness codeword as a JSON string");
  mod.def("poly_weight", &poly_weight_py, py::arg("poly_json"),
          "Weight of a polynomial given in the JSON wire format");
  mod.def("verify_json", &verify_json, py::arg("suite") = "all",
          py::arg("extended") = false, py::arg("threads") = 1,
          "Run a verification suite; report as a JSON string",
          py::call_guard<py::gil_scoped_release>());
}
