// Thin pybind11 layer: inputs come in as (type, word, m) and reports go out
// as JSON text, decoded on the Python side.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bsgw/errors.hpp"
#include "bsgw/report.hpp"
#include "bsgw/selftest.hpp"

namespace py = pybind11;

namespace {

bsgw::BSInput to_input(const std::string& type, const std::vector<int>& word, const std::vector<std::string>& m) {
  return bsgw::JobSpec{type, word, m}.to_input();
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Gromov widths of Bott-Samelson varieties, exact arithmetic";

  auto base = py::register_exception<bsgw::Error>(mod, "Error", PyExc_RuntimeError);
  auto input_error = py::register_exception<bsgw::InputError>(mod, "InputError", base.ptr());
  py::register_exception<bsgw::PreconditionError>(mod, "PreconditionError", input_error.ptr());
  py::register_exception<bsgw::InvariantViolation>(mod, "InvariantViolation", base.ptr());

  mod.def(
      "report",
      [](const std::string& type, const std::vector<int>& word, const std::vector<std::string>& m, bool force) {
        return bsgw::report_json(to_input(type, word, m), force).dump();
      },
      py::arg("type"), py::arg("word"), py::arg("m"), py::arg("force_degeneration") = false);

  mod.def(
      "check_p",
      [](const std::string& type, const std::vector<int>& word, const std::vector<std::string>& m) {
        return bsgw::check_p_json(to_input(type, word, m)).dump();
      },
      py::arg("type"), py::arg("word"), py::arg("m"));

  mod.def(
      "gromov_width",
      [](const std::string& type, const std::vector<int>& word, const std::vector<std::string>& m) {
        return bsgw::to_string(bsgw::gromov_width(to_input(type, word, m)).width);
      },
      py::arg("type"), py::arg("word"), py::arg("m"));

  mod.def(
      "lattice_count",
      [](const std::string& type, const std::vector<int>& word, const std::vector<std::string>& m,
         unsigned long long cap) {
        return bsgw::lattice_points(bsgw::build_chain(to_input(type, word, m)), cap).count;
      },
      py::arg("type"), py::arg("word"), py::arg("m"), py::arg("cap") = 1000000ULL);

  mod.def(
      "bott",
      [](const std::string& collection) {
        auto j = bsgw::json::parse(collection);
        auto c = bsgw::collection_from_json(j);
        auto d = j.contains("divisor") ? bsgw::divisor_from_json(j["divisor"], c)
                                       : bsgw::DivisorClass{std::vector<bsgw::Rational>(c.ray_count())};
        return bsgw::bott_json(c, d).dump();
      },
      py::arg("collection"));

  mod.def(
      "selftest",
      [](const std::string& suite, std::uint64_t trials, std::uint64_t seed) {
        return bsgw::selftest_json(bsgw::run_selftest(suite, trials, seed), trials, seed).dump();
      },
      py::arg("suite") = "all", py::arg("trials") = 200, py::arg("seed") = 42);
}
