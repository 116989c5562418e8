#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "toricbundle/analysis.hpp"
#include "toricbundle/cli.hpp"
#include "toricbundle/errors.hpp"
#include "toricbundle/json_io.hpp"

namespace py = pybind11;
namespace tb = toricbundle;

namespace {

std::string dump(const tb::Json& j) { return j.dump(); }

tb::KaneyamaData data_of(const std::string& text) { return tb::data_from_json(tb::parse_json_text(text, "data")); }
tb::Fan fan_of(const std::string& text) { return tb::fan_from_json(tb::parse_json_text(text, "fan")); }

}  // namespace

PYBIND11_MODULE(_toricbundle, m) {
  m.doc() = "Exact Kaneyama data for torus-equivariant principal bundles (JSON string interface)";

  py::register_exception<tb::InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<tb::ValidationError>(m, "ValidationError", PyExc_RuntimeError);
  py::register_exception<tb::DimensionMismatch>(m, "DimensionMismatch", PyExc_ValueError);
  py::register_exception<tb::SingularMatrix>(m, "SingularMatrix", PyExc_ArithmeticError);

  m.def("projective_space", [](std::size_t n) { return dump(tb::to_json(tb::projective_space(n))); }, py::arg("n"));
  m.def(
      "kleinschmidt",
      [](std::size_t s, const std::vector<std::int64_t>& a) { return dump(tb::to_json(tb::kleinschmidt(s, a))); },
      py::arg("s"), py::arg("a"));
  m.def("validate_fan", [](const std::string& fan) { return dump(tb::to_json(tb::validate_fan(fan_of(fan)))); },
        py::arg("fan"));
  m.def("validate_data", [](const std::string& data) { return dump(tb::to_json(tb::validate(data_of(data)))); },
        py::arg("data"));
  m.def("tangent_frame_data",
        [](const std::string& fan) { return dump(tb::to_json(tb::tangent_frame_data(fan_of(fan)))); }, py::arg("fan"));
  m.def(
      "split_data",
      [](const std::string& fan, const std::string& spec) {
        const tb::Fan f = fan_of(fan);
        const auto s = tb::split_spec_from_json(tb::parse_json_text(spec, "spec"), f.num_rays());
        return dump(tb::to_json(tb::split_data(f, s.m, s.group)));
      },
      py::arg("fan"), py::arg("spec"));
  m.def(
      "extend_structure_group",
      [](const std::string& data, const std::string& embedding) {
        return dump(tb::to_json(tb::extend_structure_group(data_of(data), tb::parse_embedding(embedding))));
      },
      py::arg("data"), py::arg("embedding"));
  m.def(
      "aut_lie_algebra",
      [](const std::string& data, std::size_t base) { return dump(tb::to_json(tb::aut_lie_algebra(data_of(data), base))); },
      py::arg("data"), py::arg("base") = 0);
  m.def(
      "is_equivariant_automorphism",
      [](const std::string& data, const std::string& matrix, std::size_t base) {
        return tb::is_equivariant_automorphism(data_of(data), base,
                                               tb::matrix_from_json(tb::parse_json_text(matrix, "matrix")));
      },
      py::arg("data"), py::arg("matrix"), py::arg("base") = 0);
  m.def(
      "levi_reduction_check",
      [](const std::string& data, const std::string& partition, std::size_t base) {
        return tb::levi_reduction_check(data_of(data), base, tb::parse_partition(partition));
      },
      py::arg("data"), py::arg("partition"), py::arg("base") = 0);
  m.def(
      "split_check",
      [](const std::string& data, std::size_t base, std::uint64_t seed, std::size_t attempts) {
        tb::SplitOptions o;
        o.seed = seed;
        o.attempts = attempts;
        return dump(tb::to_json(tb::split_check(data_of(data), base, o)));
      },
      py::arg("data"), py::arg("base") = 0, py::arg("seed") = 0, py::arg("attempts") = 32);
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = tb::run_cli(args, out, err);
        return std::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
