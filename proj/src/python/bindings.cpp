// Python module echarpoly._core. Tensors cross the boundary as TensorDocument
// JSON text; reports come back as JSON text for the Python layer to decode.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "echar/echar.hpp"
#include "echar/eigen.hpp"
#include "echar/errors.hpp"
#include "echar/io.hpp"
#include "echar/resultant.hpp"
#include "echar/verify.hpp"

namespace py = pybind11;
using namespace echar;

namespace {

using Check = std::tuple<std::string, std::string, std::string>;

std::vector<Check> checks_of(const std::vector<CheckResult>& results) {
  std::vector<Check> out;
  for (const auto& r : results) out.emplace_back(r.name, std::string(to_string(r.status)), r.detail);
  return out;
}

std::vector<BigRational> rationals(const std::vector<std::string>& text) {
  std::vector<BigRational> out;
  for (const auto& s : text) out.push_back(parse_rational(s));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  auto& base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
  py::register_exception<UnsupportedError>(m, "UnsupportedError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());

  m.def(
      "echar",
      [](const std::string& doc, const std::string& route) {
        const Hypermatrix a = parse_tensor_document(doc);
        const RouteChoice choice = parse_route_choice(route);
        py::gil_scoped_release release;
        return echar_report(compute_echar(a, choice)).dump();
      },
      py::arg("doc"), py::arg("route") = "auto");

  m.def("eigen", [](const std::string& doc) {
    const Hypermatrix a = parse_tensor_document(doc);
    py::gil_scoped_release release;
    return eigen_report(a).dump();
  });

  m.def("is_regular", [](const std::string& doc) {
    const Hypermatrix a = parse_tensor_document(doc);
    const RegularityReport r = is_regular(a);
    std::optional<std::vector<std::pair<std::string, std::string>>> witness;
    if (r.exact_witness) {
      witness.emplace();
      for (const auto& z : *r.exact_witness) witness->emplace_back(to_string(z.re), to_string(z.im));
    }
    return std::make_pair(r.regular, witness);
  });

  m.def("verify", [](const std::string& doc) {
    const Hypermatrix a = parse_tensor_document(doc);
    py::gil_scoped_release release;
    return checks_of(verify_tensor(a));
  });

  m.def(
      "fuzz",
      [](int count, std::uint64_t seed, int order, int dim) {
        FuzzOptions opt;
        opt.count = count;
        opt.seed = seed;
        opt.order = order;
        opt.dim = dim;
        FuzzOutcome outcome;
        {
          py::gil_scoped_release release;
          outcome = run_fuzz(opt);
        }
        std::vector<std::vector<Check>> results;
        for (const auto& r : outcome.results) results.push_back(checks_of(r));
        return std::make_pair(outcome.ok(), results);
      },
      py::arg("count"), py::arg("seed"), py::arg("order") = 3, py::arg("dim") = 2);

  m.def("sylvester_resultant", [](const std::vector<std::string>& f, const std::vector<std::string>& g) {
    const auto fr = rationals(f), gr = rationals(g);
    return to_string(sylvester_resultant(std::span<const BigRational>(fr), std::span<const BigRational>(gr)));
  });

  m.def("tensor_document", [](const std::string& doc) { return tensor_document(parse_tensor_document(doc)).dump(); });
}
