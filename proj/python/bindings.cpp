#include "closefact/arith.hpp"
#include "closefact/family.hpp"
#include "closefact/model.hpp"
#include "closefact/report.hpp"
#include "closefact/search.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace closefact;
using report::Json;

namespace {

// Records cross the boundary as their jsonl form, so Python sees exactly
// what the CLI prints.
py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

BigInt to_big(const py::int_& v) { return parse_bigint(py::str(v).cast<std::string>()); }

py::object lattice_py(const model::LatticeTriple& t) {
  Json j{{"kind", "lattice"}};
  j.update(report::lattice_json(t));
  return to_py(j);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Close factorizations n = AB = (A+a1)(B-b1) = (A+a2)(B-b2).";

  py::register_exception<arith::budget_exceeded>(m, "BudgetExceeded", PyExc_MemoryError);
  py::register_exception<model::decomposition_failure>(m, "DecompositionFailure", PyExc_RuntimeError);

  m.def("is_prime", [](const py::int_& n) { return arith::is_prime(to_big(n)); }, py::arg("n"));
  m.def(
      "factorize",
      [](const py::int_& n) {
        std::vector<std::pair<py::int_, unsigned>> out;
        for (const auto& pp : arith::factorize(to_big(n)).prime_powers) {
          out.emplace_back(py::int_(py::str(to_string(pp.prime))), pp.exponent);
        }
        return out;
      },
      py::arg("n"));

  m.def(
      "solve",
      [](std::int64_t a1, std::int64_t b1, std::int64_t a2, std::int64_t b2) -> py::object {
        const auto t = model::solve_quad({a1, b1, a2, b2});
        if (!t) return py::none();
        return to_py(report::triple_record(*t));
      },
      py::arg("a1"), py::arg("b1"), py::arg("a2"), py::arg("b2"));
  m.def(
      "quad_from_points",
      [](const std::array<std::pair<py::int_, py::int_>, 3>& pts) {
        std::array<std::pair<BigInt, BigInt>, 3> big;
        for (std::size_t i = 0; i < 3; ++i) big[i] = {to_big(pts[i].first), to_big(pts[i].second)};
        const model::OffsetQuad q = model::quad_from_triple(big);
        return std::array<std::int64_t, 4>{q.a1, q.b1, q.a2, q.b2};
      },
      py::arg("points"));
  m.def(
      "classify",
      [](std::int64_t a1, std::int64_t b1, std::int64_t a2, std::int64_t b2) -> py::object {
        const auto t = model::solve_quad({a1, b1, a2, b2});
        if (!t) return py::none();
        return to_py(report::classify_record(*t, model::classify(*t)));
      },
      py::arg("a1"), py::arg("b1"), py::arg("a2"), py::arg("b2"));

  m.def("family", [](std::int64_t N) { return to_py(report::family_record(family::family_instance(N))); },
        py::arg("N"));
  m.def(
      "family_threshold",
      [](std::int64_t N_max) { return to_py(report::threshold_record(family::family_threshold_scan(N_max))); },
      py::arg("N_max"));

  m.def("max_ab", [](std::int64_t C) { return to_py(report::scan_record(search::max_AB(C))); },
        py::arg("C"));
  m.def(
      "scan_gaps",
      [](std::uint64_t lo, std::uint64_t hi, unsigned workers, std::uint64_t sieve_ceiling) {
        search::ScanReport r;
        {
          py::gil_scoped_release release;
          r = search::scan_gaps(lo, hi, {workers, sieve_ceiling});
        }
        return to_py(report::scan_record(r));
      },
      py::arg("lo"), py::arg("hi"), py::arg("workers") = 1,
      py::arg("sieve_ceiling") = arith::DivisorSieve::kDefaultCeiling);
  m.def(
      "cross_check",
      [](std::uint64_t n_max, std::int64_t C) { return to_py(report::scan_record(search::cross_check(n_max, C))); },
      py::arg("n_max"), py::arg("C"));

  m.def(
      "triples",
      [](const py::int_& n, std::optional<std::int64_t> cap, bool consecutive) {
        py::list out;
        for (const auto& t : search::triples_for_n(to_big(n), {cap, consecutive})) {
          out.append(to_py(report::triple_record(t)));
        }
        return out;
      },
      py::arg("n"), py::arg("cap") = py::none(), py::arg("consecutive") = false);
  m.def(
      "min_gap_triple",
      [](const py::int_& n) -> py::object {
        const auto t = search::min_gap_triple(to_big(n));
        return t ? lattice_py(*t) : py::none();
      },
      py::arg("n"));
}
