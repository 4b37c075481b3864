#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include <json.hpp>

#include "isetlab/constructions.hpp"
#include "isetlab/core.hpp"
#include "isetlab/counting.hpp"
#include "isetlab/error.hpp"
#include "isetlab/exact.hpp"
#include "isetlab/harness.hpp"
#include "isetlab/serialize.hpp"
#include "isetlab/threshold.hpp"
#include "isetlab/transversal.hpp"

namespace py = pybind11;
using namespace isetlab;

namespace {

using Lists = std::vector<std::vector<int>>;

py::int_ to_py(const ExactNat& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.to_string().c_str(), nullptr, 10));
}

py::object from_json(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::object to_fraction(const Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(r.numerator(), r.denominator());
}

Family family_of(int universe, const Lists& sets) { return Family::from_lists(universe, sets); }

}  // namespace

PYBIND11_MODULE(_isetlab, m) {
  m.doc() = "Exact tools for t-intersecting families and their distinct intersections";
  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);

  m.def("binom", [](std::int64_t n, std::int64_t r) { return to_py(binom(n, r)); }, py::arg("n"), py::arg("r"));
  m.def("count_I_At", [](int n, int k, int t) { return to_py(count_I_At(n, k, t)); }, py::arg("n"), py::arg("k"),
        py::arg("t"));
  m.def("count_I_sunflower", [](int n, int k, int t) { return to_py(count_I_sunflower(n, k, t)); }, py::arg("n"),
        py::arg("k"), py::arg("t"));
  m.def("ekr_bound", [](int n, int k, int t) { return to_py(ekr_bound(n, k, t)); }, py::arg("n"), py::arg("k"),
        py::arg("t"));
  m.def("sunflower_chain_check", &sunflower_chain_check, py::arg("n"), py::arg("k"), py::arg("t"));

  m.def("build_A_t", [](int n, int k, int t) { return build_A_t(n, k, t).to_lists(); }, py::arg("n"), py::arg("k"),
        py::arg("t"));
  m.def("build_sunflower",
        [](int n, int k, const std::vector<int>& core) { return build_sunflower(n, k, Subset::of(n, core)).to_lists(); },
        py::arg("n"), py::arg("k"), py::arg("core"));
  m.def("build_triangle", [](int n, int t) { return build_triangle(n, t).to_lists(); }, py::arg("n"), py::arg("t"));
  m.def("build_full_level", [](int n, int k) { return build_full_level(n, k).to_lists(); }, py::arg("n"),
        py::arg("k"));

  m.def("distinct_intersections",
        [](int universe, const Lists& sets) { return distinct_intersections(family_of(universe, sets)).to_lists(); },
        py::arg("universe"), py::arg("sets"));
  m.def("is_t_intersecting",
        [](int universe, const Lists& sets, int t) { return is_t_intersecting(family_of(universe, sets), t); },
        py::arg("universe"), py::arg("sets"), py::arg("t"));
  m.def("classify",
        [](int universe, const Lists& sets, int t) {
          return from_json(kind_to_json(classify_level_family(family_of(universe, sets), t)));
        },
        py::arg("universe"), py::arg("sets"), py::arg("t"));
  m.def("generator_profile",
        [](int universe, const Lists& sets, int t, int k) {
          return from_json(profile_to_json(generator_profile(family_of(universe, sets), t, k)));
        },
        py::arg("universe"), py::arg("sets"), py::arg("t"), py::arg("k"));

  m.def("eval_threshold_sides",
        [](std::int64_t n, int k, int t) {
          const ThresholdVerdict v = eval_threshold_sides(n, k, t);
          py::dict d;
          d["n"] = v.n;
          d["k"] = v.k;
          d["t"] = v.t;
          d["lhs"] = to_py(v.lhs);
          d["rhs"] = to_py(v.rhs);
          d["holds"] = v.holds;
          return d;
        },
        py::arg("n"), py::arg("k"), py::arg("t"));
  m.def("f_min", &f_min, py::arg("k"), py::arg("t"), py::arg("window") = 16,
        py::call_guard<py::gil_scoped_release>());
  m.def("epsilon_of", [](int k, int t) { return to_fraction(epsilon_of(k, t)); }, py::arg("k"), py::arg("t"));

  m.def("enumerate_maximal_families",
        [](int n, int k, int t, std::uint64_t budget) {
          std::vector<Lists> out;
          for (const Family& f : enumerate_maximal_families(n, k, t, budget)) out.push_back(f.to_lists());
          return out;
        },
        py::arg("n"), py::arg("k"), py::arg("t"), py::arg("vertex_budget") = kDefaultVertexBudget);
  m.def("extremal_report",
        [](int n, int k, int t, bool audit, std::uint64_t budget, std::size_t argmax_cap) {
          ReportOptions o;
          o.audit = audit;
          o.vertex_budget = budget;
          o.argmax_cap = argmax_cap;
          const ExtremalReport r = extremal_report(n, k, t, o);
          py::dict d = from_json(report_to_json(r));
          if (r.count_I_At) d["count_I_At"] = to_py(*r.count_I_At);
          return d;
        },
        py::arg("n"), py::arg("k"), py::arg("t"), py::arg("audit") = false,
        py::arg("vertex_budget") = kDefaultVertexBudget, py::arg("argmax_cap") = 16);
  m.def("audit",
        [](int universe, const Lists& sets, int t) {
          return from_json(audit_to_json(audit_proof_inequalities(family_of(universe, sets), t)));
        },
        py::arg("universe"), py::arg("sets"), py::arg("t"));
}
