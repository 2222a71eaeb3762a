#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "henkin/choice.hpp"
#include "henkin/indep.hpp"
#include "henkin/json_io.hpp"

namespace py = pybind11;
using namespace henkin;

namespace pybind11::detail {

// Atoms travel as (sort, index) tuples.
template <>
struct type_caster<Atom> {
  PYBIND11_TYPE_CASTER(Atom, const_name("tuple[int, int]"));

  bool load(handle src, bool) {
    if (!isinstance<sequence>(src) || isinstance<str>(src)) return false;
    auto seq = reinterpret_borrow<sequence>(src);
    if (seq.size() != 2) return false;
    value = {seq[0].cast<int>(), seq[1].cast<int>()};
    return true;
  }

  static handle cast(const Atom& a, return_value_policy, handle) { return make_tuple(a.sort, a.index).release(); }
};

// Supports travel as lists of atoms.
template <>
struct type_caster<SupportSet> {
  PYBIND11_TYPE_CASTER(SupportSet, const_name("list[tuple[int, int]]"));

  bool load(handle src, bool convert) {
    make_caster<std::vector<Atom>> inner;
    if (!inner.load(src, convert)) return false;
    value = SupportSet(cast_op<std::vector<Atom>&&>(std::move(inner)));
    return true;
  }

  static handle cast(const SupportSet& s, return_value_policy policy, handle parent) {
    return make_caster<std::vector<Atom>>::cast(s.atoms(), policy, parent);
  }
};

}  // namespace pybind11::detail

namespace {

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_py(const py::handle& obj) {
  return Json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

Formula as_formula(const py::object& f) {
  if (py::isinstance<py::str>(f)) return parse(f.cast<std::string>());
  return f.cast<Formula>();
}

// {"x": (1, 0), "A": <OrbitPredicate or predicate dict>}
Assignment as_assignment(const py::object& values, const Structure& s) {
  Assignment f;
  if (values.is_none()) return f;
  for (auto [key, value] : values.cast<py::dict>()) {
    std::string name = key.cast<std::string>();
    if (py::isinstance<OrbitPredicate>(value))
      f.bind(name, value.cast<OrbitPredicate>());
    else if (py::isinstance<py::dict>(value))
      f.bind(name, predicate_from_json(from_py(value), s));
    else
      f.bind(name, value.cast<Atom>());
  }
  return f;
}

EvalConfig config(const Structure& s, int budget) {
  EvalConfig cfg;
  cfg.structure = s;
  cfg.budget = budget;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(henkin_atoms, m) {
  m.doc() = "Finitely supported predicates over atoms, Henkin evaluation, choice witnesses and refuters";

  auto base = py::register_exception<Error>(m, "HenkinError", PyExc_ValueError);
  py::register_exception<SortError>(m, "SortError", base.ptr());
  py::register_exception<ArityError>(m, "ArityError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<UnboundVariable>(m, "UnboundVariable", base.ptr());
  py::register_exception<AntecedentError>(m, "AntecedentError", base.ptr());
  py::register_exception<WitnessExhausted>(m, "WitnessExhausted", base.ptr());
  py::register_exception<InternalError>(m, "InternalError", base.ptr());

  py::class_<Structure>(m, "Structure")
      .def(py::init(&Structure::parse), py::arg("spec"))
      .def_static("sigma0", &Structure::sigma0)
      .def_static("ksigma0", &Structure::ksigma0, py::arg("k"))
      .def_static("finite", &Structure::finite, py::arg("k"))
      .def_property_readonly("sorts", &Structure::sorts)
      .def_property_readonly("is_finite", &Structure::is_finite)
      .def("domain", &Structure::domain)
      .def("__eq__", [](const Structure& a, const Structure& b) { return a == b; })
      .def("__str__", &Structure::name)
      .def("__repr__", [](const Structure& s) { return "Structure('" + s.name() + "')"; });

  py::class_<FinitePermutation>(m, "Permutation")
      .def(py::init<>())
      .def("__call__", py::overload_cast<const Atom&>(&FinitePermutation::operator(), py::const_))
      .def("inverse", &FinitePermutation::inverse)
      .def("moved", [](const FinitePermutation& p) { return p.moved(); })
      .def("__matmul__", [](const FinitePermutation& a, const FinitePermutation& b) { return compose(a, b); })
      .def("__eq__", [](const FinitePermutation& a, const FinitePermutation& b) { return a == b; });

  m.def("transposition", &transposition, py::arg("a"), py::arg("b"));
  m.def("fresh_atom", py::overload_cast<int, const SupportSet&, const Structure&>(&fresh_atom), py::arg("sort"),
        py::arg("avoid"), py::arg("structure") = Structure::sigma0());

  py::class_<OrbitPredicate>(m, "Predicate")
      .def_static("finite_set", &OrbitPredicate::finite_set, py::arg("atoms"), py::arg("structure"))
      .def_static("cofinite_set", &OrbitPredicate::cofinite_set, py::arg("atoms"), py::arg("structure"))
      .def_static("empty", &OrbitPredicate::empty, py::arg("arity"), py::arg("structure"))
      .def_static("full", &OrbitPredicate::full, py::arg("arity"), py::arg("structure"))
      .def_static(
          "from_membership",
          [](int arity, const SupportSet& support, const Structure& s,
             const std::function<bool(const std::vector<Atom>&)>& member) {
            return OrbitPredicate::from_membership(arity, support, s, member);
          },
          py::arg("arity"), py::arg("support"), py::arg("structure"), py::arg("member"))
      .def_static(
          "from_json", [](const py::object& j, const Structure& s) { return predicate_from_json(from_py(j), s); },
          py::arg("data"), py::arg("structure"))
      .def("to_json", [](const OrbitPredicate& p) { return to_py(to_json(p)); })
      .def_property_readonly("arity", &OrbitPredicate::arity)
      .def_property_readonly("support", &OrbitPredicate::support)
      .def_property_readonly("structure", &OrbitPredicate::structure)
      .def("__contains__", [](const OrbitPredicate& p, const std::vector<Atom>& t) { return member(p, t); })
      .def("contains", [](const OrbitPredicate& p, const std::vector<Atom>& t) { return member(p, t); })
      .def("apply", &apply_perm, py::arg("perm"))
      .def("refine", &refine, py::arg("support"))
      .def("least_support", &least_support)
      .def("minimize", &minimize)
      .def("__and__", &conjunction)
      .def("__or__", &disjunction)
      .def("__sub__", &difference)
      .def("__invert__", &complement)
      .def("__eq__", [](const OrbitPredicate& a, const OrbitPredicate& b) { return equal(a, b); })
      .def("__repr__", [](const OrbitPredicate& p) { return "Predicate(" + to_json(p).dump() + ")"; });

  py::class_<Formula>(m, "Formula")
      .def(py::init(&parse), py::arg("text"))
      .def("free_variables",
           [](const Formula& f) {
             FreeVariables fv = free_variables(f);
             return py::make_tuple(fv.individuals, fv.predicates);
           })
      .def("__str__", [](const Formula& f) { return print(f); })
      .def("__repr__", [](const Formula& f) { return "Formula('" + print(f) + "')"; })
      .def("__eq__", [](const Formula& a, const Formula& b) { return a == b; });

  m.def("parse", &parse, py::arg("text"));
  m.def("parse_corpus", &parse_corpus, py::arg("text"));
  m.def(
      "choice_axiom", [](const py::object& h) { return mk_choice_axiom(as_formula(h)); }, py::arg("H"));
  m.def("trichotomy", &mk_trichotomy, py::arg("n") = 1);
  m.def("well_ordering", &mk_well_ordering, py::arg("n") = 1);

  m.def(
      "eval",
      [](const py::object& phi, const Structure& s, int budget, const py::object& values) {
        EvalResult r = eval(as_formula(phi), as_assignment(values, s), config(s, budget));
        return py::make_tuple(r.value, r.budget_limited);
      },
      py::arg("formula"), py::arg("structure") = Structure::sigma0(), py::arg("budget") = 2,
      py::arg("values") = py::none(), "Returns (value, budget_limited).");

  m.def(
      "build_sigma",
      [](const py::object& h, const Structure& s, int budget, const py::object& values) {
        ChoiceWitness w = build_sigma(as_formula(h), as_assignment(values, s), config(s, budget));
        py::dict out = to_py(to_json(w)).cast<py::dict>();
        out["verificationLimited"] = w.verification_limited;
        out["predicate"] = w.sigma;
        return out;
      },
      py::arg("H"), py::arg("structure") = Structure::sigma0(), py::arg("budget") = 2, py::arg("values") = py::none(),
      "Choice predicate for H(x, D): the certificate as a dict, with the Predicate under 'predicate'.");

  m.def(
      "check_injection",
      [](const OrbitPredicate& tau, int from_sort, int to_sort) -> py::object {
        auto r = check_injection(tau, from_sort, to_sort);
        if (!r) return py::none();
        return to_py(to_json(*r));
      },
      py::arg("tau"), py::arg("from_sort"), py::arg("to_sort"), "None when tau is an injection, else a refutation.");
  m.def(
      "check_well_order",
      [](const OrbitPredicate& t) -> py::object {
        auto r = check_well_order(t);
        if (!r) return py::none();
        return to_py(to_json(*r));
      },
      py::arg("order"));

  m.def(
      "refute_tr1",
      [](int k, int bound, bool keep_all, unsigned threads) {
        RefutationReport r;
        {
          py::gil_scoped_release release;
          r = refute_tr1(k, bound, keep_all, threads);
        }
        return to_py(to_json(r));
      },
      py::arg("k") = 2, py::arg("support_bound") = 2, py::arg("all") = false, py::arg("threads") = 0);
  m.def(
      "refute_wo1",
      [](int bound, bool keep_all) {
        RefutationReport r;
        {
          py::gil_scoped_release release;
          r = refute_wo1(bound, keep_all);
        }
        return to_py(to_json(r));
      },
      py::arg("support_bound") = 2, py::arg("all") = false);
}
