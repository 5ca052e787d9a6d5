#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "srlab/cli.hpp"
#include "srlab/enumerate.hpp"
#include "srlab/error.hpp"
#include "srlab/expr.hpp"
#include "srlab/fraction.hpp"
#include "srlab/polynomial.hpp"
#include "srlab/suites.hpp"

namespace py = pybind11;
using namespace srlab;

// pybind11 holders cannot point to const; carriers are immutable anyway.
using Handle = std::shared_ptr<Semiring>;

namespace {

Handle handle(const SemiringPtr& S) { return std::const_pointer_cast<Semiring>(S); }

py::object to_py(const nlohmann::ordered_json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Int int_of(const py::handle& h) { return parse_int(py::str(h).cast<std::string>()); }

// Python values: int for integer carriers, tuple of ints for min-plus,
// None for bottom, Ideal for FId elements.
Element element_of(const SemiringPtr& S, const py::handle& h) {
  if (h.is_none()) return Element::bottom();
  if (py::isinstance<Ideal>(h)) return fid_element(h.cast<Ideal>());
  if (py::isinstance<py::tuple>(h) || py::isinstance<py::list>(h)) {
    Coords c;
    for (auto x : h) c.push_back(int_of(x));
    return Element(std::move(c));
  }
  if (py::isinstance<py::int_>(h)) {
    if (S->carrier() == Carrier::min_plus && S->dimension() == 1) return Element(Coords{int_of(h)});
    return Element(int_of(h));
  }
  throw CarrierMismatch("cannot convert " + py::repr(h).cast<std::string>() + " to an element of " + S->id());
}

py::object element_to_py(const Element& e) {
  if (e.is_bottom()) return py::none();
  if (e.is_ideal()) return py::cast(e.ideal());
  auto big = [](const Int& v) { return py::int_(py::str(to_string(v))); };
  if (e.is_coords()) {
    py::tuple t(e.coords().size());
    for (std::size_t i = 0; i < e.coords().size(); ++i) t[i] = big(e.coords()[i]);
    return t;
  }
  return big(e.as_int());
}

std::vector<Element> elements_of(const SemiringPtr& S, const py::iterable& xs) {
  std::vector<Element> out;
  for (auto x : xs) out.push_back(element_of(S, x));
  return out;
}

Sampler sampler(std::uint64_t seed, std::size_t samples, unsigned threads) {
  Sampler s;
  s.seed = seed;
  s.samples = samples;
  s.threads = threads;
  return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact ideal arithmetic over commutative semirings";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<CarrierMismatch>(m, "CarrierMismatch", error);
  py::register_exception<Unsupported>(m, "Unsupported", error);
  py::register_exception<PreconditionError>(m, "PreconditionError", error);
  py::register_exception<ResourceLimit>(m, "ResourceLimit", error);
  py::register_exception<InternalError>(m, "InternalError", error);
  py::register_exception<ParseError>(m, "ParseError", error);

  py::class_<Semiring, Handle>(m, "Semiring")
      .def_property_readonly("id", &Semiring::id)
      .def_property_readonly("is_finite", &Semiring::is_finite)
      .def_property_readonly("is_semidomain", [](const Semiring& S) { return S.flags().semidomain; })
      .def_property_readonly("zero", [](const Semiring& S) { return element_to_py(S.zero()); })
      .def_property_readonly("one", [](const Semiring& S) { return element_to_py(S.one()); })
      .def("add", [](const Handle& S, py::handle a, py::handle b) {
        return element_to_py(S->add(element_of(S, a), element_of(S, b)));
      })
      .def("mul", [](const Handle& S, py::handle a, py::handle b) {
        return element_to_py(S->mul(element_of(S, a), element_of(S, b)));
      })
      .def("elements", [](const Semiring& S) {
        py::list out;
        for (const auto& e : S.elements()) out.append(element_to_py(e));
        return out;
      })
      .def("table", [](const Semiring& S) { return format_table(to_table(S)); })
      .def("__repr__", [](const Semiring& S) { return "Semiring('" + S.id() + "')"; });

  m.def("semiring", [](const std::string& name) { return handle(semiring_from_name(name)); }, py::arg("name"),
        "Carrier by catalog name: nat, bool, gcd, minplus(k), divisors(n), powerset(n), fid(<name>), table(<path>).");
  m.def("semiring_catalog", &semiring_catalog);
  m.def("table_semiring", [](const std::string& text, const std::string& name) {
    return handle(Semiring::finite(parse_table(text), name));
  }, py::arg("text"), py::arg("name") = "table");
  m.def("verify_axioms", [](const std::string& text) { return to_py(to_json(verify_axioms(parse_table(text)))); });

  py::class_<Ideal>(m, "Ideal")
      .def(py::init([](const Handle& S, const py::iterable& gens) { return mk_ideal(S, elements_of(S, gens)); }),
           py::arg("semiring"), py::arg("generators"))
      .def_property_readonly("semiring", [](const Ideal& I) { return handle(I.semiring()); })
      .def_property_readonly("generators", [](const Ideal& I) {
        py::list out;
        for (const auto& g : I.generators()) out.append(element_to_py(g));
        return out;
      })
      .def_property_readonly("basis", [](const Ideal& I) {
        py::list out;
        for (const auto& g : I.basis()) out.append(element_to_py(g));
        return out;
      })
      .def_property_readonly("is_zero", &Ideal::is_zero)
      .def_property_readonly("is_principal", &Ideal::is_principal)
      .def("__contains__", [](const Ideal& I, py::handle x) { return contains(I, element_of(I.semiring(), x)); })
      .def("__add__", &add_ideals)
      .def("__mul__", &mul_ideals)
      .def("__and__", &intersect)
      .def("__pow__", [](const Ideal& I, unsigned e) { return pow(I, e); })
      .def("__eq__", [](const Ideal& I, const Ideal& J) { return equals(I, J); })
      .def("__le__", [](const Ideal& I, const Ideal& J) { return is_subset(I, J); })
      .def("colon", [](const Ideal& I, const Ideal& J) { return colon(I, J).ideal; })
      .def("is_invertible", &is_invertible)
      .def("is_prime", [](const Ideal& I) { return is_prime(I); })
      .def("is_subtractive", [](const Ideal& I) { return is_subtractive(I).value; })
      .def("canonical", [](const Ideal& I) { return to_py(canonical_json(I)); })
      .def("__str__", [](const Ideal& I) { return format(I); })
      .def("__repr__", [](const Ideal& I) { return "Ideal(" + I.semiring()->id() + ", " + format(I) + ")"; });

  m.def("eval", [](const std::string& expr, const Handle& S, const std::map<std::string, Ideal>& env) -> py::object {
    auto r = eval_expr(*parse_expr(expr), S, Env(env.begin(), env.end()));
    if (r.is_bool()) return py::bool_(r.truth());
    return py::cast(r.ideal());
  }, py::arg("expr"), py::arg("semiring"), py::arg("env") = std::map<std::string, Ideal>{});
  m.def("normalize_expr", [](const std::string& expr) { return print_expr(*parse_expr(expr)); },
        "Parses and prints an expression with minimal parentheses.");

  m.def("gaussian_pair", [](const Handle& S, const py::iterable& f, const py::iterable& g) {
    return gaussian_pair(Polynomial(S, elements_of(S, f)), Polynomial(S, elements_of(S, g))).holds;
  });
  m.def("dm_pair", [](const Handle& S, const py::iterable& f, const py::iterable& g) {
    return dm_pair(Polynomial(S, elements_of(S, f)), Polynomial(S, elements_of(S, g))).holds;
  });
  m.def("search", [](const std::string& kind, const Handle& S, std::size_t max_deg, std::int64_t coeff_bound,
                     unsigned threads) {
    if (kind != "gaussian" && kind != "dm") throw Error("kind must be gaussian or dm");
    auto r = kind == "gaussian" ? gaussian_search(S, max_deg, coeff_bound, threads)
                                : dm_search(S, max_deg, coeff_bound, threads);
    return to_py(r.to_json());
  }, py::arg("kind"), py::arg("semiring"), py::arg("max_deg") = 2, py::arg("coeff_bound") = 9, py::arg("threads") = 1);

  m.def("check", [](const std::string& suite, const Handle& S, std::uint64_t seed, std::size_t samples,
                    unsigned threads) {
    return to_py(run_suite(suite, S, sampler(seed, samples, threads)).to_json());
  }, py::arg("suite"), py::arg("semiring"), py::arg("seed") = 42, py::arg("samples") = 100, py::arg("threads") = 1);
  m.def("suite_catalog", &suite_catalog);

  m.def("enumerate", [](std::size_t order, bool classify, std::size_t deg, unsigned threads) {
    EnumerationTask task;
    task.order = order;
    task.threads = threads;
    py::list out;
    if (classify) {
      for (const auto& r : classify_all(task, deg).records) out.append(to_py(r.to_json()));
    } else {
      for (const auto& t : enumerate_semirings(task).tables) out.append(format_table(t));
    }
    return out;
  }, py::arg("order"), py::arg("classify") = false, py::arg("deg") = 2, py::arg("threads") = 1);

  m.def("falsify", [](const std::string& expr, const std::vector<Handle>& carriers, std::uint64_t seed,
                      std::size_t samples) -> py::object {
    auto cx = falsify(*parse_expr(expr), std::vector<SemiringPtr>(carriers.begin(), carriers.end()),
                      sampler(seed, samples, 1));
    return cx ? to_py(cx->to_json()) : py::none();
  }, py::arg("expr"), py::arg("semirings"), py::arg("seed") = 42, py::arg("samples") = 100);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code;
    {
      py::gil_scoped_release release;
      code = cli::run(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs the command-line front end in-process; returns (exit code, stdout, stderr).");
}
