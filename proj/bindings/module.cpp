#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "semigaps/bernoulli.hpp"
#include "semigaps/bernoulli_higher.hpp"
#include "semigaps/power_sums.hpp"
#include "semigaps/relations.hpp"
#include "semigaps/semigroup.hpp"

namespace py = pybind11;

namespace {

// mpz values routinely exceed 64 bits; go through the decimal string.
py::int_ to_py(const semigaps::Int& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::object to_fraction(const semigaps::Rat& q) {
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(semigaps::Int(q.get_num())), to_py(semigaps::Int(q.get_den())));
}

py::list to_py_list(const std::vector<std::uint64_t>& values) {
  py::list out;
  for (std::uint64_t v : values) out.append(py::int_(v));
  return out;
}

semigaps::BernoulliCache& shared_cache() {
  static semigaps::BernoulliCache cache;
  return cache;
}

py::list gaps_fn(const std::vector<std::uint64_t>& generators) {
  const semigaps::GeneratorTuple g = semigaps::validate(generators);
  return to_py_list(semigaps::gap_set(g).gaps);
}

py::dict validate_fn(const std::vector<std::uint64_t>& generators) {
  const semigaps::GeneratorTuple g = semigaps::validate(generators);
  py::dict out;
  out["generators"] = to_py_list(g.gens);
  out["minimal"] = g.minimal;
  return out;
}

py::dict power_sums_fn(const std::vector<std::uint64_t>& generators, unsigned n_max,
                       const std::string& mode) {
  semigaps::Mode m;
  if (mode == "verify") {
    m = semigaps::Mode::verify;
  } else if (mode == "fast") {
    m = semigaps::Mode::fast;
  } else {
    throw semigaps::invalid_input("mode must be \"verify\" or \"fast\"");
  }
  const semigaps::PowerSumReport report = semigaps::power_sums_auto(generators, n_max, m);

  py::dict out;
  out["generators"] = to_py_list(report.input);
  out["minimal"] = report.minimal;
  out["class"] = semigaps::pipeline_class_name(report.cls);
  py::list rows;
  for (const semigaps::PowerSumResult& r : report.results) {
    py::dict row;
    row["n"] = r.n;
    row["value"] = to_py(r.value);
    row["method"] = semigaps::method_name(r.method);
    row["verified"] =
        r.agreement.has_value() ? py::object(py::bool_(*r.agreement)) : py::object(py::none());
    rows.append(std::move(row));
  }
  out["results"] = std::move(rows);
  return out;
}

py::dict relations_fn(const std::vector<std::uint64_t>& generators) {
  const semigaps::GeneratorTuple g = semigaps::validate(generators);
  const semigaps::RelationMatrix rel = semigaps::minimal_relations(g);
  const semigaps::SemigroupClass cls = semigaps::classify(g, rel);

  py::dict out;
  out["generators"] = to_py_list(g.gens);
  py::list matrix;
  for (std::size_t i = 0; i < 3; ++i) {
    py::list row;
    for (std::size_t k = 0; k < 3; ++k) row.append(py::int_(rel.a[i][k]));
    matrix.append(std::move(row));
  }
  out["matrix"] = std::move(matrix);
  py::list wd;
  for (std::size_t i = 0; i < 3; ++i) wd.append(py::int_(rel.weighted_diag[i]));
  out["weighted_diagonal"] = std::move(wd);
  out["class"] = cls.symmetric() ? "symmetric" : "nonsymmetric";
  out["trace"] = to_py(cls.trace);
  out["j_invariant"] = cls.symmetric() ? py::object(py::none()) : py::object(to_py(cls.j_invariant));
  out["reduced_trace"] =
      cls.symmetric() ? py::object(to_py(cls.reduced_trace)) : py::object(py::none());
  out["numerator"] = semigaps::numerator_closed_form(g, cls, rel).to_string();
  return out;
}

py::list terms_to_py(const semigaps::NumeratorPolynomial& p) {
  py::list out;
  for (const auto& [exponent, coeff] : p.terms()) {
    out.append(py::make_tuple(py::int_(exponent), py::int_(coeff)));
  }
  return out;
}

py::dict hilbert_fn(const std::vector<std::uint64_t>& generators) {
  const semigaps::GeneratorTuple g = semigaps::validate(generators);
  semigaps::NumeratorPolynomial closed;
  if (g.count() == 2) {
    closed = semigaps::numerator_m2(g);
  } else {
    if (!g.minimal) throw semigaps::invalid_input("hilbert expects a minimal triple");
    const semigaps::RelationMatrix rel = semigaps::minimal_relations(g);
    const semigaps::SemigroupClass cls = semigaps::classify(g, rel);
    closed = semigaps::numerator_closed_form(g, cls, rel);
  }
  const semigaps::NumeratorPolynomial oracle = semigaps::numerator_from_oracle(g);

  py::dict out;
  out["generators"] = to_py_list(g.gens);
  out["closed_form"] = terms_to_py(closed);
  out["oracle"] = terms_to_py(oracle);
  out["equal"] = closed == oracle;
  return out;
}

py::object bernoulli_fn(unsigned long k) { return to_fraction(shared_cache().at(k)); }

py::object higher_bernoulli_fn(unsigned n, const py::int_& x,
                               const std::vector<unsigned long>& weights) {
  if (weights.empty() || weights.size() > 3) {
    throw semigaps::invalid_input("weights must hold one to three entries");
  }
  semigaps::HigherOrderQuery q;
  q.n = n;
  q.order = static_cast<unsigned>(weights.size());
  q.x = semigaps::Int(static_cast<std::string>(py::str(static_cast<py::handle>(x))));
  for (unsigned long w : weights) q.weights.emplace_back(w);
  return to_fraction(semigaps::eval_checked(q, shared_cache(), true));
}

py::object oracle_fn(const std::vector<std::uint64_t>& generators, unsigned n) {
  const semigaps::GeneratorTuple g = semigaps::validate(generators);
  return to_py(semigaps::oracle_power_sum(g, n));
}

}  // namespace

PYBIND11_MODULE(_semigaps, m) {
  m.doc() = "Exact gap power sums for numerical semigroups with two or three generators";

  m.def("gaps", &gaps_fn, py::arg("generators"),
        "Ascending list of unrepresentable positive integers");
  m.def("validate", &validate_fn, py::arg("generators"),
        "Sorted generators plus a minimality flag");
  m.def("power_sums", &power_sums_fn, py::arg("generators"), py::arg("n_max") = 6,
        py::arg("mode") = "verify",
        "Gap power sums g_0..g_{n_max}; verify mode cross-checks every value");
  m.def("relations", &relations_fn, py::arg("generators"),
        "Minimal relation matrix and classification of a minimal triple");
  m.def("hilbert", &hilbert_fn, py::arg("generators"),
        "Hilbert numerator from the closed form and from enumeration");
  m.def("bernoulli", &bernoulli_fn, py::arg("k"), "Bernoulli number B_k as a Fraction");
  m.def("higher_bernoulli", &higher_bernoulli_fn, py::arg("n"), py::arg("x"),
        py::arg("weights"), "Higher-order Bernoulli polynomial value as a Fraction");
  m.def("oracle_power_sum", &oracle_fn, py::arg("generators"), py::arg("n"),
        "Enumeration-based gap power sum, independent of the closed forms");
}
