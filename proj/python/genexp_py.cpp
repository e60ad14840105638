#include "genexp/errors.hpp"
#include "genexp/exponents.hpp"
#include "genexp/fourier.hpp"
#include "genexp/quasisym.hpp"
#include "genexp/tableaux.hpp"
#include "genexp/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace genexp;

namespace {

py::int_ to_py(const Integer& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.str().c_str(), nullptr, 10));
}

py::dict poly_to_py(const LaurentPolynomial& p) {
  py::dict d;
  for (const auto& [e, c] : p.terms()) d[py::int_(e)] = to_py(c);
  return d;
}

py::set set_to_py(const IndexSet& s) {
  py::set out;
  for (int x : s) out.add(py::int_(x));
  return out;
}

Weight dominant(const std::vector<int>& coords) {
  Weight w(coords);
  require_first_layer_dominant(w);
  return w;
}

}  // namespace

PYBIND11_MODULE(_genexp, m) {
  m.doc() = "Generalized exponents of first-layer weights in type A";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<VerificationError>(m, "VerificationError", PyExc_RuntimeError);

  m.def("methods", [] {
    std::vector<std::string> out;
    for (Method x : all_methods()) out.emplace_back(method_name(x));
    return out;
  });

  m.def(
      "weight_from_partition",
      [](const std::vector<int>& parts, std::optional<int> rank) {
        const Partition p(parts);
        return composition_to_weight(Composition(p.parts()), rank.value_or(p.size() - 1)).coords();
      },
      py::arg("parts"), py::arg("rank") = py::none());

  m.def("shape", [](const std::vector<int>& lambda) { return phi_weight(Weight(lambda)).parts(); },
        py::arg("weight"));

  m.def("height", [](const std::vector<int>& w) { return height(Weight(w)); }, py::arg("weight"));

  m.def(
      "exponents",
      [](const std::vector<int>& lambda, const std::string& method, std::optional<int> hp_cap) {
        return poly_to_py(compute_exponents(dominant(lambda), parse_method(method), hp_cap.value_or(default_hp_cap())));
      },
      py::arg("weight"), py::arg("method") = "tableaux", py::arg("hp_cap") = py::none());

  m.def(
      "full_report",
      [](const std::vector<int>& lambda, std::optional<std::vector<std::string>> methods, std::optional<int> hp_cap) {
        std::vector<Method> ms;
        if (methods)
          for (const auto& name : *methods) ms.push_back(parse_method(name));
        else
          ms = all_methods();
        const ExponentReport r = full_report(dominant(lambda), ms, hp_cap.value_or(default_hp_cap()));
        py::dict per;
        for (const auto& [x, p] : r.polynomials) per[py::str(std::string(method_name(x)))] = poly_to_py(p);
        py::dict out;
        out["polynomials"] = per;
        out["agreement"] = r.agreement;
        out["disagreement"] = r.disagreement ? py::object(py::str(r.disagreement->describe())) : py::none();
        out["exponents"] = r.exponents;
        out["zero_weight_dimension"] = to_py(r.zero_weight_dimension);
        out["normalization_ok"] = r.normalization_ok;
        out["nonnegative"] = r.nonnegative;
        return out;
      },
      py::arg("weight"), py::arg("methods") = py::none(), py::arg("hp_cap") = py::none());

  m.def(
      "fourier",
      [](const std::vector<int>& mu) {
        Weight w(mu);
        require_first_layer(w);
        return poly_to_py(c_closed_form(w));
      },
      py::arg("weight"));

  m.def(
      "solve_system",
      [](int rank) {
        py::dict out;
        for (const auto& [w, p] : solve_system(rank)) out[py::tuple(py::cast(w.coords()))] = poly_to_py(p);
        return out;
      },
      py::arg("rank"));

  m.def(
      "syt",
      [](const std::vector<int>& parts) {
        const Partition p(parts);
        py::list out;
        for (const auto& t : syt_enumerate(p)) {
          py::dict d;
          d["rows"] = t.rows();
          d["descents"] = set_to_py(descent_set(t));
          d["height"] = tableau_height(t);
          d["reading_word"] = reading_word(t);
          d["charge"] = charge(t);
          out.append(d);
        }
        return out;
      },
      py::arg("partition"));

  m.def(
      "height_set",
      [](const std::vector<int>& w) { return set_to_py(height_set(QuasiDominantWeight(Weight(w)))); },
      py::arg("weight"));

  m.def(
      "height_set_inverse",
      [](const std::set<int>& s, int rank) { return height_set_inverse(s, rank).weight().coords(); },
      py::arg("subset"), py::arg("rank"));

  m.def(
      "canonical_expression",
      [](const std::vector<int>& w) {
        std::vector<std::pair<int, int>> out;
        for (const auto& b : canonical_expression(QuasiDominantWeight(Weight(w)))) out.emplace_back(b.from, b.to);
        return out;
      },
      py::arg("weight"));

  m.def(
      "verify",
      [](int rank, const std::vector<std::string>& skip, std::optional<int> hp_cap) {
        VerifyOptions opts;
        opts.skip = std::set<std::string>(skip.begin(), skip.end());
        opts.hp_cap = hp_cap.value_or(default_hp_cap());
        py::list out;
        for (const auto& r : verify_rank(rank, opts)) {
          py::dict d;
          d["name"] = r.name;
          d["passed"] = r.passed;
          d["skipped"] = r.skipped;
          d["cases"] = r.cases;
          d["detail"] = r.detail;
          out.append(d);
        }
        return out;
      },
      py::arg("rank"), py::arg("skip") = std::vector<std::string>{}, py::arg("hp_cap") = py::none());
}
