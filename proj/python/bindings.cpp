#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lpa/cli.hpp"
#include "lpa/expression.hpp"
#include "lpa/graph.hpp"
#include "lpa/lie.hpp"
#include "lpa/oracles.hpp"

namespace py = pybind11;
using namespace lpa;

namespace {

// An element bound to the algebra it was parsed in.
struct PyElement {
  std::shared_ptr<const LeavittContext> ctx;
  Element value;

  std::string str() const { return to_string(ctx->graph(), value); }
  PyElement with(Element v) const { return {ctx, std::move(v)}; }
  void check(const PyElement& o) const {
    if (ctx != o.ctx) throw py::value_error("elements belong to different algebras");
  }
};

class Algebra {
 public:
  Algebra(const std::string& graph_text, std::uint32_t characteristic,
          const std::map<std::string, std::string>& special)
      : ctx_(make(graph_text, characteristic, special)) {}

  PyElement element(const std::string& text) const { return {ctx_, parse_element(ctx_->graph(), ctx_->field(), text)}; }
  PyElement nf(const PyElement& x) const { return x.with(normal_form(*ctx_, x.value)); }
  bool equal(const PyElement& x, const PyElement& y) const { return equals_lpa(*ctx_, x.value, y.value); }
  bool in_ideal(const PyElement& x) const { return in_ideal_I(*ctx_, x.value); }
  bool is_skew(const PyElement& x) const { return is_skew_lpa(*ctx_, x.value); }
  bool is_symmetric(const PyElement& x) const { return is_symmetric_lpa(*ctx_, x.value); }
  bool in_commutator(const PyElement& x) const { return lpa::in_commutator(*ctx_, x.value).member; }
  std::string commutator_report(const PyElement& x) const {
    return lpa::in_commutator(*ctx_, x.value).format(ctx_->graph());
  }
  bool in_skew_commutator(const PyElement& x) const { return in_skew_cap_commutator(*ctx_, x.value); }

  py::object witness() const {
    auto w = witness_herstein(*ctx_);
    if (!w.witness) return py::none();
    return py::cast(PyElement{ctx_, w.witness->element});
  }

  py::object basis() const {
    auto b = enumerate_lpa_basis(*ctx_);
    if (!b) return py::none();
    std::vector<std::string> out;
    for (const auto& m : *b) out.push_back(to_string(ctx_->graph(), m));
    return py::cast(out);
  }

  bool simple() const { return is_simple_lpa(ctx_->graph()).simple; }
  std::string span_oracle(const PyElement& x, std::size_t max_len) const {
    return commutator_span_oracle(*ctx_, max_len, x.value).format();
  }
  std::uint32_t characteristic() const { return ctx_->field().characteristic(); }

 private:
  static std::shared_ptr<const LeavittContext> make(const std::string& text, std::uint32_t p,
                                                    const std::map<std::string, std::string>& special) {
    Graph g = Graph::parse(text);
    std::map<VertexId, EdgeId> chosen;
    for (const auto& [v, e] : special) {
      auto vid = g.find_vertex(v);
      auto eid = g.find_edge(e);
      if (!vid || !eid) throw py::value_error("unknown vertex or edge in special map");
      chosen[*vid] = *eid;
    }
    return std::make_shared<const LeavittContext>(std::move(g), FieldSpec(p), chosen);
  }

  std::shared_ptr<const LeavittContext> ctx_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Leavitt and Cohn path algebras over exact fields";

  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<ExpressionError>(m, "ExpressionError", PyExc_ValueError);
  py::register_exception<NotSkewError>(m, "NotSkewError", PyExc_ValueError);

  py::class_<PyElement>(m, "Element")
      .def("__str__", &PyElement::str)
      .def("__repr__", [](const PyElement& x) { return "Element(" + x.str() + ")"; })
      .def("__add__", [](const PyElement& x, const PyElement& y) { x.check(y); return x.with(x.value + y.value); })
      .def("__sub__", [](const PyElement& x, const PyElement& y) { x.check(y); return x.with(x.value - y.value); })
      .def("__neg__", [](const PyElement& x) { return x.with(-x.value); })
      .def("__mul__", [](const PyElement& x, const PyElement& y) { x.check(y); return x.with(mul(x.value, y.value)); })
      .def("__eq__", [](const PyElement& x, const PyElement& y) { return x.ctx == y.ctx && x.value == y.value; })
      .def("star", [](const PyElement& x) { return x.with(star(x.value)); })
      .def("bracket", [](const PyElement& x, const PyElement& y) { x.check(y); return x.with(bracket(x.value, y.value)); })
      .def("is_zero", [](const PyElement& x) { return x.value.is_zero(); })
      .def("is_skew_cohn", [](const PyElement& x) { return is_skew_cohn(x.value); })
      .def("__len__", [](const PyElement& x) { return x.value.size(); });

  py::class_<Algebra>(m, "Algebra")
      .def(py::init<const std::string&, std::uint32_t, const std::map<std::string, std::string>&>(), py::arg("graph"),
           py::arg("characteristic") = 0, py::arg("special") = std::map<std::string, std::string>{})
      .def_property_readonly("characteristic", &Algebra::characteristic)
      .def("element", &Algebra::element, py::arg("text"))
      .def("nf", &Algebra::nf)
      .def("equal", &Algebra::equal)
      .def("in_ideal", &Algebra::in_ideal)
      .def("is_skew", &Algebra::is_skew)
      .def("is_symmetric", &Algebra::is_symmetric)
      .def("in_commutator", &Algebra::in_commutator)
      .def("commutator_report", &Algebra::commutator_report)
      .def("in_skew_commutator", &Algebra::in_skew_commutator)
      .def("witness", &Algebra::witness)
      .def("basis", &Algebra::basis)
      .def("is_simple", &Algebra::simple)
      .def("span_oracle", &Algebra::span_oracle, py::arg("x"), py::arg("max_len") = 3);

  m.def(
      "run",
      [](std::vector<std::string> args) {
        std::ostringstream out, err;
        int code = cli::run(std::move(args), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs one lpa command; returns (exit code, stdout, stderr).");
}
