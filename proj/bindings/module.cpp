#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <variant>

#include "assignalg/corpus.hpp"
#include "assignalg/extend.hpp"
#include "assignalg/gkm.hpp"
#include "assignalg/kirwan.hpp"
#include "assignalg/model_io.hpp"
#include "assignalg/strata.hpp"

namespace py = pybind11;
using namespace assignalg;

namespace {

constexpr OutputFormat kMachine = OutputFormat::kMachine;

ModelDocument parse_or_throw(const std::string& text) {
  return parse_model(text);
}

const GkmPresentation& gkm_of(const ModelDocument& doc) {
  if (doc.kind != ModelKind::kGkm || !doc.gkm) {
    throw std::invalid_argument("expected a gkm document");
  }
  return *doc.gkm;
}

const StratifiedSpace& strata_of(const ModelDocument& doc) {
  if (doc.kind != ModelKind::kStrata || !doc.strata) {
    throw std::invalid_argument("expected a strata document");
  }
  return *doc.strata;
}

Subalgebra circle_of(const ModelDocument& doc,
                     const std::vector<std::string>& circle, int dim) {
  if (!circle.empty()) {
    std::vector<Rational> v;
    for (const auto& item : circle) v.push_back(parse_rational(item));
    return Subalgebra::from_span({v}, dim);
  }
  if (doc.circle) return *doc.circle;
  throw std::invalid_argument("no circle direction given");
}

}  // namespace

PYBIND11_MODULE(_assignalg, m) {
  m.doc() = "exact computation of polynomial assignment algebras";

  py::register_exception<ParseError>(m, "ModelError", PyExc_ValueError);
  py::register_exception<DimensionMismatchError>(m, "DimensionError",
                                                 PyExc_ValueError);

  m.def("validate", [](const std::string& text) {
    parse_or_throw(text);
    return true;
  });

  m.def("normalize", [](const std::string& text) {
    return print_model(parse_or_throw(text));
  });

  m.def("normalize_polynomial", [](const std::string& text, int nvars) {
    return Polynomial::parse(text, nvars).to_string();
  });

  m.def("basis_dims", [](const std::string& text, int degree_bound) {
    ModelDocument doc = parse_or_throw(text);
    std::vector<int> dims;
    for (int d = 0; d <= degree_bound; ++d) {
      if (doc.kind == ModelKind::kGkm) {
        dims.push_back(static_cast<int>(graded_basis(*doc.gkm, d).size()));
      } else {
        dims.push_back(
            static_cast<int>(graded_basis_oracle(strata_of(doc), d).size()));
      }
    }
    return dims;
  });

  m.def("is_member", [](const std::string& text,
                        const std::vector<std::string>& tuple_text) {
    ModelDocument doc = parse_or_throw(text);
    const auto& p = gkm_of(doc);
    AssignmentTuple tuple;
    for (const auto& t : tuple_text) {
      tuple.polys.push_back(Polynomial::parse(t, p.torus_dim()));
    }
    return is_member(p, tuple).ok;
  });

  m.def("module_report", [](const std::string& text, int degree_bound) {
    ModelDocument doc = parse_or_throw(text);
    return render_module_report(module_report(gkm_of(doc), degree_bound),
                                kMachine);
  });

  m.def("surjectivity_report", [](const std::string& text) {
    ModelDocument doc = parse_or_throw(text);
    return render_surjectivity(check_surjectivity_hypothesis(gkm_of(doc)),
                               kMachine);
  });

  m.def("kernel_report", [](const std::string& text, int degree_bound) {
    ModelDocument doc = parse_or_throw(text);
    return render_kernel_report(kernel_generators(gkm_of(doc), degree_bound),
                                kMachine);
  });

  m.def(
      "quotient_report",
      [](const std::string& text, int degree_bound,
         const std::vector<std::string>& circle) {
        ModelDocument doc = parse_or_throw(text);
        const auto& p = gkm_of(doc);
        Subalgebra q = circle_of(doc, circle, p.torus_dim());
        return render_quotient_report(quotient_report(p, q, degree_bound),
                                      kMachine);
      },
      py::arg("text"), py::arg("degree_bound"),
      py::arg("circle") = std::vector<std::string>{});

  m.def("extend", [](const std::string& text, int degree_bound) {
    ModelDocument doc = parse_or_throw(text);
    if (doc.kind != ModelKind::kExtension || !doc.extension) {
      throw std::invalid_argument("expected an extension document");
    }
    return render_extend_result(extend_solve(*doc.extension, degree_bound),
                                doc.extension->ambient_dim, kMachine);
  });

  m.def("oracle_compare", [](const std::string& gkm_text,
                             const std::string& strata_text, int degree_bound) {
    ModelDocument g = parse_or_throw(gkm_text);
    ModelDocument s = parse_or_throw(strata_text);
    return render_oracle_comparison(
        oracle_compare(gkm_of(g), strata_of(s), degree_bound), kMachine);
  });

  m.def(
      "quotient_circle_dims",
      [](const std::string& text, int degree_bound,
         const std::vector<std::string>& circle) {
        ModelDocument doc = parse_or_throw(text);
        const auto& s = strata_of(doc);
        CircleQuotient q =
            quotient_by_circle(s, circle_of(doc, circle, s.torus_dim()));
        std::vector<int> dims;
        for (int d = 0; d <= degree_bound; ++d) {
          dims.push_back(
              static_cast<int>(graded_basis_oracle(q.space, d).size()));
        }
        return dims;
      },
      py::arg("text"), py::arg("degree_bound"),
      py::arg("circle") = std::vector<std::string>{});

  m.def("corpus_names", [] {
    std::vector<std::string> names;
    for (const auto& e : corpus()) names.push_back(e.name);
    return names;
  });

  m.def("corpus_document", [](const std::string& name) {
    return corpus_entry(name).document;
  });
}
