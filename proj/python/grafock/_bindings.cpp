#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "grafock/conjugation.hpp"
#include "grafock/element.hpp"
#include "grafock/errors.hpp"
#include "grafock/fock.hpp"
#include "grafock/hermite.hpp"
#include "grafock/process.hpp"
#include "grafock/serialization.hpp"
#include "grafock/weights.hpp"

namespace py = pybind11;
using namespace grafock;

namespace {

GrassmannElement element_from_pairs(
    const std::vector<std::pair<std::vector<int>, Complex>>& pairs) {
  std::vector<GrassmannElement::Term> terms;
  terms.reserve(pairs.size());
  for (const auto& [gens, coeff] : pairs)
    terms.push_back({MultiIndex::of(gens).bits(), coeff});
  return GrassmannElement::from_contributions(std::move(terms));
}

std::vector<std::pair<std::vector<int>, Complex>> element_to_pairs(
    const GrassmannElement& z) {
  std::vector<std::pair<std::vector<int>, Complex>> out;
  out.reserve(z.terms().size());
  for (const auto& t : z.terms())
    out.emplace_back(MultiIndex::from_bits(t.bits).generators(), t.coeff);
  return out;
}

}  // namespace

PYBIND11_MODULE(_grafock, m) {
  m.doc() = "Finite-truncation Grassmann algebra, Fock operators, weighted "
            "distribution norms, and covariance-reproducing processes";

  py::register_exception<Error>(m, "GrafockError");

  py::class_<GrassmannElement>(m, "Element")
      .def(py::init<>())
      .def_static("scalar", [](Complex c) { return GrassmannElement::scalar(c); })
      .def_static("generator", &GrassmannElement::generator)
      .def_static("from_terms", &element_from_pairs,
                  "build from [(generator list, coefficient), ...]")
      .def("terms", &element_to_pairs)
      .def("coefficient",
           [](const GrassmannElement& z, const std::vector<int>& gens) {
             return z.coefficient(MultiIndex::of(gens));
           })
      .def("body", &GrassmannElement::body)
      .def("soul", &GrassmannElement::soul)
      .def("max_generator", &GrassmannElement::max_generator)
      .def("is_zero", &GrassmannElement::is_zero)
      .def("__len__", &GrassmannElement::term_count)
      .def("__eq__", [](const GrassmannElement& a,
                        const GrassmannElement& b) { return a == b; })
      .def("__add__", [](const GrassmannElement& a,
                         const GrassmannElement& b) { return a + b; })
      .def("__sub__", [](const GrassmannElement& a,
                         const GrassmannElement& b) { return a - b; })
      .def("__mul__", [](const GrassmannElement& a,
                         const GrassmannElement& b) { return a * b; })
      .def("__rmul__", [](const GrassmannElement& a, Complex c) { return c * a; })
      .def("__neg__", [](const GrassmannElement& a) { return -a; })
      .def("to_json", &element_to_string)
      .def_static("from_json", &element_from_string)
      .def("__repr__", [](const GrassmannElement& z) {
        return "Element(" + element_to_string(z) + ")";
      });

  m.def("index_product",
        [](const std::vector<int>& a, const std::vector<int>& b)
            -> std::optional<std::pair<int, std::vector<int>>> {
          const SignedIndex r = index_product(MultiIndex::of(a), MultiIndex::of(b));
          if (r.is_zero) return std::nullopt;
          return std::make_pair(r.sign, r.index.generators());
        },
        "signed product of basis indices; None when annihilated");
  m.def("multiply", &multiply);
  m.def("linear_combine", &linear_combine);
  m.def("p_norm", &p_norm);
  m.def("inner_product", &inner_product);
  m.def("invert", &invert);
  m.def("grade_split", &grade_split);
  m.def("conjugate", [](const GrassmannElement& z, int k) {
    if (k < 0 || k > 7) throw Error("InvalidConjugation", "k must be 0..7");
    return conjugate(z, static_cast<ConjugationId>(k));
  });

  m.def("left_multiply", &left_multiply);
  m.def("left_derivative", &left_derivative);
  m.def("berezin_integral", [](const std::vector<int>& gens,
                               const GrassmannElement& f) {
    return berezin_integral(MultiIndex::of(gens), f);
  });
  m.def("t_apply", &t_apply);
  m.def("operator_matrix",
        [](const std::string& kind, const GrassmannElement& f, int n) {
          OperatorExpr op = kind == "left_mul"     ? OperatorExpr::left_mul(f)
                            : kind == "left_deriv" ? OperatorExpr::left_deriv(f)
                                                   : OperatorExpr::t(f);
          const DenseMatrix mat = operator_matrix(op, n);
          std::vector<std::vector<Complex>> rows(mat.dim());
          for (std::size_t r = 0; r < mat.dim(); ++r) {
            rows[r].resize(mat.dim());
            for (std::size_t c = 0; c < mat.dim(); ++c) rows[r][c] = mat.at(r, c);
          }
          return rows;
        });

  py::class_<WeightSystem>(m, "WeightSystem")
      .def_static("linear", &WeightSystem::linear, py::arg("lambda_") = 1.0,
                  py::arg("g_max") = 64)
      .def("phi", &WeightSystem::phi)
      .def("xi", &WeightSystem::xi)
      .def("g_max", &WeightSystem::g_max);

  m.def("weighted_norm", &weighted_norm);
  m.def("vage_constant", [](int d, const WeightSystem& w, const std::string& mode) {
    return vage_constant(
        d, w, mode == "tail_bounded" ? VageMode::tail_bounded : VageMode::truncated);
  });
  m.def("check_vage", [](const GrassmannElement& f, const GrassmannElement& g, int p,
                         int q, const WeightSystem& w) {
    const VageReport r = check_vage(f, g, p, q, w);
    py::dict out;
    out["lhs"] = r.lhs;
    out["rhs"] = r.rhs;
    out["constant"] = r.constant;
    out["holds"] = r.holds;
    return out;
  });
  m.def("power_series_eval",
        [](const std::vector<Complex>& coeffs, double radius,
           const GrassmannElement& f, int p, const WeightSystem& w) {
          return power_series_eval(PowerSeries::from_coefficients(coeffs, radius), f,
                                   p, w);
        });
  m.def("exp_eval", [](const GrassmannElement& f, int p, const WeightSystem& w) {
    return power_series_eval(PowerSeries::exponential(), f, p, w);
  });
  m.def("invert_distribution", &invert_distribution);

  m.def("hermite_xi", &hermite_xi);
  m.def("fbm_closed_form", &fbm_closed_form);

  py::class_<SpectralDensity>(m, "SpectralDensity")
      .def_static("constant", &SpectralDensity::constant)
      .def_static("power_law", &SpectralDensity::power_law)
      .def("__call__", &SpectralDensity::operator())
      .def("hurst", &SpectralDensity::hurst);

  m.def("covariance_oracle", &covariance_oracle);

  py::class_<ProcessModel>(m, "ProcessModel")
      .def(py::init([](const SpectralDensity& d, int n_max, double u, int nodes,
                       double t_max) {
             return ProcessModel(d, n_max, QuadratureSpec{u, nodes}, t_max);
           }),
           py::arg("density"), py::arg("n_max"), py::arg("half_width") = 40.0,
           py::arg("node_budget") = 16384, py::arg("t_max") = 4.0)
      .def("n_max", &ProcessModel::n_max)
      .def("t_max", &ProcessModel::t_max)
      .def("apply_sm", &ProcessModel::apply_sm)
      .def("f_coeffs", [](const ProcessModel& m_, double t) { return m_.f_coeffs(t); })
      .def("sm_coeffs",
           [](const ProcessModel& m_, double t) { return m_.sm_coeffs(t); })
      .def("covariance_series", &ProcessModel::covariance_series)
      .def("x_apply", &ProcessModel::x_apply)
      .def("w_apply", &ProcessModel::w_apply)
      .def("pettis_integral",
           [](const ProcessModel& m_, const std::function<GrassmannElement(double)>& y,
              const GrassmannElement& g, double a, double b, int steps) {
             return m_.pettis_integral(y, g, a, b, steps);
           })
      .def("fit_bound_params", [](const ProcessModel& m_) {
        const DerivativeBoundParams p = m_.fit_bound_params();
        py::dict out;
        out["D1"] = p.D1;
        out["D2"] = p.D2;
        out["D3"] = p.D3;
        out["D4"] = p.D4;
        out["N"] = p.N;
        out["sup_violation"] = p.sup_violation;
        out["lip_violation"] = p.lip_violation;
        return out;
      });
}
