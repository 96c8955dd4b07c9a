// Python bindings for the sunstar core.  The surface mirrors the CLI: exact
// rationals cross the boundary as canonical text, operator series as the JSON
// exchange format, and star constructors take the same data as the config
// file (structure-constant indices are 1-based).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "json.hpp"

#include "sunstar/gutt.hpp"
#include "sunstar/moyal.hpp"
#include "sunstar/op_io.hpp"
#include "sunstar/parse.hpp"
#include "sunstar/sun_checks.hpp"
#include "sunstar/sun_cochains.hpp"
#include "sunstar/sun_product.hpp"
#include "sunstar/twist.hpp"

#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace py = pybind11;
using namespace sunstar;

namespace {

std::vector<std::string> coeff_strings(const NuSeries& series) {
  std::vector<std::string> out;
  for (int r = 0; r <= series.order(); ++r) {
    out.push_back(to_string(series.coeff(r)));
  }
  return out;
}

struct Star {
  StarProductPtr ptr;

  static Star moyal(const std::vector<std::vector<std::string>>& matrix) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : matrix) {
      std::vector<Rational> cells;
      for (const auto& cell : row) {
        cells.push_back(parse_rational(cell));
      }
      rows.push_back(std::move(cells));
    }
    return {std::make_shared<MoyalStar>(PoissonStructure::constant(rows))};
  }

  static Star gutt(int dim,
                   const std::vector<std::tuple<int, int, int, std::string>>& brackets) {
    std::vector<LieAlgebra::StructureEntry> entries;
    for (const auto& [i, j, k, c] : brackets) {
      entries.push_back({i - 1, j - 1, k - 1, parse_rational(c)});
    }
    return {std::make_shared<GuttStar>(LieAlgebra(dim, entries))};
  }

  Star twist(const std::string& operator_json) const {
    const nlohmann::json doc = nlohmann::json::parse(operator_json);
    return {apply_equivalence(operator_series_from_json(doc, dim()), ptr)};
  }

  int dim() const { return ptr->dim(); }

  std::vector<std::string> mul(const std::string& f, const std::string& g, int order) const {
    return coeff_strings(
        ptr->mul(parse_polynomial(f, dim()), parse_polynomial(g, dim()), order));
  }

  std::string cochain(int r, const std::string& f, const std::string& g) const {
    return to_string(ptr->cochain(r, parse_polynomial(f, dim()), parse_polynomial(g, dim())));
  }

  std::vector<std::string> sun_mul(const std::string& f, const std::string& g,
                                   int order) const {
    const SunProduct sun(ptr, order);
    return coeff_strings(sun.mul(parse_polynomial(f, dim()), parse_polynomial(g, dim())));
  }
};

}  // namespace

PYBIND11_MODULE(sunstar, m) {
  m.doc() = "Exact star-products and their symmetrized (sun) products on polynomial "
            "algebras over the rationals";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) {
        std::rethrow_exception(p);
      }
    } catch (const ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<Star>(m, "Star")
      .def_static("moyal", &Star::moyal, py::arg("matrix"),
                  "Moyal product for a constant antisymmetric matrix of rational strings")
      .def_static("gutt", &Star::gutt, py::arg("dim"), py::arg("brackets"),
                  "Gutt product for structure constants given as (i, j, k, c) with "
                  "1-based indices, meaning [e_i, e_j] has coefficient c on e_k")
      .def("twist", &Star::twist, py::arg("operator_json"),
           "Equivalent product obtained by twisting with I + sum_r nu^r T_r, where the "
           "series is given in the JSON operator exchange format")
      .def_property_readonly("dim", &Star::dim)
      .def("mul", &Star::mul, py::arg("f"), py::arg("g"), py::arg("order"),
           "f * g as a dense list of nu-coefficients in canonical text")
      .def("cochain", &Star::cochain, py::arg("r"), py::arg("f"), py::arg("g"),
           "The coefficient C_r(f, g) of nu^r in f * g")
      .def("sun_mul", &Star::sun_mul, py::arg("f"), py::arg("g"), py::arg("order"),
           "The symmetrized (sun) product of f and g as a dense nu-coefficient list");

  m.def(
      "parse",
      [](const std::string& text, int dim) {
        return to_string(parse_polynomial(text, dim));
      },
      py::arg("text"), py::arg("dim"),
      "Parse a polynomial expression and return its canonical rendering");

  m.def(
      "in_ep",
      [](const Star& star, int order, int degree) {
        return check_in_EP(star.ptr, order, degree).pass;
      },
      py::arg("star"), py::arg("order"), py::arg("degree"),
      "Whether every sun-cochain of the product vanishes for r <= order on monomials "
      "of degree <= degree");

  m.def(
      "cochain_operators",
      [](const Star& star, int order, int degree) {
        const SunProduct sun(star.ptr, order);
        SunCochains cochains = extract_sun_cochains(sun, order, degree);
        reconstruct_all(*star.ptr, cochains, degree);
        std::vector<std::string> out;
        for (int r = 1; r <= order; ++r) {
          out.push_back(to_string(cochains.rho(r)));
        }
        return out;
      },
      py::arg("star"), py::arg("order"), py::arg("degree"),
      "Reconstruct the differential operators rho_1..rho_order of the sun-product");

  m.def(
      "equivalence_to_ep",
      [](const Star& star, int order, int degree) {
        const EquivalenceToEp result = equivalence_to_EP(star.ptr, order, degree);
        return std::make_pair(operator_series_to_json(result.twist).dump(),
                              Star{result.star_in_ep});
      },
      py::arg("star"), py::arg("order"), py::arg("degree"),
      "Twist taking the product into the vanishing class; returns (operator JSON, "
      "twisted star)");

  m.def(
      "weak_trivializer",
      [](const Star& star, int order, int degree) {
        const SunProduct sun(star.ptr, order);
        return operator_series_to_json(weak_trivializer(sun, order, degree)).dump();
      },
      py::arg("star"), py::arg("order"), py::arg("degree"),
      "Operator S with S(f sun g) = f g on monomial pairs up to the given degree, as "
      "operator JSON");
}
