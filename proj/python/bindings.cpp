#include "simplotope/commands.hpp"
#include "simplotope/degree_ops.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

spt::Json to_json(const py::handle& obj) {
  if (obj.is_none()) return nullptr;
  if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
  if (py::isinstance<py::int_>(obj)) return obj.cast<long long>();
  if (py::isinstance<py::float_>(obj)) return obj.cast<double>();
  if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
  if (py::isinstance<py::list>(obj) || py::isinstance<py::tuple>(obj)) {
    spt::Json arr = spt::Json::array();
    for (const auto& item : obj) arr.push_back(to_json(item));
    return arr;
  }
  if (py::isinstance<py::dict>(obj)) {
    spt::Json out;
    for (const auto& item : obj.cast<py::dict>())
      out[item.first.cast<std::string>()] = to_json(item.second);
    return out;
  }
  throw py::type_error("unsupported value in grid document");
}

py::object to_python(const spt::Json& j) {
  switch (j.type()) {
    case spt::Json::value_t::null: return py::none();
    case spt::Json::value_t::boolean: return py::bool_(j.get<bool>());
    case spt::Json::value_t::number_integer: return py::int_(j.get<long long>());
    case spt::Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case spt::Json::value_t::number_float: return py::float_(j.get<double>());
    case spt::Json::value_t::string: return py::str(j.get<std::string>());
    case spt::Json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(to_python(item));
      return out;
    }
    case spt::Json::value_t::object: {
      py::dict out;
      for (const auto& [key, value] : j.items()) out[py::str(key)] = to_python(value);
      return out;
    }
    default: return py::none();
  }
}

spt::GridFile grid_from(const py::dict& grid) { return spt::parse_grid(to_json(grid)); }

std::vector<spt::Rational> rationals_from(const std::vector<std::string>& values) {
  std::vector<spt::Rational> out;
  for (const auto& v : values) out.push_back(spt::parse_rational(v));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact smoothness conditions between Bernstein-Bezier patches on "
            "facet-sharing products of simplices";

  m.def("conditions", [](const py::dict& grid) { return to_python(spt::conditions_document(grid_from(grid))); },
        py::arg("grid"), "Continuity conditions and stacked matrix for every adjacent pair");

  m.def("verify",
        [](const py::dict& grid, int samples, std::uint64_t seed) {
          bool all_pass = false;
          py::object doc =
              to_python(spt::verify_document(grid_from(grid), samples, seed, nullptr, all_pass));
          return doc;
        },
        py::arg("grid"), py::arg("samples") = 25, py::arg("seed") = 2024,
        "Generate conditions, instantiate conditioned coefficients, check derivatives");

  m.def("bnet",
        [](const py::dict& grid, bool render_float) {
          return to_python(spt::bnet_document(grid_from(grid), render_float));
        },
        py::arg("grid"), py::arg("render_float") = false);

  m.def("circumscribe",
        [](const py::dict& grid, bool render_float) {
          return to_python(spt::circumscribe_document(grid_from(grid), render_float));
        },
        py::arg("grid"), py::arg("render_float") = false);

  m.def("enumerate_indices", &spt::enumerate_indices, py::arg("slots"), py::arg("degree"));

  m.def("enumerate_blocked",
        [](const std::vector<int>& nu, const std::vector<int>& delta) {
          std::vector<std::vector<spt::MultiIndex>> out;
          for (const auto& k : spt::enumerate_blocked(nu, delta)) out.push_back(k.blocks);
          return out;
        },
        py::arg("nu"), py::arg("delta"));

  m.def("multinomial",
        [](int degree, const spt::MultiIndex& k) { return spt::to_string(spt::multinomial(degree, k)); },
        py::arg("degree"), py::arg("k"));

  m.def("basis_value",
        [](const spt::MultiIndex& k, int degree, const std::vector<std::string>& b) {
          return spt::to_string(spt::basis_value(k, degree, rationals_from(b)));
        },
        py::arg("k"), py::arg("degree"), py::arg("b"),
        "Bernstein basis value (d!/k!) b^k, rationals as strings");

  m.def("raise_degree",
        [](const std::map<spt::MultiIndex, std::string>& coeffs, int amount) {
          std::map<spt::MultiIndex, spt::Rational> in;
          for (const auto& [k, v] : coeffs) in[k] = spt::parse_rational(v);
          std::map<spt::MultiIndex, std::string> out;
          for (const auto& [k, v] : spt::raise_degree(in, amount)) out[k] = spt::to_string(v);
          return out;
        },
        py::arg("coefficients"), py::arg("amount"));

  m.def("lower_degree",
        [](const std::map<spt::MultiIndex, std::string>& coeffs, int amount, int pivot) {
          std::map<spt::MultiIndex, spt::Rational> in;
          for (const auto& [k, v] : coeffs) in[k] = spt::parse_rational(v);
          std::map<spt::MultiIndex, std::string> out;
          for (const auto& [k, v] : spt::lower_degree(in, amount, pivot)) out[k] = spt::to_string(v);
          return out;
        },
        py::arg("coefficients"), py::arg("amount"), py::arg("pivot") = 0);
}
