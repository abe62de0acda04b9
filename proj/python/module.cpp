// Python bindings over the string-level API: everything goes in and out as
// canonical element text, so results re-parse on either side of the fence.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sinv/api.hpp"
#include "sinv/errors.hpp"
#include "sinv/verify.hpp"

namespace py = pybind11;
using sinv::api::Config;

namespace {

Config make_config(const std::string& field, unsigned window_cap,
                   std::uint64_t seed) {
  Config cfg;
  cfg.field = field;
  cfg.window_cap = window_cap;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "exact computation in the algebras of one-sided polynomial inverses";

  py::register_exception<sinv::DomainError>(m, "DomainError");
  py::register_exception<sinv::ParseError>(m, "ParseError");

  py::class_<sinv::api::FactorResult>(m, "FactorResult")
      .def_readonly("scalar", &sinv::api::FactorResult::scalar)
      .def_readonly("theta_power", &sinv::api::FactorResult::theta_power)
      .def_readonly("word1", &sinv::api::FactorResult::word1)
      .def_readonly("word2", &sinv::api::FactorResult::word2)
      .def_readonly("detbar1", &sinv::api::FactorResult::detbar1)
      .def_readonly("detbar2", &sinv::api::FactorResult::detbar2);

  py::class_<sinv::SuiteOutcome>(m, "SuiteOutcome")
      .def_readonly("name", &sinv::SuiteOutcome::name)
      .def_readonly("passed", &sinv::SuiteOutcome::pass)
      .def_readonly("detail", &sinv::SuiteOutcome::detail);

  m.def(
      "nf",
      [](const std::string& expr, const std::string& field,
         unsigned window_cap, std::uint64_t seed) {
        return sinv::api::nf(make_config(field, window_cap, seed), expr);
      },
      py::arg("expr"), py::kw_only(), py::arg("field") = "rational",
      py::arg("window_cap") = 48, py::arg("seed") = 1);
  m.def(
      "act",
      [](const std::string& expr, const std::string& monomial,
         const std::string& field, unsigned window_cap, std::uint64_t seed) {
        return sinv::api::act(make_config(field, window_cap, seed), expr,
                              monomial);
      },
      py::arg("expr"), py::arg("monomial"), py::kw_only(),
      py::arg("field") = "rational", py::arg("window_cap") = 48,
      py::arg("seed") = 1);
  m.def(
      "index",
      [](const std::string& expr, const std::string& field,
         unsigned window_cap, std::uint64_t seed) {
        std::string method;
        long v = sinv::api::index_auto(make_config(field, window_cap, seed),
                                       expr, &method);
        return py::make_tuple(v, method);
      },
      py::arg("expr"), py::kw_only(), py::arg("field") = "rational",
      py::arg("window_cap") = 48, py::arg("seed") = 1);
  m.def(
      "ind",
      [](int i, const std::string& expr, const std::string& field,
         unsigned window_cap, std::uint64_t seed) {
        return sinv::api::ind(make_config(field, window_cap, seed), i, expr);
      },
      py::arg("i"), py::arg("expr"), py::kw_only(),
      py::arg("field") = "rational", py::arg("window_cap") = 48,
      py::arg("seed") = 1);
  m.def(
      "det",
      [](const std::string& expr, const std::string& field,
         unsigned window_cap, std::uint64_t seed) {
        return sinv::api::det(make_config(field, window_cap, seed), expr);
      },
      py::arg("expr"), py::kw_only(), py::arg("field") = "rational",
      py::arg("window_cap") = 48, py::arg("seed") = 1);
  m.def(
      "detbar",
      [](int i, const std::string& expr, const std::string& field,
         unsigned window_cap, std::uint64_t seed) {
        return sinv::api::detbar(make_config(field, window_cap, seed), i,
                                 expr);
      },
      py::arg("i"), py::arg("expr"), py::kw_only(),
      py::arg("field") = "rational", py::arg("window_cap") = 48,
      py::arg("seed") = 1);
  m.def(
      "invert",
      [](const std::string& expr, const std::string& field,
         unsigned window_cap, std::uint64_t seed) {
        return sinv::api::invert(make_config(field, window_cap, seed), expr);
      },
      py::arg("expr"), py::kw_only(), py::arg("field") = "rational",
      py::arg("window_cap") = 48, py::arg("seed") = 1);
  m.def(
      "factor",
      [](const std::string& expr, const std::string& field,
         unsigned window_cap, std::uint64_t seed) {
        return sinv::api::factor(make_config(field, window_cap, seed), expr);
      },
      py::arg("expr"), py::kw_only(), py::arg("field") = "rational",
      py::arg("window_cap") = 48, py::arg("seed") = 1);
  m.def(
      "eta",
      [](const std::string& expr, const std::string& field,
         unsigned window_cap, std::uint64_t seed) {
        return sinv::api::eta(make_config(field, window_cap, seed), expr);
      },
      py::arg("expr"), py::kw_only(), py::arg("field") = "rational",
      py::arg("window_cap") = 48, py::arg("seed") = 1);
  m.def(
      "auto_apply",
      [](const std::string& word_text, const std::string& expr,
         const std::string& field, unsigned window_cap, std::uint64_t seed) {
        return sinv::api::auto_apply(make_config(field, window_cap, seed),
                                     word_text, expr);
      },
      py::arg("word_text"), py::arg("expr"), py::kw_only(),
      py::arg("field") = "rational", py::arg("window_cap") = 48,
      py::arg("seed") = 1);

  m.def("suite_names", &sinv::suite_names);
  m.def(
      "run_suite",
      [](const std::string& name, const std::string& field,
         std::uint64_t seed, unsigned window_cap) {
        sinv::SuiteOptions opt;
        opt.field = field;
        opt.seed = seed;
        opt.window_cap = window_cap;
        return sinv::run_suite(name, opt);
      },
      py::arg("name"), py::kw_only(), py::arg("field") = "rational",
      py::arg("seed") = 12345, py::arg("window_cap") = 48);
}
