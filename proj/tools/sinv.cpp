// Command-line front end: parse expressions in the two-variable algebra of
// one-sided inverses, print normal forms, indices, determinants, unit
// factorizations, automorphism images, and run the named verification
// suites.  Exit codes: 0 success, 1 verification failure, 2 usage or parse
// error, 3 domain error.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sinv/api.hpp"
#include "sinv/errors.hpp"
#include "sinv/verify.hpp"

namespace {

using nlohmann::json;

struct Options {
  sinv::api::Config cfg;
  std::string format = "text";
};

void emit(const Options& opt, const json& j, const std::string& text) {
  if (opt.format == "json")
    std::cout << j.dump() << "\n";
  else
    std::cout << text << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw sinv::ParseError(0, "cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact computation in the algebras of one-sided polynomial inverses"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--field", opt.cfg.field,
                 "coefficient field: rational or fp:<odd prime>")
      ->capture_default_str();
  app.add_option("--window-cap", opt.cfg.window_cap,
                 "largest truncation window the oracle may try")
      ->capture_default_str();
  app.add_option("--seed", opt.cfg.seed, "seed for randomized verification")
      ->capture_default_str();
  app.add_option("--format", opt.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string expr, monomial, word_file, suite;
  int factor = 1;

  CLI::App* nf = app.add_subcommand("nf", "canonical normal form");
  nf->add_option("expr", expr)->required();

  CLI::App* act = app.add_subcommand(
      "act", "apply the element to a polynomial basis monomial");
  act->add_option("expr", expr)->required();
  act->add_option("monomial", monomial, "target monomial x1^a*x2^b")
      ->required();

  CLI::App* index = app.add_subcommand(
      "index", "Fredholm index (scalar or block symbol, auto-detected)");
  index->add_option("expr", expr)->required();

  CLI::App* ind = app.add_subcommand(
      "ind", "component index of a unit congruent to 1 mod the ideal sum");
  ind->add_option("i", factor, "component (1 or 2)")->required();
  ind->add_option("expr", expr)->required();

  CLI::App* det =
      app.add_subcommand("det", "determinant of a 1 + finite-block unit");
  det->add_option("expr", expr)->required();

  CLI::App* detbar = app.add_subcommand(
      "detbar", "symbol determinant scalar of a one-sided block unit");
  detbar->add_option("i", factor, "block factor (1 or 2)")->required();
  detbar->add_option("expr", expr)->required();

  CLI::App* invert = app.add_subcommand("invert", "exact inverse of a unit");
  invert->add_option("expr", expr)->required();

  CLI::App* fac =
      app.add_subcommand("factor", "full unit factorization certificate");
  fac->add_option("expr", expr)->required();

  CLI::App* eta =
      app.add_subcommand("eta", "the x <-> y anti-automorphism");
  eta->add_option("expr", expr)->required();

  CLI::App* auto_cmd = app.add_subcommand("auto", "automorphism operations");
  auto_cmd->require_subcommand(1);
  CLI::App* auto_apply = auto_cmd->add_subcommand(
      "apply", "apply an automorphism word from a file");
  auto_apply->add_option("word-file", word_file)->required();
  auto_apply->add_option("expr", expr)->required();

  CLI::App* verify =
      app.add_subcommand("verify", "run a named verification suite");
  verify->add_option("suite", suite, "suite name, or 'list'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (nf->parsed()) {
      std::string r = sinv::api::nf(opt.cfg, expr);
      emit(opt, {{"result", r}}, r);
    } else if (act->parsed()) {
      std::string r = sinv::api::act(opt.cfg, expr, monomial);
      emit(opt, {{"result", r}}, r);
    } else if (index->parsed()) {
      std::string method;
      long v = sinv::api::index_auto(opt.cfg, expr, &method);
      emit(opt, {{"index", v}, {"method", method}}, std::to_string(v));
    } else if (ind->parsed()) {
      long v = sinv::api::ind(opt.cfg, factor, expr);
      emit(opt, {{"index", v}}, std::to_string(v));
    } else if (det->parsed()) {
      std::string r = sinv::api::det(opt.cfg, expr);
      emit(opt, {{"det", r}}, r);
    } else if (detbar->parsed()) {
      std::string r = sinv::api::detbar(opt.cfg, factor, expr);
      emit(opt, {{"detbar", r}}, r);
    } else if (invert->parsed()) {
      std::string r = sinv::api::invert(opt.cfg, expr);
      emit(opt, {{"result", r}}, r);
    } else if (fac->parsed()) {
      sinv::api::FactorResult r = sinv::api::factor(opt.cfg, expr);
      json j{{"scalar", r.scalar},   {"theta_power", r.theta_power},
             {"word1", r.word1},     {"word2", r.word2},
             {"detbar1", r.detbar1}, {"detbar2", r.detbar2}};
      std::ostringstream t;
      t << "scalar " << r.scalar << "\n";
      t << "theta " << r.theta_power << "\n";
      t << "detbar1 " << r.detbar1 << "\n";
      t << "detbar2 " << r.detbar2 << "\n";
      t << "word1 (" << r.word1.size() << " letters)";
      for (const auto& l : r.word1) t << "\n  " << l;
      t << "\nword2 (" << r.word2.size() << " letters)";
      for (const auto& l : r.word2) t << "\n  " << l;
      emit(opt, j, t.str());
    } else if (eta->parsed()) {
      std::string r = sinv::api::eta(opt.cfg, expr);
      emit(opt, {{"result", r}}, r);
    } else if (auto_apply->parsed()) {
      std::string r =
          sinv::api::auto_apply(opt.cfg, read_file(word_file), expr);
      emit(opt, {{"result", r}}, r);
    } else if (verify->parsed()) {
      if (suite == "list") {
        json names = sinv::suite_names();
        std::ostringstream t;
        bool first = true;
        for (const auto& n : sinv::suite_names()) {
          if (!first) t << "\n";
          t << n;
          first = false;
        }
        emit(opt, {{"suites", names}}, t.str());
        return 0;
      }
      sinv::SuiteOptions so;
      so.field = opt.cfg.field;
      so.seed = opt.cfg.seed;
      so.window_cap = opt.cfg.window_cap;
      sinv::SuiteOutcome out;
      try {
        out = sinv::run_suite(suite, so);
      } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }
      json j{{"suite", out.name}, {"pass", out.pass}, {"detail", out.detail}};
      emit(opt, j,
           std::string(out.pass ? "[PASS] " : "[FAIL] ") + out.name + ": " +
               out.detail);
      return out.pass ? 0 : 1;
    }
  } catch (const sinv::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const sinv::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
