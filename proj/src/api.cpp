#include "sinv/api.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

#include "sinv/errors.hpp"
#include "sinv/fields.hpp"
#include "sinv/format.hpp"
#include "sinv/parse.hpp"
#include "sinv/units.hpp"

namespace sinv::api {
namespace {

OracleOptions oracle_opt(const Config& cfg) {
  OracleOptions o;
  o.cap = cfg.window_cap;
  return o;
}

std::uint64_t parse_prime(const std::string& field) {
  std::string digits = field.substr(3);
  try {
    std::size_t used = 0;
    std::uint64_t p = std::stoull(digits, &used);
    if (used != digits.size() || digits.empty())
      throw std::invalid_argument("junk");
    return p;
  } catch (const std::exception&) {
    throw ParseError(0, "bad field spec '" + field + "'");
  }
}

template <class Fn>
auto with_field(const Config& cfg, Fn&& fn) {
  if (cfg.field == "rational") return fn(RationalField{});
  if (cfg.field.rfind("fp:", 0) == 0) {
    std::uint64_t p = parse_prime(cfg.field);
    PrimeField f = [&] {
      try {
        return PrimeField(p);
      } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
      }
    }();
    return fn(f);
  }
  throw ParseError(0, "unknown field '" + cfg.field +
                          "' (use rational or fp:<odd prime>)");
}

// Inverse of a unit from its factorization certificate.
template <class F>
Element2<F> certificate_inverse(const F& f,
                                const FactorizationCertificate<F>& c) {
  return multiply_out(f, invert_word(f, c.word2)) *
         multiply_out(f, invert_word(f, c.word1)) *
         theta_pow(f, -c.theta_power).scaled(f.inv(c.scalar));
}

}  // namespace

std::string nf(const Config& cfg, const std::string& expr) {
  return with_field(cfg, [&](const auto& f) {
    return to_text(parse_element(f, expr));
  });
}

std::string act(const Config& cfg, const std::string& expr,
                const std::string& monomial) {
  return with_field(cfg, [&](const auto& f) {
    auto e = parse_element(f, expr);
    auto m = parse_element(f, monomial);
    if (m.terms().size() != 1)
      throw ParseError(0, "action target must be a single monomial");
    const auto& [mono, coeff] = *m.terms().begin();
    if (!f.is_one(coeff) || mono.b1 != 0 || mono.b2 != 0)
      throw ParseError(0,
                       "action target must be x1^a*x2^b with coefficient 1");
    auto img = act2(e, {mono.a1, mono.a2});
    auto r = std::decay_t<decltype(e)>::zero(f);
    for (const auto& [t, c] : img)
      r.add_term(Monomial2{t.first, t.second, 0, 0}, c);
    return to_text(r);
  });
}

long index_auto(const Config& cfg, const std::string& expr,
                std::string* method) {
  return with_field(cfg, [&](const auto& f) {
    auto e = parse_element(f, expr);
    bool pure1 = true, pure2 = true;
    for (const auto& [m, c] : e.terms()) {
      (void)c;
      if (m.a2 != 0 || m.b2 != 0) pure1 = false;
      if (m.a1 != 0 || m.b1 != 0) pure2 = false;
    }
    if (pure1 || pure2) {
      auto e1 = element_to_factor1(pure1 ? 1 : 2, e);
      if (method) *method = "scalar";
      return index1(e1).value;
    }
    for (int factor : {1, 2}) {
      try {
        long v = index_block(to_block(factor, e)).value;
        if (method) *method = "block:" + std::to_string(factor);
        return v;
      } catch (const DomainError& err) {
        if (err.code() != Err::NotInScalarPlusIdeal) throw;
      }
    }
    throw DomainError(Err::NotInScalarPlusIdeal,
                      "neither a one-factor element nor scalar plus block; "
                      "use the component index instead");
  });
}

long ind(const Config& cfg, int i, const std::string& expr) {
  if (i != 1 && i != 2) throw ParseError(0, "component must be 1 or 2");
  return with_field(cfg, [&](const auto& f) {
    return ind_component(i, parse_element(f, expr));
  });
}

std::string det(const Config& cfg, const std::string& expr) {
  return with_field(cfg, [&](const auto& f) {
    return f.str(det_block(parse_element(f, expr)));
  });
}

std::string detbar(const Config& cfg, int i, const std::string& expr) {
  if (i != 1 && i != 2) throw ParseError(0, "component must be 1 or 2");
  return with_field(cfg, [&](const auto& f) {
    return f.str(detbar_unit(i, parse_element(f, expr)));
  });
}

std::string invert(const Config& cfg, const std::string& expr) {
  return with_field(cfg, [&](const auto& f) {
    auto u = parse_element(f, expr);
    if (membership(u - s2_one(f), Ideal2::F2))
      return to_text(invert_1F2(u));
    auto cert = full_factor_unit(u, oracle_opt(cfg));
    auto inv = certificate_inverse(f, cert);
    return to_text(inv);
  });
}

FactorResult factor(const Config& cfg, const std::string& expr) {
  return with_field(cfg, [&](const auto& f) {
    auto cert = full_factor_unit(parse_element(f, expr), oracle_opt(cfg));
    FactorResult r;
    r.scalar = f.str(cert.scalar);
    r.theta_power = cert.theta_power;
    for (const auto& l : cert.word1)
      r.word1.push_back(serialize_letter(f, l));
    for (const auto& l : cert.word2)
      r.word2.push_back(serialize_letter(f, l));
    r.detbar1 = f.str(cert.detbar1);
    r.detbar2 = f.str(cert.detbar2);
    return r;
  });
}

std::string eta(const Config& cfg, const std::string& expr) {
  return with_field(cfg, [&](const auto& f) {
    return to_text(eta2(parse_element(f, expr)));
  });
}

std::string auto_apply(const Config& cfg, const std::string& word_text,
                       const std::string& expr) {
  return with_field(cfg, [&](const auto& f) {
    auto sigma = parse_auto_word(f, word_text, oracle_opt(cfg));
    return to_text(sigma.apply(parse_element(f, expr)));
  });
}

}  // namespace sinv::api
