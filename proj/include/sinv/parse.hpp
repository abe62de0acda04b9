#pragma once

#include <cctype>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "sinv/autos.hpp"
#include "sinv/errors.hpp"
#include "sinv/s2.hpp"
#include "sinv/units.hpp"
#include "sinv/words.hpp"

namespace sinv {

// Expression grammar (whitespace-insensitive):
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := power ('*' power)*
//   power  := atom ('^' INT)*            -- nonnegative exponents only
//   atom   := '(' expr ')' | INT ['/' INT] | 'x1'|'x2'|'y1'|'y2' | 'theta'
//           | ('E'|'E1'|'E2') '(' INT ',' INT ')'
//           | 'EE' '(' INT ',' INT ';' INT ',' INT ')'
// E/E1/E2 are the one-factor matrix units, EE the doubly-indexed ones;
// INT '/' INT is a scalar (so division exists only between literals).

namespace detail {

struct Token {
  enum Kind { Ident, Int, Sym, End } kind = End;
  std::string text;
  std::size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& tok() const { return tok_; }

  void advance() {
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_])))
      ++i_;
    tok_.pos = i_;
    if (i_ >= src_.size()) {
      tok_ = {Token::End, "", i_};
      return;
    }
    char c = src_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[j])))
        ++j;
      tok_ = {Token::Int, std::string(src_.substr(i_, j - i_)), i_};
      i_ = j;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i_;
      while (j < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[j])) ||
              src_[j] == '_'))
        ++j;
      tok_ = {Token::Ident, std::string(src_.substr(i_, j - i_)), i_};
      i_ = j;
      return;
    }
    if (std::string("+-*^(),;/").find(c) != std::string::npos) {
      tok_ = {Token::Sym, std::string(1, c), i_};
      ++i_;
      return;
    }
    throw ParseError(i_, std::string("unexpected character '") + c + "'");
  }

 private:
  std::string_view src_;
  std::size_t i_ = 0;
  Token tok_;
};

inline long long parse_ll(const Token& t) {
  try {
    return std::stoll(t.text);
  } catch (const std::exception&) {
    throw ParseError(t.pos, "integer out of range");
  }
}

}  // namespace detail

template <class F>
class ElementParser {
 public:
  ElementParser(const F& f, std::string_view src) : f_(f), lex_(src) {}

  Element2<F> parse() {
    Element2<F> e = expr();
    if (tok().kind != detail::Token::End)
      throw ParseError(tok().pos, "trailing input after expression");
    return e;
  }

 private:
  using Token = detail::Token;
  const Token& tok() const { return lex_.tok(); }
  void advance() { lex_.advance(); }
  bool is_sym(const char* s) const {
    return tok().kind == Token::Sym && tok().text == s;
  }
  void expect_sym(const char* s) {
    if (!is_sym(s))
      throw ParseError(tok().pos, std::string("expected '") + s + "'");
    advance();
  }
  long long expect_int() {
    if (tok().kind != Token::Int)
      throw ParseError(tok().pos, "expected an integer");
    long long v = detail::parse_ll(tok());
    advance();
    return v;
  }
  unsigned expect_index() {
    long long v = expect_int();
    if (v < 0 || v > 100000)
      throw ParseError(tok().pos, "index out of range");
    return static_cast<unsigned>(v);
  }

  Element2<F> expr() {
    bool neg = false;
    if (is_sym("-")) {
      neg = true;
      advance();
    } else if (is_sym("+")) {
      advance();
    }
    Element2<F> v = term();
    if (neg) v = -v;
    for (;;) {
      if (is_sym("+")) {
        advance();
        v += term();
      } else if (is_sym("-")) {
        advance();
        v -= term();
      } else {
        return v;
      }
    }
  }

  Element2<F> term() {
    Element2<F> v = power();
    while (is_sym("*")) {
      advance();
      v = v * power();
    }
    return v;
  }

  Element2<F> power() {
    Element2<F> v = atom();
    while (is_sym("^")) {
      std::size_t p = tok().pos;
      advance();
      long long e = expect_int();
      if (e < 0) throw ParseError(p, "exponent must be nonnegative");
      v = v.pow(static_cast<unsigned>(e));
    }
    return v;
  }

  Element2<F> atom() {
    if (is_sym("(")) {
      advance();
      Element2<F> v = expr();
      expect_sym(")");
      return v;
    }
    if (tok().kind == Token::Int) {
      long long num = expect_int();
      if (is_sym("/")) {
        std::size_t p = tok().pos;
        advance();
        long long den = expect_int();
        if (den == 0) throw ParseError(p, "zero denominator");
        return Element2<F>::scalar(f_, f_.from_ratio(num, den));
      }
      return Element2<F>::scalar(f_, f_.from_long(num));
    }
    if (tok().kind == Token::Ident) {
      std::string name = tok().text;
      std::size_t p = tok().pos;
      advance();
      if (name == "x1") return s2_x(f_, 1);
      if (name == "x2") return s2_x(f_, 2);
      if (name == "y1") return s2_y(f_, 1);
      if (name == "y2") return s2_y(f_, 2);
      if (name == "theta") return theta(f_);
      if (name == "E" || name == "E1" || name == "E2") {
        int factor = name == "E2" ? 2 : 1;
        expect_sym("(");
        unsigned i = expect_index();
        expect_sym(",");
        unsigned j = expect_index();
        expect_sym(")");
        return matrix_unit_f(f_, factor, i, j);
      }
      if (name == "EE") {
        expect_sym("(");
        unsigned a = expect_index();
        expect_sym(",");
        unsigned b = expect_index();
        expect_sym(";");
        unsigned c = expect_index();
        expect_sym(",");
        unsigned d = expect_index();
        expect_sym(")");
        return matrix_unit2(f_, {a, b}, {c, d});
      }
      throw ParseError(p, "unknown name '" + name + "'");
    }
    throw ParseError(tok().pos, "expected an atom");
  }

  const F& f_;
  detail::Lexer lex_;
};

template <class F>
Element2<F> parse_element(const F& f, std::string_view src) {
  return ElementParser<F>(f, src).parse();
}

template <class F>
typename F::Elem parse_scalar(const F& f, std::string_view src) {
  Element2<F> e = parse_element(f, src);
  if (!e.is_scalar())
    throw ParseError(0, "expected a scalar expression");
  return e.scalar_part();
}

// Preimage under embed1: the element must not involve the other factor.
template <class F>
Element1<F> element_to_factor1(int target, const Element2<F>& a) {
  auto slots = split_factor(other_factor(target), a);
  Element1<F> r(a.field());
  for (const auto& [m, val] : slots) {
    if (!(m == Monomial1{0, 0}))
      throw DomainError(Err::PreconditionViolated,
                        "element involves the other factor");
    r = val;
  }
  return r;
}

// Word files: one letter per line, blank lines and '#' comments skipped.
//   E <factor> <row> <col> <element>     MU <factor> <scalar>
//   MUP <scalar>     THETA <n>     F2 <element>
template <class F>
GroupWord<F> parse_word(const F& f, std::string_view text) {
  GroupWord<F> out;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t eol = text.find('\n', line_start);
    std::string_view line = text.substr(
        line_start, eol == std::string_view::npos ? std::string_view::npos
                                                  : eol - line_start);
    std::size_t base = line_start;
    line_start = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    std::size_t b = 0;
    while (b < line.size() && std::isspace(static_cast<unsigned char>(line[b])))
      ++b;
    if (b == line.size() || line[b] == '#') continue;
    auto word_at = [&](std::size_t& i) {
      while (i < line.size() &&
             std::isspace(static_cast<unsigned char>(line[i])))
        ++i;
      std::size_t s = i;
      while (i < line.size() &&
             !std::isspace(static_cast<unsigned char>(line[i])))
        ++i;
      return std::string(line.substr(s, i - s));
    };
    std::size_t i = b;
    std::string tag = word_at(i);
    auto int_arg = [&](const std::string& what) {
      std::size_t at = i;
      std::string w = word_at(i);
      try {
        if (w.empty()) throw std::invalid_argument("empty");
        std::size_t used = 0;
        long v = std::stol(w, &used);
        if (used != w.size()) throw std::invalid_argument("junk");
        return v;
      } catch (const std::exception&) {
        throw ParseError(base + at, "expected " + what);
      }
    };
    auto rest = [&] {
      while (i < line.size() &&
             std::isspace(static_cast<unsigned char>(line[i])))
        ++i;
      return line.substr(i);
    };
    auto reparse = [&](auto&& fn) {
      std::size_t off = base + i;
      try {
        return fn();
      } catch (const ParseError& e) {
        throw ParseError(off + e.pos(), e.what());
      }
    };
    try {
      if (tag == "E") {
        long factor = int_arg("a factor (1 or 2)");
        if (factor != 1 && factor != 2)
          throw ParseError(base + b, "factor must be 1 or 2");
        long row = int_arg("a row index");
        long col = int_arg("a column index");
        if (row < 0 || col < 0)
          throw ParseError(base + b, "indices must be nonnegative");
        Element1<F> coeff = reparse([&] {
          return element_to_factor1(
              other_factor(static_cast<int>(factor)),
              parse_element(f, rest()));
        });
        out.push_back(make_elementary(static_cast<int>(factor),
                                      static_cast<unsigned>(row),
                                      static_cast<unsigned>(col), coeff));
      } else if (tag == "MU") {
        long factor = int_arg("a factor (1 or 2)");
        if (factor != 1 && factor != 2)
          throw ParseError(base + b, "factor must be 1 or 2");
        typename F::Elem lam =
            reparse([&] { return parse_scalar(f, rest()); });
        out.push_back(make_mu_u(f, static_cast<int>(factor), lam));
      } else if (tag == "MUP") {
        typename F::Elem lam =
            reparse([&] { return parse_scalar(f, rest()); });
        out.push_back(make_mu_uprime(f, lam));
      } else if (tag == "THETA") {
        out.push_back(make_theta_pow(f, int_arg("an integer power")));
      } else if (tag == "F2") {
        Element2<F> e = reparse([&] { return parse_element(f, rest()); });
        out.push_back(make_block_f2(e));
      } else {
        throw ParseError(base + b, "unknown letter tag '" + tag + "'");
      }
    } catch (const DomainError& e) {
      if (e.code() == Err::PreconditionViolated)
        throw ParseError(base + b, e.what());
      throw;  // value-level failures (singular blocks, zero scalars)
    }
  }
  return out;
}

// Automorphism files: S | T <l1> <l2> | W <unit element>.  W letters get
// their inverse by running the full unit factorization, so a non-unit in a
// W line is rejected with the factorization's certificate.
template <class F>
Automorphism<F> parse_auto_word(const F& f, std::string_view text,
                                OracleOptions opt = {}) {
  std::vector<AutoLetter<F>> letters;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t eol = text.find('\n', line_start);
    std::string_view line = text.substr(
        line_start, eol == std::string_view::npos ? std::string_view::npos
                                                  : eol - line_start);
    std::size_t base = line_start;
    line_start = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    std::size_t b = 0;
    while (b < line.size() && std::isspace(static_cast<unsigned char>(line[b])))
      ++b;
    if (b == line.size() || line[b] == '#') continue;
    std::size_t i = b;
    auto word_at = [&] {
      while (i < line.size() &&
             std::isspace(static_cast<unsigned char>(line[i])))
        ++i;
      std::size_t s = i;
      while (i < line.size() &&
             !std::isspace(static_cast<unsigned char>(line[i])))
        ++i;
      return std::string(line.substr(s, i - s));
    };
    std::string tag = word_at();
    if (tag == "S") {
      letters.push_back(AutoLetter<F>{AutoSwap<F>{}});
    } else if (tag == "T") {
      std::size_t p1 = i;
      std::string a = word_at(), bs = word_at();
      if (a.empty() || bs.empty())
        throw ParseError(base + p1, "expected two scalars");
      typename F::Elem l1, l2;
      try {
        l1 = parse_scalar(f, a);
        l2 = parse_scalar(f, bs);
      } catch (const ParseError& e) {
        throw ParseError(base + p1, e.what());
      }
      letters.push_back(
          make_torus(f, l1, l2).letters().front());
    } else if (tag == "W") {
      while (i < line.size() &&
             std::isspace(static_cast<unsigned char>(line[i])))
        ++i;
      Element2<F> u = [&] {
        try {
          return parse_element(f, line.substr(i));
        } catch (const ParseError& e) {
          throw ParseError(base + i + e.pos(), e.what());
        }
      }();
      FactorizationCertificate<F> cert = full_factor_unit(u, opt);
      Element2<F> u_inv =
          multiply_out(f, invert_word(f, cert.word2)) *
          multiply_out(f, invert_word(f, cert.word1)) *
          theta_pow(f, -cert.theta_power).scaled(f.inv(cert.scalar));
      letters.push_back(make_inner(u, u_inv).letters().front());
    } else {
      throw ParseError(base + b, "unknown automorphism tag '" + tag + "'");
    }
  }
  return Automorphism<F>(f, std::move(letters), true);
}

}  // namespace sinv
