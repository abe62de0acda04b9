#pragma once

#include <string>
#include <variant>
#include <vector>

#include "sinv/errors.hpp"
#include "sinv/f2.hpp"
#include "sinv/format.hpp"
#include "sinv/s2.hpp"

namespace sinv {

// Group words over the generating letters of the unit-group factorizations.
// A word is a product read left to right; every letter has a closed-form
// inverse, so words invert exactly without any linear algebra.

template <class F>
struct LetterElementary {  // 1 + coeff * E_(row,col)(factor), row != col
  int factor = 1;
  unsigned row = 0, col = 0;
  Element1<F> coeff;  // element of the *other* factor
};

template <class F>
struct LetterMuU {  // 1 + (lambda - 1) E_00(factor)
  int factor = 1;
  typename F::Elem lambda;
};

template <class F>
struct LetterMuUprime {  // 1 + (lambda - 1) E_((0,0),(0,0))
  typename F::Elem lambda;
};

struct LetterThetaPow {
  long n = 1;
};

template <class F>
struct LetterBlockF2 {  // a unit of the form 1 + finite block, kept packed
  Element2<F> e;
};

template <class F>
using Letter = std::variant<LetterElementary<F>, LetterMuU<F>,
                            LetterMuUprime<F>, LetterThetaPow,
                            LetterBlockF2<F>>;

template <class F>
using GroupWord = std::vector<Letter<F>>;

inline int other_factor(int factor) { return factor == 1 ? 2 : 1; }

// --- theta: the bilateral-shift unit tying the two factors together --------

template <class F>
Element2<F> theta(const F& f) {
  Element2<F> one = s2_one(f);
  Element2<F> t1 =
      one + (s2_y(f, 1, 1) - one) * matrix_unit_f(f, 2, 0, 0);
  Element2<F> t2 =
      one + matrix_unit_f(f, 1, 0, 0) * (s2_x(f, 2, 1) - one);
  return t1 * t2;
}

template <class F>
Element2<F> theta_inverse(const F& f) {
  Element2<F> one = s2_one(f);
  Element2<F> t1 =
      one + matrix_unit_f(f, 1, 0, 0) * (s2_y(f, 2, 1) - one);
  Element2<F> t2 =
      one + (s2_x(f, 1, 1) - one) * matrix_unit_f(f, 2, 0, 0);
  return t1 * t2;
}

template <class F>
Element2<F> theta_pow(const F& f, long n) {
  Element2<F> base = n >= 0 ? theta(f) : theta_inverse(f);
  unsigned long k = n >= 0 ? n : -(n + 1) + 1UL;
  Element2<F> r = s2_one(f);
  for (unsigned long t = 0; t < k; ++t) r = r * base;
  return r;
}

// --- validating constructors ----------------------------------------------

template <class F>
Letter<F> make_elementary(int factor, unsigned row, unsigned col,
                          const Element1<F>& coeff) {
  if (row == col)
    throw DomainError(Err::PreconditionViolated,
                      "elementary letter needs row != col");
  return LetterElementary<F>{factor, row, col, coeff};
}

template <class F>
Letter<F> make_mu_u(const F& f, int factor, const typename F::Elem& lambda) {
  if (f.is_zero(lambda))
    throw DomainError(Err::NotUnit, "mu(0) is not a unit");
  return LetterMuU<F>{factor, lambda};
}

template <class F>
Letter<F> make_mu_uprime(const F& f, const typename F::Elem& lambda) {
  if (f.is_zero(lambda))
    throw DomainError(Err::NotUnit, "mu'(0) is not a unit");
  return LetterMuUprime<F>{lambda};
}

template <class F>
Letter<F> make_theta_pow(const F&, long n) {
  return LetterThetaPow{n};
}

template <class F>
Letter<F> make_block_f2(const Element2<F>& e) {
  if (!is_unit_1F2(e))  // also rejects non-block elements
    throw DomainError(Err::NotUnit, "finite block is singular");
  return LetterBlockF2<F>{e};
}

// --- evaluation ------------------------------------------------------------

template <class F>
Element2<F> letter_element(const F& f, const Letter<F>& l) {
  struct V {
    const F& f;
    Element2<F> operator()(const LetterElementary<F>& e) const {
      return s2_one(f) + matrix_unit_f(f, e.factor, e.row, e.col) *
                             embed1(other_factor(e.factor), e.coeff);
    }
    Element2<F> operator()(const LetterMuU<F>& m) const {
      return s2_one(f) +
             matrix_unit_f(f, m.factor, 0, 0).scaled(f.sub(m.lambda, f.one()));
    }
    Element2<F> operator()(const LetterMuUprime<F>& m) const {
      return muprime(f, m.lambda);
    }
    Element2<F> operator()(const LetterThetaPow& t) const {
      return theta_pow(f, t.n);
    }
    Element2<F> operator()(const LetterBlockF2<F>& b) const { return b.e; }
  };
  return std::visit(V{f}, l);
}

template <class F>
Letter<F> letter_inverse(const F& f, const Letter<F>& l) {
  struct V {
    const F& f;
    Letter<F> operator()(const LetterElementary<F>& e) const {
      return LetterElementary<F>{e.factor, e.row, e.col, -e.coeff};
    }
    Letter<F> operator()(const LetterMuU<F>& m) const {
      return LetterMuU<F>{m.factor, f.inv(m.lambda)};
    }
    Letter<F> operator()(const LetterMuUprime<F>& m) const {
      return LetterMuUprime<F>{f.inv(m.lambda)};
    }
    Letter<F> operator()(const LetterThetaPow& t) const {
      return Letter<F>{LetterThetaPow{-t.n}};
    }
    Letter<F> operator()(const LetterBlockF2<F>& b) const {
      return LetterBlockF2<F>{invert_1F2(b.e)};
    }
  };
  return std::visit(V{f}, l);
}

template <class F>
Element2<F> multiply_out(const F& f, const GroupWord<F>& w) {
  Element2<F> r = s2_one(f);
  for (const auto& l : w) r = r * letter_element(f, l);
  return r;
}

template <class F>
GroupWord<F> invert_word(const F& f, const GroupWord<F>& w) {
  GroupWord<F> out;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back(letter_inverse(f, *it));
  return out;
}

// --- serialization: one letter per line ------------------------------------

template <class F>
std::string serialize_letter(const F& f, const Letter<F>& l) {
  struct V {
    const F& f;
    std::string operator()(const LetterElementary<F>& e) const {
      return "E " + std::to_string(e.factor) + " " + std::to_string(e.row) +
             " " + std::to_string(e.col) + " " +
             to_text(embed1(other_factor(e.factor), e.coeff));
    }
    std::string operator()(const LetterMuU<F>& m) const {
      return "MU " + std::to_string(m.factor) + " " + f.str(m.lambda);
    }
    std::string operator()(const LetterMuUprime<F>& m) const {
      return "MUP " + f.str(m.lambda);
    }
    std::string operator()(const LetterThetaPow& t) const {
      return "THETA " + std::to_string(t.n);
    }
    std::string operator()(const LetterBlockF2<F>& b) const {
      return "F2 " + to_text(b.e);
    }
  };
  return std::visit(V{f}, l);
}

template <class F>
std::string serialize_word(const F& f, const GroupWord<F>& w) {
  std::string out;
  for (const auto& l : w) {
    out += serialize_letter(f, l);
    out += '\n';
  }
  return out;
}

}  // namespace sinv
