#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sinv/errors.hpp"
#include "sinv/s2.hpp"
#include "sinv/words.hpp"

namespace sinv {

// Automorphism words over the generator kinds of the two-variable algebra's
// automorphism group: the factor swap, the torus scalings, and inner
// automorphisms by verified units.  An automorphism is a word of letters
// applied left to right; the defining relations of the algebra are checked
// on the composite's generator images at construction time.

template <class F>
struct AutoSwap {};

template <class F>
struct AutoTorus {
  typename F::Elem l1, l2;
};

template <class F>
struct AutoInner {
  Element2<F> u, u_inv;  // verified two-sided inverse pair
};

template <class F>
using AutoLetter = std::variant<AutoSwap<F>, AutoTorus<F>, AutoInner<F>>;

namespace detail {
template <class F>
typename F::Elem pow_signed(const F& f, const typename F::Elem& l, long e) {
  typename F::Elem base = e >= 0 ? l : f.inv(l);
  unsigned long k = e >= 0 ? e : static_cast<unsigned long>(-(e + 1)) + 1UL;
  typename F::Elem r = f.one();
  for (unsigned long t = 0; t < k; ++t) r = f.mul(r, base);
  return r;
}

template <class F>
Element2<F> apply_letter(const F& f, const AutoLetter<F>& l,
                         const Element2<F>& a) {
  struct V {
    const F& f;
    const Element2<F>& a;
    Element2<F> operator()(const AutoSwap<F>&) const {
      Element2<F> r(f);
      for (const auto& [m, c] : a.terms())
        r.add_term(Monomial2{m.a2, m.a1, m.b2, m.b1}, c);
      return r;
    }
    Element2<F> operator()(const AutoTorus<F>& t) const {
      Element2<F> r(f);
      for (const auto& [m, c] : a.terms()) {
        typename F::Elem s =
            f.mul(pow_signed(f, t.l1, long(m.a1) - long(m.b1)),
                  pow_signed(f, t.l2, long(m.a2) - long(m.b2)));
        r.add_term(m, f.mul(c, s));
      }
      return r;
    }
    Element2<F> operator()(const AutoInner<F>& w) const {
      return w.u * a * w.u_inv;
    }
  };
  return std::visit(V{f, a}, l);
}

template <class F>
AutoLetter<F> invert_letter(const F& f, const AutoLetter<F>& l) {
  struct V {
    const F& f;
    AutoLetter<F> operator()(const AutoSwap<F>& s) const { return s; }
    AutoLetter<F> operator()(const AutoTorus<F>& t) const {
      return AutoTorus<F>{f.inv(t.l1), f.inv(t.l2)};
    }
    AutoLetter<F> operator()(const AutoInner<F>& w) const {
      return AutoInner<F>{w.u_inv, w.u};
    }
  };
  return std::visit(V{f}, l);
}
}  // namespace detail

template <class F>
class Automorphism {
 public:
  explicit Automorphism(const F& f) : field_(f) {}
  Automorphism(const F& f, std::vector<AutoLetter<F>> letters,
               bool check = true)
      : field_(f), letters_(std::move(letters)) {
    if (check && !relation_check(*this))
      throw DomainError(Err::PreconditionViolated,
                        "generator images violate the defining relations");
  }

  const F& field() const { return field_; }
  const std::vector<AutoLetter<F>>& letters() const { return letters_; }

  Element2<F> apply(const Element2<F>& a) const {
    Element2<F> r = a;
    for (const auto& l : letters_) r = detail::apply_letter(field_, l, r);
    return r;
  }

  // Apply this, then b.
  friend Automorphism compose(const Automorphism& a, const Automorphism& b) {
    std::vector<AutoLetter<F>> ls = a.letters_;
    ls.insert(ls.end(), b.letters_.begin(), b.letters_.end());
    return Automorphism(a.field_, std::move(ls), false);
  }

  Automorphism inverse() const {
    std::vector<AutoLetter<F>> ls;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      ls.push_back(detail::invert_letter(field_, *it));
    return Automorphism(field_, std::move(ls), false);
  }

 private:
  F field_;
  std::vector<AutoLetter<F>> letters_;
};

// The defining relations: y_i x_i = 1 and the four cross-factor
// commutations.  (x_i y_i = 1 - E_00 is a consequence, not a relation.)
template <class F>
bool relation_check(const Automorphism<F>& s) {
  const F& f = s.field();
  Element2<F> x1 = s.apply(s2_x(f, 1)), x2 = s.apply(s2_x(f, 2));
  Element2<F> y1 = s.apply(s2_y(f, 1)), y2 = s.apply(s2_y(f, 2));
  Element2<F> one = s2_one(f);
  return y1 * x1 == one && y2 * x2 == one && x1 * x2 == x2 * x1 &&
         x1 * y2 == y2 * x1 && y1 * x2 == x2 * y1 && y1 * y2 == y2 * y1;
}

template <class F>
Automorphism<F> make_swap(const F& f) {
  return Automorphism<F>(f, {AutoLetter<F>{AutoSwap<F>{}}}, false);
}

template <class F>
Automorphism<F> make_torus(const F& f, const typename F::Elem& l1,
                           const typename F::Elem& l2) {
  if (f.is_zero(l1) || f.is_zero(l2))
    throw DomainError(Err::NotUnit, "torus parameters must be nonzero");
  return Automorphism<F>(f, {AutoLetter<F>{AutoTorus<F>{l1, l2}}}, false);
}

// Inner automorphism by u; the claimed inverse is verified on both sides
// and cached, so applying the automorphism never re-solves for it.
template <class F>
Automorphism<F> make_inner(const Element2<F>& u, const Element2<F>& u_inv) {
  const F& f = u.field();
  Element2<F> one = s2_one(f);
  if (!(u * u_inv == one) || !(u_inv * u == one))
    throw DomainError(Err::NotUnit, "not a two-sided inverse pair");
  return Automorphism<F>(f, {AutoLetter<F>{AutoInner<F>{u, u_inv}}}, false);
}

// A sample of the generator families, with printable names.  All the
// matrix-unit families need distinct indices i != j: 1 + c E_ii is not a
// unit (its inverse would be a geometric series).
template <class F>
std::vector<std::pair<std::string, Automorphism<F>>> g2_generator_set(
    const F& f) {
  std::vector<std::pair<std::string, Automorphism<F>>> out;
  Element2<F> one = s2_one(f);
  typename F::Elem lam = f.from_long(2);
  auto inner = [&](const std::string& name, const Element2<F>& u,
                   const Element2<F>& ui) {
    out.emplace_back(name, make_inner(u, ui));
  };
  out.emplace_back("swap", make_swap(f));
  out.emplace_back("torus(2,1)", make_torus(f, lam, f.one()));
  inner("inner theta", theta(f), theta_inverse(f));
  Element2<F> mu1 = one + matrix_unit_f(f, 1, 0, 0).scaled(f.sub(lam, f.one()));
  Element2<F> mu1i =
      one + matrix_unit_f(f, 1, 0, 0).scaled(f.sub(f.inv(lam), f.one()));
  inner("inner mu(2) factor 1", mu1, mu1i);
  Element2<F> e2 = matrix_unit2(f, {0, 1}, {1, 0}).scaled(lam);
  inner("inner 1 + 2 E((0,1),(1,0))", one + e2, one - e2);
  Element2<F> ex = s2_x(f, 2, 2) * matrix_unit_f(f, 1, 0, 1).scaled(lam);
  inner("inner 1 + 2 x2^2 E_01(1)", one + ex, one - ex);
  Element2<F> ey = s2_y(f, 2, 1) * matrix_unit_f(f, 1, 1, 0).scaled(lam);
  inner("inner 1 + 2 y2 E_10(1)", one + ey, one - ey);
  Element2<F> ec = matrix_unit_f(f, 1, 0, 1).scaled(lam);
  inner("inner 1 + 2 E_01(1)", one + ec, one - ec);
  return out;
}

}  // namespace sinv
