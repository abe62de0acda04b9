#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <utility>

#include "sinv/element.hpp"
#include "sinv/laurent.hpp"

namespace sinv {

// Basis monomial x^i y^j of the algebra generated by x, y with yx = 1.
// Every word in x, y normalizes to such a monomial, and products of
// monomials stay monomial: moving the y-block of the left factor past the
// x-block of the right factor cancels t = min(j, i') pairs via yx = 1.
struct Monomial1 {
  unsigned i = 0, j = 0;
  friend auto operator<=>(const Monomial1&, const Monomial1&) = default;
};

inline Monomial1 mono_mul(const Monomial1& a, const Monomial1& b) {
  unsigned t = std::min(a.j, b.i);
  return Monomial1{a.i + b.i - t, a.j + b.j - t};
}

template <class F>
using Element1 = SparseElem<F, Monomial1>;

template <class F>
Element1<F> s1_one(const F& f) {
  return Element1<F>::one(f);
}
template <class F>
Element1<F> s1_x(const F& f, unsigned k = 1) {
  return Element1<F>::monomial(f, Monomial1{k, 0}, f.one());
}
template <class F>
Element1<F> s1_y(const F& f, unsigned k = 1) {
  return Element1<F>::monomial(f, Monomial1{0, k}, f.one());
}
template <class F>
Element1<F> s1_monomial(const F& f, unsigned i, unsigned j) {
  return Element1<F>::monomial(f, Monomial1{i, j}, f.one());
}

// Matrix unit E_ij = x^i y^j - x^(i+1) y^(j+1); these multiply like the
// elementary matrices of an N x N array that grew unbounded: E_ij E_kl =
// [j == k] E_il, and they span the unique minimal ideal.
template <class F>
Element1<F> matrix_unit1(const F& f, unsigned i, unsigned j) {
  Element1<F> e(f);
  e.add_term(Monomial1{i, j}, f.one());
  e.add_term(Monomial1{i + 1, j + 1}, f.neg(f.one()));
  return e;
}

// The transpose anti-automorphism: x <-> y, so x^i y^j -> x^j y^i and
// E_ij -> E_ji.  It reverses products.
template <class F>
Element1<F> eta1(const Element1<F>& a) {
  Element1<F> r(a.field());
  for (const auto& [m, c] : a.terms()) r.add_term(Monomial1{m.j, m.i}, c);
  return r;
}

// Shift symbol: the quotient by the matrix-unit ideal is the Laurent ring
// K[x, x^-1], with x^i y^j |-> x^(i-j).  Kernel = span of the E_ij.
template <class F>
Laurent<F> psi1(const Element1<F>& a) {
  Laurent<F> r(a.field());
  for (const auto& [m, c] : a.terms())
    r.add_term(static_cast<long>(m.i) - static_cast<long>(m.j), c);
  return r;
}

// Rewrite of a single monomial x^i y^j against the direct-sum basis
//   K  (+)  xK[x]  (+)  yK[y]  (+)  span{E_kl}.
// For i >= j the telescoping identity x^i y^j = x^(i-j) - sum_{k<j}
// E_(i-j+k),k drives the rewrite; for i < j the transposed version applies.
// emit(slot, k, l, negative) receives each contribution; slot encodes which
// summand it lands in.
enum class Slot1 { Const, X, Y, E };

template <class Fn>
void rewrite_monomial1(unsigned i, unsigned j, Fn&& emit) {
  if (i >= j) {
    unsigned d = i - j;
    if (d == 0)
      emit(Slot1::Const, 0u, 0u, false);
    else
      emit(Slot1::X, d, 0u, false);
    for (unsigned k = 0; k < j; ++k) emit(Slot1::E, d + k, k, true);
  } else {
    unsigned d = j - i;
    emit(Slot1::Y, d, 0u, false);
    for (unsigned k = 0; k < i; ++k) emit(Slot1::E, k, d + k, true);
  }
}

// Full decomposition of an element along the direct sum above.  xpart is
// keyed by the power of x (>= 1), ypart by the power of y (>= 1), fpart by
// the (row, col) of the matrix unit.
template <class F>
struct Decomp1 {
  using Elem = typename F::Elem;
  Elem c;
  std::map<unsigned, Elem> xpart, ypart;
  std::map<std::pair<unsigned, unsigned>, Elem> fpart;
};

template <class F>
Decomp1<F> decompose1(const Element1<F>& a) {
  const F& f = a.field();
  Decomp1<F> d;
  d.c = f.zero();
  auto acc = [&](typename F::Elem& slot, const typename F::Elem& v) {
    slot = f.add(slot, v);
  };
  for (const auto& [m, coeff] : a.terms()) {
    rewrite_monomial1(m.i, m.j, [&](Slot1 s, unsigned k, unsigned l, bool neg) {
      typename F::Elem v = neg ? f.neg(coeff) : coeff;
      switch (s) {
        case Slot1::Const: acc(d.c, v); break;
        case Slot1::X: acc(d.xpart[k], v); break;
        case Slot1::Y: acc(d.ypart[k], v); break;
        case Slot1::E: acc(d.fpart[{k, l}], v); break;
      }
    });
  }
  std::erase_if(d.xpart, [&](const auto& kv) { return f.is_zero(kv.second); });
  std::erase_if(d.ypart, [&](const auto& kv) { return f.is_zero(kv.second); });
  std::erase_if(d.fpart, [&](const auto& kv) { return f.is_zero(kv.second); });
  return d;
}

template <class F>
Element1<F> recompose1(const F& f, const Decomp1<F>& d) {
  Element1<F> r = Element1<F>::scalar(f, d.c);
  for (const auto& [k, c] : d.xpart) r.add_term(Monomial1{k, 0}, c);
  for (const auto& [k, c] : d.ypart) r.add_term(Monomial1{0, k}, c);
  for (const auto& [ij, c] : d.fpart)
    r += matrix_unit1(f, ij.first, ij.second).scaled(c);
  return r;
}

// True iff a lies in the matrix-unit ideal (equivalently, its symbol is 0).
template <class F>
bool in_f_ideal(const Element1<F>& a) {
  return psi1(a).is_zero();
}

}  // namespace sinv
