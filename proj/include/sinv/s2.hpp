#pragma once

#include <compare>
#include <map>
#include <utility>

#include "sinv/element.hpp"
#include "sinv/s1.hpp"

namespace sinv {

// Basis monomial x1^a1 x2^a2 y1^b1 y2^b2 of the two-variable algebra (the
// tensor square of the one-variable one).  Generators of different factors
// commute, so multiplication is the factor-wise cancellation rule.
struct Monomial2 {
  unsigned a1 = 0, a2 = 0, b1 = 0, b2 = 0;
  friend auto operator<=>(const Monomial2&, const Monomial2&) = default;
};

inline Monomial2 mono_mul(const Monomial2& a, const Monomial2& b) {
  unsigned t1 = std::min(a.b1, b.a1);
  unsigned t2 = std::min(a.b2, b.a2);
  return Monomial2{a.a1 + b.a1 - t1, a.a2 + b.a2 - t2,
                   a.b1 + b.b1 - t1, a.b2 + b.b2 - t2};
}

template <class F>
using Element2 = SparseElem<F, Monomial2>;

template <class F>
Element2<F> s2_one(const F& f) {
  return Element2<F>::one(f);
}
template <class F>
Element2<F> s2_x(const F& f, int factor, unsigned k = 1) {
  Monomial2 m;
  (factor == 1 ? m.a1 : m.a2) = k;
  return Element2<F>::monomial(f, m, f.one());
}
template <class F>
Element2<F> s2_y(const F& f, int factor, unsigned k = 1) {
  Monomial2 m;
  (factor == 1 ? m.b1 : m.b2) = k;
  return Element2<F>::monomial(f, m, f.one());
}

// Monomial of one tensor factor placed into the two-variable algebra.
inline Monomial2 embed_mono(int factor, const Monomial1& m) {
  return factor == 1 ? Monomial2{m.i, 0, m.j, 0} : Monomial2{0, m.i, 0, m.j};
}
inline Monomial1 project_mono(int factor, const Monomial2& m) {
  return factor == 1 ? Monomial1{m.a1, m.b1} : Monomial1{m.a2, m.b2};
}
inline Monomial2 pair_mono(const Monomial1& f1, const Monomial1& f2) {
  return Monomial2{f1.i, f2.i, f1.j, f2.j};
}

template <class F>
Element2<F> embed1(int factor, const Element1<F>& a) {
  Element2<F> r(a.field());
  for (const auto& [m, c] : a.terms()) r.add_term(embed_mono(factor, m), c);
  return r;
}

template <class F>
Element2<F> tensor12(const Element1<F>& a, const Element1<F>& b) {
  Element2<F> r(a.field());
  for (const auto& [m1, c1] : a.terms())
    for (const auto& [m2, c2] : b.terms())
      r.add_term(pair_mono(m1, m2), a.field().mul(c1, c2));
  return r;
}

// E_ij of a single factor, as a two-variable element.
template <class F>
Element2<F> matrix_unit_f(const F& f, int factor, unsigned i, unsigned j) {
  return embed1(factor, matrix_unit1(f, i, j));
}

// Doubly-indexed matrix unit E_(alpha, beta) = E_(a1 b1)(1) E_(a2 b2)(2):
// the elementary operators of the finite-block ideal.
template <class F>
Element2<F> matrix_unit2(const F& f, std::pair<unsigned, unsigned> alpha,
                         std::pair<unsigned, unsigned> beta) {
  return tensor12(matrix_unit1(f, alpha.first, beta.first),
                  matrix_unit1(f, alpha.second, beta.second));
}

// Transpose anti-automorphism in both factors: x^alpha y^beta -> x^beta
// y^alpha; fixes coefficients, reverses products, sends E_(a,b) to E_(b,a).
template <class F>
Element2<F> eta2(const Element2<F>& a) {
  Element2<F> r(a.field());
  for (const auto& [m, c] : a.terms())
    r.add_term(Monomial2{m.b1, m.b2, m.a1, m.a2}, c);
  return r;
}

// Group the terms of a by the chosen factor's monomial; values are elements
// of the other factor.  join_factor is the inverse.
template <class F>
std::map<Monomial1, Element1<F>> split_factor(int factor,
                                              const Element2<F>& a) {
  std::map<Monomial1, Element1<F>> out;
  const F& f = a.field();
  for (const auto& [m, c] : a.terms()) {
    Monomial1 key = project_mono(factor, m);
    Monomial1 rest = project_mono(factor == 1 ? 2 : 1, m);
    auto it = out.find(key);
    if (it == out.end()) it = out.emplace(key, Element1<F>(f)).first;
    it->second.add_term(rest, c);
  }
  return out;
}

template <class F>
Element2<F> join_factor(int factor, const F& f,
                        const std::map<Monomial1, Element1<F>>& parts) {
  Element2<F> r(f);
  for (const auto& [key, val] : parts)
    for (const auto& [m, c] : val.terms())
      r.add_term(factor == 1 ? pair_mono(key, m) : pair_mono(m, key), c);
  return r;
}

// Decomposition along the chosen factor with coefficients in the other
// factor: a = c (x) 1 + sum x^k (x) xpart[k] + sum y^k (x) ypart[k] +
// sum E_kl (x) fpart[(k,l)], where "(x)" marks the chosen factor's slot.
template <class F>
struct FactorDecomp {
  Element1<F> c;
  std::map<unsigned, Element1<F>> xpart, ypart;
  std::map<std::pair<unsigned, unsigned>, Element1<F>> fpart;
};

template <class F>
FactorDecomp<F> factor_decomp(int factor, const Element2<F>& a) {
  const F& f = a.field();
  FactorDecomp<F> d{Element1<F>(f), {}, {}, {}};
  auto parts = split_factor(factor, a);
  for (const auto& [key, val] : parts) {
    rewrite_monomial1(key.i, key.j,
                      [&](Slot1 s, unsigned k, unsigned l, bool neg) {
      Element1<F> v = neg ? -val : val;
      switch (s) {
        case Slot1::Const: d.c += v; break;
        case Slot1::X: {
          auto it = d.xpart.find(k);
          if (it == d.xpart.end()) it = d.xpart.emplace(k, Element1<F>(f)).first;
          it->second += v;
          break;
        }
        case Slot1::Y: {
          auto it = d.ypart.find(k);
          if (it == d.ypart.end()) it = d.ypart.emplace(k, Element1<F>(f)).first;
          it->second += v;
          break;
        }
        case Slot1::E: {
          auto it = d.fpart.find({k, l});
          if (it == d.fpart.end())
            it = d.fpart.emplace(std::pair{k, l}, Element1<F>(f)).first;
          it->second += v;
          break;
        }
      }
    });
  }
  std::erase_if(d.xpart, [](const auto& kv) { return kv.second.is_zero(); });
  std::erase_if(d.ypart, [](const auto& kv) { return kv.second.is_zero(); });
  std::erase_if(d.fpart, [](const auto& kv) { return kv.second.is_zero(); });
  return d;
}

// Two-variable shift symbol: quotient by both factor ideals at once lands in
// K[x1^(+-1), x2^(+-1)], monomial-wise (a,b) exponents (a1-b1, a2-b2).
template <class F>
class Laurent2 {
 public:
  using Elem = typename F::Elem;
  using Terms = std::map<std::pair<long, long>, Elem>;

  explicit Laurent2(const F& f) : field_(f) {}
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Nonzero scalar iff exactly the (0,0) monomial is present.
  bool is_nonzero_scalar() const {
    return terms_.size() == 1 && terms_.begin()->first == std::pair<long, long>{0, 0};
  }
  Elem scalar_value() const {
    return is_nonzero_scalar() ? terms_.begin()->second : field_.zero();
  }
  void add_term(std::pair<long, long> k, const Elem& c) {
    if (field_.is_zero(c)) return;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh) {
      it->second = field_.add(it->second, c);
      if (field_.is_zero(it->second)) terms_.erase(it);
    }
  }
  bool operator==(const Laurent2& o) const { return terms_ == o.terms_; }

 private:
  F field_;
  Terms terms_;
};

template <class F>
Laurent2<F> psi2(const Element2<F>& a) {
  Laurent2<F> r(a.field());
  for (const auto& [m, c] : a.terms())
    r.add_term({static_cast<long>(m.a1) - static_cast<long>(m.b1),
                static_cast<long>(m.a2) - static_cast<long>(m.b2)},
               c);
  return r;
}

// The ideal lattice probed by membership tests:
//   P1 = (factor-1 matrix units) (x) S,   P2 = S (x) (factor-2 matrix units),
//   F2 = P1 cap P2  (finite blocks),      A2 = P1 + P2  (kernel of psi2).
enum class Ideal2 { F2, P1, P2, A2 };

template <class F>
bool membership(const Element2<F>& a, Ideal2 which) {
  switch (which) {
    case Ideal2::A2:
      return psi2(a).is_zero();
    case Ideal2::P1: {
      auto d = factor_decomp(1, a);
      return d.c.is_zero() && d.xpart.empty() && d.ypart.empty();
    }
    case Ideal2::P2: {
      auto d = factor_decomp(2, a);
      return d.c.is_zero() && d.xpart.empty() && d.ypart.empty();
    }
    case Ideal2::F2:
      return membership(a, Ideal2::P1) && membership(a, Ideal2::P2);
  }
  return false;
}

}  // namespace sinv
