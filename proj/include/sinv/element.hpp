#pragma once

#include <map>
#include <utility>

namespace sinv {

// Shared sparse-element container.  Both algebras have the convenient property
// that a product of basis monomials is again a single basis monomial, so the
// whole ring structure is captured by a monomial type with an associative
// `mono_mul` and a default-constructed identity.  Terms live in a std::map so
// iteration order (and hence printing, serialization, matrix assembly) is
// deterministic.
template <class F, class Mono>
class SparseElem {
 public:
  using Field = F;
  using Elem = typename F::Elem;
  using Terms = std::map<Mono, Elem>;

  explicit SparseElem(const F& f) : field_(f) {}

  static SparseElem zero(const F& f) { return SparseElem(f); }
  static SparseElem one(const F& f) { return monomial(f, Mono{}, f.one()); }
  static SparseElem monomial(const F& f, const Mono& m, const Elem& c) {
    SparseElem r(f);
    r.add_term(m, c);
    return r;
  }
  static SparseElem scalar(const F& f, const Elem& c) {
    return monomial(f, Mono{}, c);
  }

  const F& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_scalar() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Mono{});
  }
  // The coefficient of the identity monomial (0 if absent).
  Elem scalar_part() const {
    auto it = terms_.find(Mono{});
    return it == terms_.end() ? field_.zero() : it->second;
  }
  Elem coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  void add_term(const Mono& m, const Elem& c) {
    if (field_.is_zero(c)) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
      it->second = field_.add(it->second, c);
      if (field_.is_zero(it->second)) terms_.erase(it);
    }
  }

  SparseElem& operator+=(const SparseElem& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  SparseElem& operator-=(const SparseElem& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, field_.neg(c));
    return *this;
  }
  friend SparseElem operator+(SparseElem a, const SparseElem& b) {
    a += b;
    return a;
  }
  friend SparseElem operator-(SparseElem a, const SparseElem& b) {
    a -= b;
    return a;
  }
  SparseElem operator-() const {
    SparseElem r(field_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, field_.neg(c));
    return r;
  }
  friend SparseElem operator*(const SparseElem& a, const SparseElem& b) {
    SparseElem r(a.field_);
    for (const auto& [m1, c1] : a.terms_)
      for (const auto& [m2, c2] : b.terms_)
        r.add_term(mono_mul(m1, m2), a.field_.mul(c1, c2));
    return r;
  }
  SparseElem scaled(const Elem& c) const {
    SparseElem r(field_);
    if (field_.is_zero(c)) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, field_.mul(c, k));
    return r;
  }
  SparseElem pow(unsigned n) const {
    SparseElem r = one(field_);
    for (unsigned k = 0; k < n; ++k) r = r * *this;
    return r;
  }

  bool operator==(const SparseElem& o) const { return terms_ == o.terms_; }
  bool operator!=(const SparseElem& o) const { return !(*this == o); }

 private:
  F field_;
  Terms terms_;
};

}  // namespace sinv
