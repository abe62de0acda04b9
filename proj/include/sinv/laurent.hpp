#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sinv/errors.hpp"

namespace sinv {

// Laurent polynomials K[x, x^-1]: the image ring of the shift-symbol map.
// Sparse map from exponent to coefficient, zero coefficients never stored.
template <class F>
class Laurent {
 public:
  using Elem = typename F::Elem;
  using Terms = std::map<long, Elem>;

  explicit Laurent(const F& f) : field_(f) {}

  static Laurent zero(const F& f) { return Laurent(f); }
  static Laurent one(const F& f) { return monomial(f, 0, f.one()); }
  static Laurent monomial(const F& f, long k, const Elem& c) {
    Laurent r(f);
    r.add_term(k, c);
    return r;
  }
  static Laurent monomial(const F& f, long k) {
    return monomial(f, k, f.one());
  }

  const F& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  // Nonzero constants, i.e. degree-0 monomials.
  bool is_constant() const {
    return terms_.size() == 1 && terms_.begin()->first == 0;
  }
  long topdeg() const {
    if (terms_.empty()) throw std::logic_error("topdeg of zero");
    return terms_.rbegin()->first;
  }
  long botdeg() const {
    if (terms_.empty()) throw std::logic_error("botdeg of zero");
    return terms_.begin()->first;
  }
  Elem coeff(long k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? field_.zero() : it->second;
  }
  Elem leading() const {
    if (terms_.empty()) throw std::logic_error("leading of zero");
    return terms_.rbegin()->second;
  }

  void add_term(long k, const Elem& c) {
    if (field_.is_zero(c)) return;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh) {
      it->second = field_.add(it->second, c);
      if (field_.is_zero(it->second)) terms_.erase(it);
    }
  }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, field_.neg(c));
    return *this;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { a += b; return a; }
  friend Laurent operator-(Laurent a, const Laurent& b) { a -= b; return a; }
  Laurent operator-() const {
    Laurent r(field_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, field_.neg(c));
    return r;
  }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r(a.field_);
    for (const auto& [k1, c1] : a.terms_)
      for (const auto& [k2, c2] : b.terms_)
        r.add_term(k1 + k2, a.field_.mul(c1, c2));
    return r;
  }
  Laurent scaled(const Elem& c) const {
    Laurent r(field_);
    if (field_.is_zero(c)) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, field_.mul(c, v));
    return r;
  }
  Laurent shifted(long s) const {
    Laurent r(field_);
    for (const auto& [k, v] : terms_) r.terms_.emplace(k + s, v);
    return r;
  }

  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  // Monomial inverse (c*x^k -> c^-1 x^-k); anything else is not a unit of L.
  Laurent unit_inverse() const {
    if (!is_monomial())
      throw DomainError(Err::NotInvertibleOverL, "not a monomial");
    return monomial(field_, -terms_.begin()->first,
                    field_.inv(terms_.begin()->second));
  }

  // Division with remainder.  x is a unit of L, so the Euclidean size is the
  // "spread" topdeg - botdeg: both operands are shifted to polynomials with
  // nonzero constant term, divided classically, and shifted back.  Returns
  // (q, r) with *this == q*d + r and either r == 0 or spread(r) < spread(d).
  std::pair<Laurent, Laurent> divmod(const Laurent& d) const {
    if (d.is_zero()) throw std::logic_error("division by zero");
    if (is_zero()) return {zero(field_), zero(field_)};
    long sb = botdeg(), db = d.botdeg();
    Laurent r = shifted(-sb);
    Laurent pd = d.shifted(-db);
    long ddeg = pd.topdeg();
    Laurent q(field_);
    while (!r.is_zero() && r.topdeg() >= ddeg) {
      Laurent t =
          monomial(field_, r.topdeg() - ddeg, field_.div(r.leading(), pd.leading()));
      q += t;
      r -= t * pd;
    }
    return {q.shifted(sb - db), r.shifted(sb)};
  }

  // Exact division; throws std::logic_error if the division leaves a
  // remainder (callers use it where exactness is a theorem).
  Laurent exact_div(const Laurent& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw std::logic_error("inexact Laurent division");
    return q;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      Elem a = c;
      if (first) {
        if (field_.is_negative(c)) {
          out += "-";
          a = field_.abs_value(c);
        }
      } else {
        if (field_.is_negative(c)) {
          out += " - ";
          a = field_.abs_value(c);
        } else {
          out += " + ";
        }
      }
      bool unit_coeff = field_.is_one(a);
      if (k == 0) {
        out += field_.str(a);
      } else {
        if (!unit_coeff) {
          out += field_.str(a);
          out += "*";
        }
        out += "x";
        if (k != 1) out += "^" + std::to_string(k);
      }
      first = false;
    }
    return out;
  }

 private:
  F field_;
  Terms terms_;
};

// Square matrix over L, row-major.  Products treat mismatched sizes by
// extending the smaller matrix with an identity tail, matching the
// "finite block inside an infinite identity" reading everywhere else.
template <class F>
class LaurentMatrix {
 public:
  using Elem = typename F::Elem;

  LaurentMatrix(const F& f, std::size_t n)
      : field_(f), n_(n), a_(n * n, Laurent<F>::zero(f)) {}

  static LaurentMatrix identity(const F& f, std::size_t n) {
    LaurentMatrix m(f, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Laurent<F>::one(f);
    return m;
  }

  const F& field() const { return field_; }
  std::size_t size() const { return n_; }
  Laurent<F>& at(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  const Laurent<F>& at(std::size_t r, std::size_t c) const {
    return a_[r * n_ + c];
  }
  // Entry with the identity-extension convention applied.
  Laurent<F> entry_ext(std::size_t r, std::size_t c) const {
    if (r < n_ && c < n_) return at(r, c);
    return r == c ? Laurent<F>::one(field_) : Laurent<F>::zero(field_);
  }

  friend LaurentMatrix operator*(const LaurentMatrix& a,
                                 const LaurentMatrix& b) {
    std::size_t n = a.n_ > b.n_ ? a.n_ : b.n_;
    LaurentMatrix r(a.field_, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Laurent<F> s = Laurent<F>::zero(a.field_);
        for (std::size_t k = 0; k < n; ++k)
          s += a.entry_ext(i, k) * b.entry_ext(k, j);
        r.at(i, j) = s;
      }
    return r;
  }

  bool operator==(const LaurentMatrix& o) const {
    std::size_t n = n_ > o.n_ ? n_ : o.n_;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!(entry_ext(i, j) == o.entry_ext(i, j))) return false;
    return true;
  }

 private:
  F field_;
  std::size_t n_;
  std::vector<Laurent<F>> a_;
};

// Exact determinant by fraction-free (Bareiss) elimination.  Row x-power
// content is pulled out first so the elimination runs over polynomials; the
// interior divisions are exact by the Bareiss identity over any domain.
template <class F>
Laurent<F> laurent_det(const LaurentMatrix<F>& m) {
  const F& f = m.field();
  std::size_t n = m.size();
  if (n == 0) return Laurent<F>::one(f);
  long shift = 0;
  std::vector<Laurent<F>> b;
  b.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    long rowbot = 0;
    bool any = false;
    for (std::size_t j = 0; j < n; ++j) {
      const auto& e = m.at(i, j);
      if (!e.is_zero()) {
        long bd = e.botdeg();
        rowbot = any ? (bd < rowbot ? bd : rowbot) : bd;
        any = true;
      }
    }
    if (!any) return Laurent<F>::zero(f);
    shift += rowbot;
    for (std::size_t j = 0; j < n; ++j) b.push_back(m.at(i, j).shifted(-rowbot));
  }
  auto at = [&](std::size_t r, std::size_t c) -> Laurent<F>& {
    return b[r * n + c];
  };
  bool negate = false;
  Laurent<F> prev = Laurent<F>::one(f);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k).is_zero()) {
      std::size_t s = k + 1;
      while (s < n && at(s, k).is_zero()) ++s;
      if (s == n) return Laurent<F>::zero(f);
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(s, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        at(i, j) =
            (at(i, j) * at(k, k) - at(i, k) * at(k, j)).exact_div(prev);
    prev = at(k, k);
  }
  Laurent<F> det = at(n - 1, n - 1).shifted(shift);
  return negate ? -det : det;
}

}  // namespace sinv
