#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "sinv/action.hpp"
#include "sinv/errors.hpp"
#include "sinv/linalg.hpp"
#include "sinv/s2.hpp"

namespace sinv {

// Calculus of the finite-block ideal: elements supported on doubly-indexed
// matrix units E_(alpha, beta), behaving as arbitrary finite matrices over
// the field.  Units of 1 + (finite block) are decided by ordinary linear
// algebra on the affected block.

using BlockIdx = std::pair<unsigned, unsigned>;

// Coefficients of a finite-block element in the E_(alpha,beta) basis,
// obtained by decomposing factor 1 and then factor 2.  The caller must have
// checked membership; stray non-block components are a logic error here.
template <class F>
std::map<std::pair<BlockIdx, BlockIdx>, typename F::Elem> f2_coeffs(
    const Element2<F>& v) {
  FactorDecomp<F> d = factor_decomp(1, v);
  if (!d.c.is_zero() || !d.xpart.empty() || !d.ypart.empty())
    throw std::logic_error("f2_coeffs: element has non-block factor-1 part");
  std::map<std::pair<BlockIdx, BlockIdx>, typename F::Elem> out;
  for (const auto& [ij, val] : d.fpart) {
    Decomp1<F> inner = decompose1(val);
    if (!v.field().is_zero(inner.c) || !inner.xpart.empty() ||
        !inner.ypart.empty())
      throw std::logic_error("f2_coeffs: element has non-block factor-2 part");
    for (const auto& [kl, c] : inner.fpart)
      out[{{ij.first, kl.first}, {ij.second, kl.second}}] = c;
  }
  return out;
}

template <class F>
Element2<F> from_f2_coeffs(
    const F& f,
    const std::map<std::pair<BlockIdx, BlockIdx>, typename F::Elem>& coeffs) {
  Element2<F> r(f);
  for (const auto& [ab, c] : coeffs)
    r += matrix_unit2(f, ab.first, ab.second).scaled(c);
  return r;
}

// The affected finite block of e = 1 + v: the identity plus v's coefficient
// matrix over the closed row/col index set (always containing (0,0), which
// anchors the scalar-diagonal fold used by the factorizations).
template <class F>
struct F2Block {
  std::vector<BlockIdx> index_set;  // sorted; index_set[0] == (0,0)
  Mat<F> a;
};

template <class F>
F2Block<F> f2_block(const Element2<F>& e) {
  const F& f = e.field();
  Element2<F> v = e - s2_one(f);
  if (!membership(v, Ideal2::F2))
    throw DomainError(Err::NotInOnePlusF2, "e - 1 is not a finite block");
  auto coeffs = f2_coeffs(v);
  std::set<BlockIdx> s{{0, 0}};
  for (const auto& [ab, c] : coeffs) {
    (void)c;
    s.insert(ab.first);
    s.insert(ab.second);
  }
  F2Block<F> out{std::vector<BlockIdx>(s.begin(), s.end()),
                 Mat<F>(f, s.size(), s.size())};
  std::map<BlockIdx, std::size_t> pos;
  for (std::size_t i = 0; i < out.index_set.size(); ++i)
    pos[out.index_set[i]] = i;
  for (std::size_t i = 0; i < out.index_set.size(); ++i)
    out.a.at(i, i) = f.one();
  for (const auto& [ab, c] : coeffs)
    out.a.at(pos[ab.first], pos[ab.second]) =
        f.add(out.a.at(pos[ab.first], pos[ab.second]), c);
  return out;
}

template <class F>
bool is_unit_1F2(const Element2<F>& e) {
  F2Block<F> b = f2_block(e);
  return !e.field().is_zero(mat_det(b.a));
}

template <class F>
Element2<F> invert_1F2(const Element2<F>& e) {
  const F& f = e.field();
  F2Block<F> b = f2_block(e);
  auto inv = mat_inverse(b.a);
  if (!inv) throw DomainError(Err::NotUnit, "finite block is singular");
  Element2<F> r = s2_one(f);
  for (std::size_t i = 0; i < b.index_set.size(); ++i)
    for (std::size_t j = 0; j < b.index_set.size(); ++j) {
      typename F::Elem c = inv->at(i, j);
      if (i == j) c = f.sub(c, f.one());
      if (f.is_zero(c)) continue;
      r += matrix_unit2(f, b.index_set[i], b.index_set[j]).scaled(c);
    }
  return r;
}

// Determinant of the affected block; the group-level determinant of
// (1+F_2)^*, with SL = its kernel.
template <class F>
typename F::Elem det_block(const Element2<F>& e) {
  F2Block<F> b = f2_block(e);
  typename F::Elem d = mat_det(b.a);
  if (e.field().is_zero(d))
    throw DomainError(Err::NotUnit, "finite block is singular");
  return d;
}

// mu'(lambda) = 1 + (lambda-1) E_((0,0),(0,0)): the scalar head of the
// finite-block group, det = lambda.
template <class F>
Element2<F> muprime(const F& f, const typename F::Elem& lambda) {
  if (f.is_zero(lambda))
    throw DomainError(Err::NotUnit, "mu'(0) is not a unit");
  return s2_one(f) +
         matrix_unit2(f, {0, 0}, {0, 0}).scaled(f.sub(lambda, f.one()));
}

// Filtration determinant: restrict e to each window that it preserves,
// take the finite determinant, and accept once two consecutive restrictions
// agree.  The value does not depend on the chosen exhaustion; the tests
// exercise that by comparing filtrations with different offsets.
template <class F>
typename F::Elem det_filtration(const Element2<F>& e,
                                const std::vector<Window>& filtration) {
  const F& f = e.field();
  if (!membership(e - s2_one(f), Ideal2::F2))
    throw DomainError(Err::NotInOnePlusF2, "e - 1 is not a finite block");
  // Windows that miss part of the affected block restrict to the identity
  // there and would "stabilize" on a wrong value; only windows containing
  // the whole support count.
  unsigned support = 0;
  for (const auto& [ab, c] : f2_coeffs(e - s2_one(f))) {
    (void)c;
    for (unsigned v : {ab.first.first, ab.first.second, ab.second.first,
                       ab.second.second})
      if (v > support) support = v;
  }
  std::vector<typename F::Elem> dets;
  for (const Window& w : filtration) {
    if (w.kind != Window::Kind::Cube)
      throw std::logic_error("det_filtration expects cube windows");
    if (w.bound < support) continue;
    auto basis = window_basis2(w);
    std::map<std::pair<unsigned, unsigned>, std::size_t> pos;
    for (std::size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = i;
    Mat<F> m(f, basis.size(), basis.size());
    bool invariant = true;
    for (std::size_t col = 0; col < basis.size() && invariant; ++col)
      for (const auto& [t, c] : act2(e, basis[col])) {
        auto it = pos.find(t);
        if (it == pos.end()) {
          invariant = false;  // window not yet preserved; try the next one
          break;
        }
        m.at(it->second, col) = c;
      }
    if (!invariant) continue;
    typename F::Elem d = mat_det(m);
    if (f.is_zero(d))
      throw DomainError(Err::NotUnit, "restriction determinant vanished");
    dets.push_back(d);
    if (dets.size() >= 2 && f.eq(dets[dets.size() - 1], dets[dets.size() - 2]))
      return d;
  }
  throw DomainError(Err::NoStabilization,
                    "filtration exhausted before the determinant stabilized");
}

}  // namespace sinv
