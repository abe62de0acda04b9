#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "sinv/errors.hpp"
#include "sinv/laurent.hpp"
#include "sinv/s2.hpp"

namespace sinv {

// Finite-matrix view of elements of K + (matrix units of one factor) (x) S:
// such an element is a scalar plus an n x n array of matrix units E_ij of
// `factor` whose entries live in the other factor, i.e. it acts as
// [[ c*I + G, 0 ], [ 0, c*I ]] on the column space.  (c, n, entries) is the
// minimal such presentation; entries are row-major.
template <class F>
struct BlockOverS1 {
  using Elem = typename F::Elem;
  F field;
  int factor = 1;
  Elem c;
  std::size_t n = 0;
  std::vector<Element1<F>> entries;

  BlockOverS1(const F& f, int fac, std::size_t size)
      : field(f), factor(fac), c(f.zero()), n(size),
        entries(size * size, Element1<F>(f)) {}

  Element1<F>& at(std::size_t r, std::size_t col) { return entries[r * n + col]; }
  const Element1<F>& at(std::size_t r, std::size_t col) const {
    return entries[r * n + col];
  }
  // Entry with the "identity beyond the block" convention: diagonal c.
  Element1<F> entry_ext(std::size_t r, std::size_t col) const {
    if (r < n && col < n) {
      Element1<F> e = at(r, col);
      if (r == col) e += Element1<F>::scalar(field, c);
      return e;
    }
    return r == col ? Element1<F>::scalar(field, c) : Element1<F>(field);
  }
};

// Recognize a in K + p_factor and present it as a block.  Errors with
// NotInScalarPlusIdeal when the non-block part is not a scalar.
template <class F>
BlockOverS1<F> to_block(int factor, const Element2<F>& a) {
  const F& f = a.field();
  FactorDecomp<F> d = factor_decomp(factor, a);
  if (!d.xpart.empty() || !d.ypart.empty() || !d.c.is_scalar())
    throw DomainError(Err::NotInScalarPlusIdeal,
                      "element is not scalar + factor-" +
                          std::to_string(factor) + " block");
  std::size_t n = 0;
  for (const auto& [ij, val] : d.fpart) {
    (void)val;
    std::size_t need = std::max(ij.first, ij.second) + 1;
    if (need > n) n = need;
  }
  BlockOverS1<F> b(f, factor, n);
  b.c = d.c.scalar_part();
  for (const auto& [ij, val] : d.fpart) b.at(ij.first, ij.second) = val;
  return b;
}

template <class F>
Element2<F> from_block(const BlockOverS1<F>& b) {
  const F& f = b.field;
  int other = b.factor == 1 ? 2 : 1;
  Element2<F> r = Element2<F>::scalar(f, b.c);
  for (std::size_t i = 0; i < b.n; ++i)
    for (std::size_t j = 0; j < b.n; ++j) {
      if (b.at(i, j).is_zero()) continue;
      r += matrix_unit_f(f, b.factor, static_cast<unsigned>(i),
                         static_cast<unsigned>(j)) *
           embed1(other, b.at(i, j));
    }
  return r;
}

// Product in the block picture: (c + G)(c' + G') = cc' + (cG' + c'G + GG'),
// sizes aligned by the identity-extension convention.  Mirrors multiplication
// of the underlying elements, which the tests check.
template <class F>
BlockOverS1<F> block_mul(const BlockOverS1<F>& a, const BlockOverS1<F>& b) {
  if (a.factor != b.factor) throw std::logic_error("block factor mismatch");
  const F& f = a.field;
  std::size_t n = std::max(a.n, b.n);
  BlockOverS1<F> r(f, a.factor, n);
  r.c = f.mul(a.c, b.c);
  auto ext = [&](const BlockOverS1<F>& m, std::size_t i, std::size_t j) {
    return i < m.n && j < m.n ? m.at(i, j) : Element1<F>(f);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Element1<F> s = ext(a, i, j).scaled(b.c) + ext(b, i, j).scaled(a.c);
      for (std::size_t k = 0; k < n; ++k) s += ext(a, i, k) * ext(b, k, j);
      r.at(i, j) = s;
    }
  return r;
}

// Entry-wise shift symbol of the extended block: the n x n matrix over
// K[x, x^-1] with (i,j) entry psi(entry) + c*[i==j].  Fredholm data of the
// block is read off this matrix.
template <class F>
LaurentMatrix<F> symbol_matrix(const BlockOverS1<F>& b) {
  LaurentMatrix<F> m(b.field, b.n);
  for (std::size_t i = 0; i < b.n; ++i)
    for (std::size_t j = 0; j < b.n; ++j) {
      Laurent<F> s = psi1(b.at(i, j));
      if (i == j) s += Laurent<F>::monomial(b.field, 0, b.c);
      m.at(i, j) = s;
    }
  return m;
}

}  // namespace sinv
