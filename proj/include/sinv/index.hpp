#pragma once

#include <utility>

#include "sinv/action.hpp"
#include "sinv/block.hpp"
#include "sinv/errors.hpp"
#include "sinv/laurent.hpp"
#include "sinv/s2.hpp"

namespace sinv {

// Symbolic Fredholm index.  The shift symbol detects exactly the Fredholm
// elements (nonzero symbol), and the index is minus the top degree of the
// symbol: matrix-unit summands are finite rank (no index contribution), and
// a symbol with top term c x^d acts like x^d far out on the basis, each x
// costing one codimension.  The same reasoning applied to a block via the
// Smith form over K[x, x^-1] gives minus the top degree of the symbol
// matrix's determinant; the numeric oracle cross-checks both rules in the
// test suites.

enum class IndexMethod { Symbolic, Oracle };

template <class F>
struct IndexCertificate {
  long value = 0;
  Laurent<F> symbol;  // the symbol (scalar case) or its determinant (block)
  IndexMethod method = IndexMethod::Symbolic;
};

template <class F>
IndexCertificate<F> index1(const Element1<F>& a) {
  Laurent<F> s = psi1(a);
  if (s.is_zero())
    throw DomainError(Err::NotFredholm, "symbol vanishes");
  return {-s.topdeg(), s, IndexMethod::Symbolic};
}

template <class F>
IndexCertificate<F> index_block(const BlockOverS1<F>& b) {
  if (b.field.is_zero(b.c))
    throw DomainError(Err::NotFredholm,
                      "scalar part 0: the identity tail is not invertible");
  Laurent<F> d = laurent_det(symbol_matrix(b));
  if (d.is_zero())
    throw DomainError(Err::NotFredholm, "symbol determinant vanishes");
  return {-d.topdeg(), d, IndexMethod::Symbolic};
}

// Split v = u - 1 of a unit congruent to 1 modulo the ideal sum into an
// (ideal-1, ideal-2) pair.  The factor-1 decomposition of v puts the entire
// finite-block overlap into the matrix-unit slots; routing those wholly to
// the first part is the canonical choice, and what remains provably lies in
// the second ideal (its factor-1 coefficients are finite-rank in factor 2).
template <class F>
std::pair<Element2<F>, Element2<F>> split_parts(const Element2<F>& u) {
  const F& f = u.field();
  Element2<F> v = u - s2_one(f);
  if (!membership(v, Ideal2::A2))
    throw DomainError(Err::NotInOnePlusA2, "u - 1 not in the ideal sum");
  FactorDecomp<F> d = factor_decomp(1, v);
  std::map<Monomial1, Element1<F>> fslots;
  for (const auto& [ij, val] : d.fpart) {
    // Re-expand E_ij into its two monomials so join_factor can consume it.
    Element1<F> e = matrix_unit1(f, ij.first, ij.second);
    for (const auto& [m, c] : e.terms()) {
      auto it = fslots.find(m);
      if (it == fslots.end()) it = fslots.emplace(m, Element1<F>(f)).first;
      it->second += val.scaled(c);
    }
  }
  Element2<F> a1 = join_factor(1, f, fslots);
  Element2<F> a2 = v - a1;
  if (!membership(a1, Ideal2::P1) || !membership(a2, Ideal2::P2))
    throw std::logic_error("split_parts postcondition violated");
  return {a1, a2};
}

// Index of the i-th component map of a unit u = 1 + (ideal sum element):
// the part living in the other ideal is discarded, the remaining 1 + a_i is
// a scalar-plus-block operator and its block index is reported.
template <class F>
long ind_component(int i, const Element2<F>& u) {
  auto [a1, a2] = split_parts(u);
  const Element2<F>& ai = (i == 1) ? a1 : a2;
  return index_block(to_block(i, s2_one(u.field()) + ai)).value;
}

}  // namespace sinv
