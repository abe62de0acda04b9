#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "sinv/block.hpp"
#include "sinv/s1.hpp"
#include "sinv/s2.hpp"
#include "sinv/words.hpp"

namespace sinv {

// Deterministic test-data generator.  All draws go through range(), which
// uses plain modulo on mt19937_64 output: unlike the std distributions this
// is implementation-independent, so seeds reproduce exactly everywhere
// (golden files depend on that).  The slight modulo bias is irrelevant here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}

  std::uint64_t next() { return g_(); }
  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(
                                             hi - lo + 1));
  }
  unsigned urange(unsigned lo, unsigned hi) {
    return static_cast<unsigned>(range(lo, hi));
  }
  bool coin() { return next() & 1; }

 private:
  std::mt19937_64 g_;
};

template <class F>
typename F::Elem rand_scalar(const F& f, Rng& rng, bool nonzero = false) {
  for (;;) {
    long num = rng.range(-9, 9), den = rng.range(1, 4);
    typename F::Elem c;
    try {
      c = f.from_ratio(num, den);
    } catch (const std::invalid_argument&) {
      continue;  // denominator divisible by a small characteristic
    }
    if (!nonzero || !f.is_zero(c)) return c;
  }
}

template <class F>
Element1<F> rand_element1(const F& f, Rng& rng, unsigned max_exp,
                          unsigned terms) {
  Element1<F> r(f);
  for (unsigned t = 0; t < terms; ++t)
    r.add_term(Monomial1{rng.urange(0, max_exp), rng.urange(0, max_exp)},
               rand_scalar(f, rng));
  return r;
}

template <class F>
Element1<F> rand_fredholm1(const F& f, Rng& rng, unsigned max_exp,
                           unsigned terms) {
  for (;;) {
    Element1<F> r = rand_element1(f, rng, max_exp, terms);
    if (!psi1(r).is_zero()) return r;
  }
}

template <class F>
Element2<F> rand_element2(const F& f, Rng& rng, unsigned max_exp,
                          unsigned terms) {
  Element2<F> r(f);
  for (unsigned t = 0; t < terms; ++t)
    r.add_term(Monomial2{rng.urange(0, max_exp), rng.urange(0, max_exp),
                         rng.urange(0, max_exp), rng.urange(0, max_exp)},
               rand_scalar(f, rng));
  return r;
}

// Finite-rank element: a small combination of doubly-indexed matrix units.
template <class F>
Element2<F> rand_f2_element(const F& f, Rng& rng, unsigned max_idx,
                            unsigned terms) {
  Element2<F> r(f);
  for (unsigned t = 0; t < terms; ++t) {
    auto idx = [&] {
      return std::pair<unsigned, unsigned>{rng.urange(0, max_idx),
                                           rng.urange(0, max_idx)};
    };
    r += matrix_unit2(f, idx(), idx()).scaled(rand_scalar(f, rng));
  }
  return r;
}

template <class F>
Element2<F> rand_unit_1f2(const F& f, Rng& rng, unsigned max_idx,
                          unsigned terms) {
  for (;;) {
    Element2<F> e = s2_one(f) + rand_f2_element(f, rng, max_idx, terms);
    if (is_unit_1F2(e)) return e;
  }
}

// Fredholm block: nonzero scalar part, entries of bounded degree, nonzero
// symbol determinant.
template <class F>
BlockOverS1<F> rand_block(const F& f, Rng& rng, int factor, std::size_t n,
                          unsigned max_exp, unsigned terms_per_entry) {
  for (;;) {
    BlockOverS1<F> b(f, factor, n);
    b.c = rand_scalar(f, rng, true);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (rng.coin())
          b.at(i, j) = rand_element1(f, rng, max_exp, terms_per_entry);
    if (!laurent_det(symbol_matrix(b)).is_zero()) return b;
  }
}

// An elementary letter of the given factor with a small coefficient in the
// other one.
template <class F>
Letter<F> rand_elementary(const F& f, Rng& rng, int factor, unsigned max_row,
                          unsigned max_exp) {
  unsigned row = rng.urange(0, max_row), col = rng.urange(0, max_row);
  while (col == row) col = rng.urange(0, max_row);
  Element1<F> coeff(f);
  unsigned terms = rng.urange(1, 2);
  for (unsigned t = 0; t < terms; ++t)
    coeff.add_term(Monomial1{rng.urange(0, max_exp), rng.urange(0, max_exp)},
                   rand_scalar(f, rng));
  return make_elementary(factor, row, col, coeff);
}

template <class F>
GroupWord<F> rand_elementary_word(const F& f, Rng& rng, int factor,
                                  unsigned len, unsigned max_row,
                                  unsigned max_exp) {
  GroupWord<F> w;
  for (unsigned t = 0; t < len; ++t)
    w.push_back(rand_elementary(f, rng, factor, max_row, max_exp));
  return w;
}

// A unit congruent to 1 modulo the ideal sum: a product of theta powers,
// mu heads, elementaries of both factors, and a finite-block unit.  Every
// letter lies in that coset, so the product does too, and the word gives
// the exact inverse.
template <class F>
Element2<F> rand_unit_a2(const F& f, Rng& rng, long theta_lo, long theta_hi,
                         unsigned letters, GroupWord<F>* word_out = nullptr) {
  GroupWord<F> w;
  long n = rng.range(theta_lo, theta_hi);
  if (n != 0) w.push_back(make_theta_pow(f, n));
  for (unsigned t = 0; t < letters; ++t) {
    switch (rng.range(0, 3)) {
      case 0:
        w.push_back(rand_elementary(f, rng, 1, 2, 2));
        break;
      case 1:
        w.push_back(rand_elementary(f, rng, 2, 2, 2));
        break;
      case 2:
        w.push_back(make_mu_u(f, rng.coin() ? 1 : 2,
                              rand_scalar(f, rng, true)));
        break;
      default:
        w.push_back(make_block_f2(rand_unit_1f2(f, rng, 1, 2)));
        break;
    }
  }
  if (word_out) *word_out = w;
  return multiply_out(f, w);
}

}  // namespace sinv
