#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "sinv/action.hpp"
#include "sinv/block.hpp"
#include "sinv/errors.hpp"
#include "sinv/f2.hpp"
#include "sinv/index.hpp"
#include "sinv/laurent.hpp"
#include "sinv/words.hpp"

namespace sinv {

// Constructive unit-group factorizations.  Everything here returns words of
// group letters together with enough data to re-multiply exactly; every
// factorization is checked by re-multiplication in the tests, and failures
// surface as certified rejections (index certificates, singular residual
// blocks) rather than near-misses.

// --- GL_n over the Laurent ring --------------------------------------------

template <class F>
struct GLLetter {  // I + coeff * e_(row, col), row != col
  std::size_t row = 0, col = 0;
  Laurent<F> coeff;
};

template <class F>
struct GLFactorization {
  typename F::Elem lambda;
  long power = 0;  // m == mu_0(lambda x^power) * product(word)
  std::vector<GLLetter<F>> word;
};

template <class F>
LaurentMatrix<F> gl_letter_matrix(const F& f, std::size_t n,
                                  const GLLetter<F>& l) {
  LaurentMatrix<F> m = LaurentMatrix<F>::identity(f, n);
  m.at(l.row, l.col) += l.coeff;
  return m;
}

template <class F>
LaurentMatrix<F> gl_word_matrix(const F& f, std::size_t n,
                                const std::vector<GLLetter<F>>& w) {
  LaurentMatrix<F> m = LaurentMatrix<F>::identity(f, n);
  for (const auto& l : w) m = m * gl_letter_matrix(f, n, l);
  return m;
}

// Write an invertible matrix over L = K[x, x^-1] as mu_0(det) times
// elementary row-transvection letters: Euclidean elimination on the
// "spread" (top minus bottom degree) using only row additions, which keeps
// every step exactly invertible, then a Whitehead fold of the diagonal into
// the (0,0) slot.  Fails with NotInvertibleOverL when det is not a unit.
template <class F>
GLFactorization<F> factor_gl_laurent(const LaurentMatrix<F>& m) {
  const F& f = m.field();
  const std::size_t n = m.size();
  if (n == 0) return {f.one(), 0, {}};  // empty block is the identity
  Laurent<F> det = laurent_det(m);
  if (det.is_zero() || !det.is_monomial())
    throw DomainError(Err::NotInvertibleOverL,
                      "determinant is not a unit of the Laurent ring");
  LaurentMatrix<F> a = m;
  std::vector<GLLetter<F>> ops;  // applied left-multiplications, in order
  auto spread = [](const Laurent<F>& e) { return e.topdeg() - e.botdeg(); };
  auto rowop = [&](std::size_t target, std::size_t source,
                   const Laurent<F>& coeff) {
    // row_target += coeff * row_source
    for (std::size_t j = 0; j < n; ++j)
      a.at(target, j) += coeff * a.at(source, j);
    ops.push_back({target, source, coeff});
  };

  for (std::size_t c = 0; c < n; ++c) {
    for (;;) {
      std::size_t r = c + 1;
      while (r < n && a.at(r, c).is_zero()) ++r;
      if (r == n) break;
      if (a.at(c, c).is_zero()) {
        rowop(c, r, Laurent<F>::one(f));
        continue;
      }
      if (spread(a.at(r, c)) >= spread(a.at(c, c))) {
        auto [q, rem] = a.at(r, c).divmod(a.at(c, c));
        (void)rem;
        rowop(r, c, -q);
      } else {
        auto [q, rem] = a.at(c, c).divmod(a.at(r, c));
        (void)rem;
        rowop(c, r, -q);
      }
    }
    if (a.at(c, c).is_zero())
      throw std::logic_error("elimination lost a pivot despite unit det");
  }
  for (std::size_t c = 0; c < n; ++c)
    if (!a.at(c, c).is_monomial())
      throw std::logic_error("triangular pivot is not a unit monomial");
  // Clear above the diagonal, right to left so each pivot row is already
  // reduced to its pure diagonal when used.
  for (std::size_t c = n; c-- > 1;)
    for (std::size_t r = 0; r < c; ++r) {
      if (a.at(r, c).is_zero()) continue;
      Laurent<F> q = a.at(r, c) * a.at(c, c).unit_inverse();
      rowop(r, c, -q);
    }

  // a is now diag(d_0..d_(n-1)); m = (inverse ops, in order) * a.
  std::vector<GLLetter<F>> word;
  for (const auto& op : ops) word.push_back({op.row, op.col, -op.coeff});

  // Fold the diagonal into slot 0: diag(1,..,d_i,..) = mu_0(d_i) *
  // Whitehead(0, i, d_i^-1), and diagonal matrices commute, so collecting
  // highest slot first leaves mu_0(det) times the tails in ascending order.
  Laurent<F> cur = a.at(0, 0);
  std::vector<GLLetter<F>> tail;
  Laurent<F> lone = Laurent<F>::one(f);
  for (std::size_t i = n; i-- > 1;) {
    Laurent<F> d = a.at(i, i);
    if (d == lone) continue;
    cur = cur * d;
    Laurent<F> u = d.unit_inverse();
    std::vector<GLLetter<F>> wh{{0, i, lone - u},
                                {i, 0, -lone},
                                {0, i, lone - u.unit_inverse()},
                                {i, 0, u}};
    tail.insert(tail.begin(), wh.begin(), wh.end());
  }
  // Commute mu_0(cur) to the front: mu^-1 e_(r,c)(q) mu multiplies the
  // coefficient by cur when c == 0 and divides it when r == 0.
  for (auto& l : word) {
    if (l.col == 0) l.coeff = l.coeff * cur;
    if (l.row == 0) l.coeff = l.coeff * cur.unit_inverse();
  }
  word.insert(word.end(), tail.begin(), tail.end());
  return {cur.leading(), cur.topdeg(), word};
}

// --- det-bar: the scalar determinant of a symbol ---------------------------

// For a block with scalar part 1 whose symbol matrix is invertible of degree
// zero, the symbol determinant is a nonzero field scalar; that scalar is the
// group determinant classifying the unit up to elementaries and finite
// blocks.  Degree != 0 means the element cannot be a unit, and the degree is
// returned as the certificate.
template <class F>
typename F::Elem detbar(const BlockOverS1<F>& b) {
  if (!b.field.is_one(b.c))
    throw DomainError(Err::PreconditionViolated, "scalar part must be 1");
  Laurent<F> d = laurent_det(symbol_matrix(b));
  if (d.is_zero() || !d.is_monomial())
    throw DomainError(Err::SymbolNotUnit,
                      "symbol determinant is not a unit of the Laurent ring");
  long deg = d.topdeg();
  if (deg != 0)
    throw DomainError(Err::NonzeroDegree,
                      "symbol determinant has degree " + std::to_string(deg) +
                          "; the index is " + std::to_string(-deg),
                      deg);
  return d.leading();
}

template <class F>
typename F::Elem detbar_unit(int i, const Element2<F>& u) {
  return detbar(to_block(i, u));
}

// --- factoring units of 1 + (one-sided block ideal) ------------------------

namespace detail {
// Lift a Laurent coefficient to the factor holding the shifts: x^k with
// k >= 0 becomes x^k, x^-k becomes y^k, term by term.
template <class F>
Element1<F> lift_laurent(const F& f, const Laurent<F>& q) {
  Element1<F> r(f);
  for (const auto& [k, c] : q.terms())
    r.add_term(k >= 0 ? Monomial1{static_cast<unsigned>(k), 0}
                      : Monomial1{0, static_cast<unsigned>(-k)},
               c);
  return r;
}
}  // namespace detail

template <class F>
struct UnitFactorization1P {
  int factor = 1;
  typename F::Elem lambda;  // u == mu(factor, lambda) * multiply_out(word)
  GroupWord<F> word;        // Elementary letters, then one BlockF2 residual
};

// Factor a unit u in 1 + (ideal of factor i) as mu(lambda) * elementaries *
// (1 + finite block): eliminate the symbol matrix over L, lift each GL
// letter to the algebra (one elementary letter each), and the exactly
// computed residual lands in 1 + F_2 where a finite determinant decides
// invertibility.  Nonzero symbol degree is a certified obstruction: no unit
// has one, so the reported index accompanies the NotUnit rejection.
template <class F>
UnitFactorization1P<F> factor_unit_1p(int i, const Element2<F>& u,
                                      bool keep_residual_packed = true) {
  const F& f = u.field();
  Element2<F> one = s2_one(f);
  if (!membership(u - one, i == 1 ? Ideal2::P1 : Ideal2::P2))
    throw DomainError(Err::NotInOnePlusP,
                      "u - 1 not in the one-sided block ideal");
  BlockOverS1<F> b = to_block(i, u);
  LaurentMatrix<F> sym = symbol_matrix(b);
  Laurent<F> d = laurent_det(sym);
  if (d.is_zero() || !d.is_monomial())
    throw DomainError(Err::SymbolNotUnit,
                      "symbol determinant is not a unit of the Laurent ring");
  if (d.topdeg() != 0)
    throw DomainError(Err::NotUnit,
                      "index certificate: symbol determinant has degree " +
                          std::to_string(d.topdeg()) + ", so the index is " +
                          std::to_string(-d.topdeg()) +
                          " and no unit has nonzero index",
                      -d.topdeg());
  GLFactorization<F> glf = factor_gl_laurent(sym);
  if (glf.power != 0) throw std::logic_error("degree-zero det folded badly");

  GroupWord<F> word;
  for (const auto& l : glf.word)
    word.push_back(make_elementary(
        i, static_cast<unsigned>(l.row), static_cast<unsigned>(l.col),
        detail::lift_laurent(f, l.coeff)));
  // Residual w = lift^-1 * u; by symbol multiplicativity it is 1 + finite
  // block, and u is a unit iff that block is invertible.
  Element2<F> lift_inv = one;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    lift_inv = lift_inv * letter_element(f, letter_inverse(f, *it));
  Element2<F> mu_inv =
      one + matrix_unit_f(f, i, 0, 0).scaled(f.sub(f.inv(glf.lambda), f.one()));
  Element2<F> w = lift_inv * (mu_inv * u);
  if (!membership(w - one, Ideal2::F2))
    throw std::logic_error("residual escaped the finite-block ideal");
  if (!(w == one)) {
    if (!is_unit_1F2(w))
      throw DomainError(Err::NotUnit, "residual finite block is singular");
    if (keep_residual_packed) {
      word.push_back(LetterBlockF2<F>{w});
    } else {
      GroupWord<F> tail = factor_1F2_into_elementaries(w, i);
      word.insert(word.end(), tail.begin(), tail.end());
    }
  }
  return {i, glf.lambda, word};
}

// --- finite-block units as elementary words --------------------------------

// Whitehead word for diag(u, u^-1) over scalar entries at two index slots.
namespace detail {
template <class F>
std::vector<std::pair<std::pair<std::size_t, std::size_t>,
                      typename F::Elem>>
whitehead_scalar(const F& f, std::size_t r0, std::size_t r1,
                 const typename F::Elem& u) {
  typename F::Elem ui = f.inv(u);
  return {{{r0, r1}, f.sub(f.one(), u)},
          {{r1, r0}, f.neg(f.one())},
          {{r0, r1}, f.sub(f.one(), ui)},
          {{r1, r0}, u}};
}

// One finite-block transvection 1 + lam E_(alpha,beta) as letters whose
// matrix indices live in `factor` j: directly when the j-components differ,
// else through the commutator
//   [1 + E_(i,aux)(j) E_kk(j'), 1 + lam E_(aux,i)(j) E_kl(j')]
//     = 1 + lam E_ii(j) E_kl(j').
template <class F>
void transvection_letters(const F& f, int j, BlockIdx alpha, BlockIdx beta,
                          const typename F::Elem& lam, GroupWord<F>& out) {
  if (f.is_zero(lam)) return;
  unsigned aj = j == 1 ? alpha.first : alpha.second;
  unsigned ajp = j == 1 ? alpha.second : alpha.first;
  unsigned bj = j == 1 ? beta.first : beta.second;
  unsigned bjp = j == 1 ? beta.second : beta.first;
  if (aj != bj) {
    out.push_back(make_elementary(
        j, aj, bj, matrix_unit1(f, ajp, bjp).scaled(lam)));
    return;
  }
  unsigned i = aj;
  unsigned k = ajp, l = bjp;  // k != l since alpha != beta
  unsigned aux = i == 0 ? 1 : 0;
  Element1<F> ekk = matrix_unit1(f, k, k);
  Element1<F> ekl = matrix_unit1(f, k, l).scaled(lam);
  out.push_back(make_elementary(j, i, aux, ekk));
  out.push_back(make_elementary(j, aux, i, ekl));
  out.push_back(make_elementary(j, i, aux, -ekk));
  out.push_back(make_elementary(j, aux, i, -ekl));
}
}  // namespace detail

// The scalar head mu'(d) as elementary letters of factor j: a Whitehead word
// for diag(d, d^-1) at factor-j rows (0,1) followed by five transvections
// whose product telescopes to mu'(d) by the one-sided-inverse relations.
// d == 0 is the schema's excluded parameter value.
template <class F>
GroupWord<F> muprime_expansion(const F& f, const typename F::Elem& d, int j) {
  if (f.is_zero(d))
    throw DomainError(Err::LambdaMinusOne,
                      "schema parameter 1 + lambda must be nonzero");
  GroupWord<F> out;
  if (f.is_one(d)) return out;
  int jp = other_factor(j);
  auto scal = [&](const typename F::Elem& c) {
    return Element1<F>::scalar(f, c);
  };
  // R1^-1 where R1 = Whitehead(0, 1, u = d^-1): reversed inverses.
  auto wh = detail::whitehead_scalar(f, 0, 1, f.inv(d));
  for (auto it = wh.rbegin(); it != wh.rend(); ++it)
    out.push_back(make_elementary(j, static_cast<unsigned>(it->first.first),
                                  static_cast<unsigned>(it->first.second),
                                  scal(f.neg(it->second))));
  // The five-matrix telescope M1..M5.
  typename F::Elem lam = f.div(f.sub(f.one(), d), d);  // (1-d)/d
  Element1<F> xo = s1_x(f, 1);
  Element1<F> yo = s1_y(f, 1);
  out.push_back(make_elementary(j, 1u, 0u, yo.scaled(f.neg(d))));
  out.push_back(make_elementary(j, 0u, 1u, xo.scaled(lam)));
  out.push_back(make_elementary(j, 1u, 0u, yo));
  out.push_back(make_elementary(j, 0u, 1u, xo.scaled(f.neg(lam))));
  out.push_back(make_elementary(j, 0u, 1u,
                                xo.scaled(f.mul(f.mul(lam, lam), d))));
  (void)jp;
  return out;
}

// Factor a unit 1 + finite block into elementary letters all carrying
// factor-j matrix indices: Gauss-Jordan on the affected block with
// transvections only, a Whitehead fold of the diagonal into the (0,0) slot,
// and the mu'(det) head expanded through its telescope.
template <class F>
GroupWord<F> factor_1F2_into_elementaries(const Element2<F>& e, int j) {
  const F& f = e.field();
  F2Block<F> blk = f2_block(e);  // NotInOnePlusF2 when membership fails
  const std::size_t K = blk.index_set.size();
  Mat<F>& a = blk.a;
  typename F::Elem det = mat_det(a);
  if (f.is_zero(det))
    throw DomainError(Err::NotUnit, "finite block is singular");

  using Op = std::pair<std::pair<std::size_t, std::size_t>, typename F::Elem>;
  std::vector<Op> ops;
  auto rowop = [&](std::size_t target, std::size_t source,
                   const typename F::Elem& lam) {
    for (std::size_t col = 0; col < K; ++col)
      a.at(target, col) =
          f.add(a.at(target, col), f.mul(lam, a.at(source, col)));
    ops.push_back({{target, source}, lam});
  };
  for (std::size_t c = 0; c < K; ++c) {
    if (f.is_zero(a.at(c, c))) {
      std::size_t r = c + 1;
      while (r < K && f.is_zero(a.at(r, c))) ++r;
      if (r == K) throw std::logic_error("pivot lost despite nonzero det");
      rowop(c, r, f.one());
    }
    for (std::size_t r = 0; r < K; ++r) {
      if (r == c || f.is_zero(a.at(r, c))) continue;
      rowop(r, c, f.neg(f.div(a.at(r, c), a.at(c, c))));
    }
  }

  GroupWord<F> out;
  for (const auto& op : ops)  // inverses of the applied ops, original order
    detail::transvection_letters(f, j, blk.index_set[op.first.first],
                                 blk.index_set[op.first.second],
                                 f.neg(op.second), out);
  // Diagonal fold: highest slot first into slot 0 = (0,0).
  typename F::Elem cur = a.at(0, 0);
  GroupWord<F> tail;
  for (std::size_t i = K; i-- > 1;) {
    typename F::Elem di = a.at(i, i);
    if (f.is_one(di)) continue;
    cur = f.mul(cur, di);
    GroupWord<F> wh;
    for (const auto& t : detail::whitehead_scalar(f, 0, i, f.inv(di)))
      detail::transvection_letters(f, j, blk.index_set[t.first.first],
                                   blk.index_set[t.first.second], t.second,
                                   wh);
    tail.insert(tail.begin(), wh.begin(), wh.end());
  }
  // Diagonal entries of 1+F_2 blocks commute with everything in the fold
  // only as diagonal matrices; mu'(cur) then stands at the front exactly as
  // in the GL case.
  GroupWord<F> head = muprime_expansion(f, cur, j);
  out.insert(out.end(), head.begin(), head.end());
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

// --- the global factorization ---------------------------------------------

template <class F>
struct ThetaSplit {
  long n = 0;       // u == theta^n * k with k's second component of index 0
  Element2<F> k;
};

// Peel the theta power off a unit congruent to 1 mod the ideal sum: n is
// the second component index, and theta^-n * u then has both component
// indices zero.  Unit-ness of u is not certified here; non-units with a
// well-defined component index pass through (and fail later, loudly).
template <class F>
ThetaSplit<F> split_theta(const Element2<F>& u, OracleOptions opt = {}) {
  (void)opt;
  long n = ind_component(2, u);  // NotInOnePlusA2 / NotFredholm propagate
  Element2<F> k = theta_pow(u.field(), -n) * u;
  if (!membership(k - s2_one(u.field()), Ideal2::A2))
    throw std::logic_error("theta shift left the ideal-sum coset");
  return {n, k};
}

template <class F>
struct BoxtimesSplit {
  Element2<F> u1, u2;  // k == u1 * u2, u_i in 1 + (factor-i block ideal)
};

// Split an index-zero unit k = u1 * u2 with u1 in 1+p_1 and u2 in 1+p_2:
// take k's canonical part split, repair 1 + a1 to an action isomorphism by
// a finite-rank correction (possible exactly because the component index is
// zero), certify u1 as a unit by factoring it, and divide.  The pair is
// canonical only up to a unit of 1 + F_2 sliding between the factors.
template <class F>
BoxtimesSplit<F> split_boxtimes(const Element2<F>& k, OracleOptions opt = {}) {
  const F& f = k.field();
  Element2<F> one = s2_one(f);
  auto [a1, a2] = split_parts(k);
  long i1, i2;
  try {
    i1 = index_block(to_block(1, one + a1)).value;
    i2 = index_block(to_block(2, one + a2)).value;
  } catch (const DomainError& e) {
    if (e.code() == Err::NotFredholm)
      throw DomainError(Err::NotUnit,
                        std::string("component symbol is singular: ") +
                            e.what());
    throw;
  }
  if (i1 != 0 || i2 != 0)
    throw DomainError(Err::IndexNotZero,
                      "component indices are (" + std::to_string(i1) + ", " +
                          std::to_string(i2) + "), expected (0, 0)");
  Element2<F> corr = make_correction2(one + a1, 1, CorrectionGoal::Iso, opt);
  Element2<F> u1 = one + a1 + corr;
  UnitFactorization1P<F> c1 = factor_unit_1p(1, u1);
  Element2<F> u1_inv = one;
  for (auto it = c1.word.rbegin(); it != c1.word.rend(); ++it)
    u1_inv = u1_inv * letter_element(f, letter_inverse(f, *it));
  u1_inv = u1_inv *
           (one + matrix_unit_f(f, 1, 0, 0)
                      .scaled(f.sub(f.inv(c1.lambda), f.one())));
  if (!(u1 * u1_inv == one))
    throw std::logic_error("unit word inverse failed to invert");
  Element2<F> u2 = u1_inv * k;
  if (!membership(u2 - one, Ideal2::P2))
    throw std::logic_error("second factor escaped its ideal");
  factor_unit_1p(2, u2);  // certify; NotUnit propagates when k was no unit
  if (!(u1 * u2 == k)) throw std::logic_error("boxtimes product mismatch");
  return {u1, u2};
}

// Complete factorization certificate of a unit of the two-variable algebra:
//   u == scalar * theta^theta_power * multiply_out(word1) * multiply_out(word2)
// with word_i over factor-i letters (mu head, elementaries, finite-block
// residual).  detbar_i are the two symbol determinants; (scalar, detbar_1)
// is the abelianized invariant pair.
template <class F>
struct FactorizationCertificate {
  typename F::Elem scalar;
  long theta_power = 0;
  GroupWord<F> word1, word2;
  typename F::Elem detbar1, detbar2;
};

template <class F>
Element2<F> certificate_element(const F& f,
                                const FactorizationCertificate<F>& c) {
  Element2<F> r = theta_pow(f, c.theta_power).scaled(c.scalar);
  return r * multiply_out(f, c.word1) * multiply_out(f, c.word2);
}

template <class F>
FactorizationCertificate<F> full_factor_unit(const Element2<F>& u,
                                             OracleOptions opt = {}) {
  const F& f = u.field();
  Laurent2<F> sym = psi2(u);
  if (!sym.is_nonzero_scalar())
    throw DomainError(Err::NotUnit,
                      "image in the Laurent quotient is not a nonzero scalar");
  typename F::Elem c = sym.scalar_value();
  Element2<F> v = u.scaled(f.inv(c));
  ThetaSplit<F> ts = split_theta(v, opt);
  BoxtimesSplit<F> bs = split_boxtimes(ts.k, opt);
  UnitFactorization1P<F> c1 = factor_unit_1p(1, bs.u1);
  UnitFactorization1P<F> c2 = factor_unit_1p(2, bs.u2);
  FactorizationCertificate<F> cert{c, ts.n, {}, {}, c1.lambda, c2.lambda};
  if (!f.is_one(c1.lambda)) cert.word1.push_back(make_mu_u(f, 1, c1.lambda));
  cert.word1.insert(cert.word1.end(), c1.word.begin(), c1.word.end());
  if (!f.is_one(c2.lambda)) cert.word2.push_back(make_mu_u(f, 2, c2.lambda));
  cert.word2.insert(cert.word2.end(), c2.word.begin(), c2.word.end());
  if (!(certificate_element(f, cert) == u))
    throw std::logic_error("certificate failed to re-multiply");
  return cert;
}

}  // namespace sinv
