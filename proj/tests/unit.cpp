#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <optional>
#include <string>
#include <vector>

#include "doctest.h"
#include "sinv/action.hpp"
#include "sinv/api.hpp"
#include "sinv/autos.hpp"
#include "sinv/errors.hpp"
#include "sinv/f2.hpp"
#include "sinv/fields.hpp"
#include "sinv/format.hpp"
#include "sinv/index.hpp"
#include "sinv/laurent.hpp"
#include "sinv/parse.hpp"
#include "sinv/rand.hpp"
#include "sinv/s1.hpp"
#include "sinv/s2.hpp"
#include "sinv/units.hpp"
#include "sinv/words.hpp"

using namespace sinv;

namespace {

using Q = RationalField;
using E1 = Element1<Q>;
using E2 = Element2<Q>;

const Q kQ{};

template <class Fn>
std::optional<Err> thrown(Fn&& fn) {
  try {
    fn();
  } catch (const DomainError& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("rational field basics") {
  CHECK(kQ.str(kQ.from_ratio(2, 4)) == "1/2");
  CHECK(kQ.str(kQ.from_ratio(-6, 3)) == "-2");
  CHECK(kQ.eq(kQ.inv(kQ.from_ratio(3, 5)), kQ.from_ratio(5, 3)));
  CHECK(kQ.is_one(kQ.mul(kQ.from_ratio(2, 3), kQ.from_ratio(3, 2))));
  CHECK_THROWS_AS(kQ.from_ratio(1, 0), std::invalid_argument);
}

TEST_CASE("prime field basics") {
  PrimeField f7(7);
  CHECK(f7.eq(f7.from_ratio(1, 2), f7.from_long(4)));
  CHECK(f7.is_one(f7.mul(f7.from_long(3), f7.inv(f7.from_long(3)))));
  CHECK(f7.eq(f7.from_long(-1), f7.from_long(6)));
  CHECK_THROWS_AS(PrimeField(6), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(2), std::invalid_argument);
  CHECK_THROWS_AS(f7.from_ratio(1, 7), std::invalid_argument);
}

TEST_CASE("one-variable product matches the shift-operator composition") {
  // Independent oracle: x^i y^j acts on x^a by a |-> (a >= j) x^(a-j+i).
  auto act_mono = [](unsigned i, unsigned j, unsigned a)
      -> std::optional<unsigned> {
    if (a < j) return std::nullopt;
    return a - j + i;
  };
  for (unsigned i = 0; i <= 6; ++i)
    for (unsigned j = 0; j <= 6; ++j)
      for (unsigned k = 0; k <= 6; ++k)
        for (unsigned l = 0; l <= 6; ++l) {
          E1 p = s1_monomial(kQ, i, j) * s1_monomial(kQ, k, l);
          REQUIRE(p.terms().size() == 1);
          auto [m, c] = *p.terms().begin();
          CHECK(kQ.is_one(c));
          for (unsigned a = 0; a <= 14; ++a) {
            auto inner = act_mono(k, l, a);
            auto composed =
                inner ? act_mono(i, j, *inner) : std::nullopt;
            auto direct = act_mono(m.i, m.j, a);
            CHECK(composed == direct);
          }
        }
}

TEST_CASE("one-variable decomposition round-trips") {
  Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    E1 a = rand_element1(kQ, rng, 5, 4);
    Decomp1<Q> d = decompose1(a);
    CHECK(recompose1(kQ, d) == a);
  }
  CHECK(in_f_ideal(matrix_unit1(kQ, 2, 3)));
  CHECK_FALSE(in_f_ideal(s1_x(kQ)));
  CHECK_FALSE(in_f_ideal(s1_one(kQ)));
}

TEST_CASE("matrix units against their x,y expansion") {
  // E_ij = x^i y^j - x^(i+1) y^(j+1), and y E_00 = 0 = E_00 x.
  E1 e00 = matrix_unit1(kQ, 0, 0);
  CHECK(e00 == s1_one(kQ) - s1_x(kQ) * s1_y(kQ));
  CHECK((s1_y(kQ) * e00).is_zero());
  CHECK((e00 * s1_x(kQ)).is_zero());
  CHECK(e00 * e00 == e00);
  CHECK(matrix_unit1(kQ, 1, 2) ==
        s1_monomial(kQ, 1, 2) - s1_monomial(kQ, 2, 3));
}

TEST_CASE("involution and symbol map on one variable") {
  CHECK(eta1(s1_x(kQ)) == s1_y(kQ));
  CHECK(eta1(s1_monomial(kQ, 2, 5)) == s1_monomial(kQ, 5, 2));
  // eta is an anti-automorphism.
  Rng rng(3);
  for (int t = 0; t < 30; ++t) {
    E1 a = rand_element1(kQ, rng, 4, 3);
    E1 b = rand_element1(kQ, rng, 4, 3);
    CHECK(eta1(a * b) == eta1(b) * eta1(a));
  }
  CHECK(psi1(matrix_unit1(kQ, 3, 1)).is_zero());
  CHECK(psi1(s1_monomial(kQ, 1, 4)) == Laurent<Q>::monomial(kQ, -3));
}

TEST_CASE("laurent division and determinants") {
  Rng rng(11);
  auto rand_laurent = [&](int terms) {
    Laurent<Q> p = Laurent<Q>::zero(kQ);
    for (int t = 0; t < terms; ++t)
      p.add_term(rng.range(-4, 4), rand_scalar(kQ, rng));
    return p;
  };
  for (int t = 0; t < 100; ++t) {
    Laurent<Q> a = rand_laurent(3);
    Laurent<Q> d = rand_laurent(2);
    if (d.is_zero()) continue;
    auto [q, r] = a.divmod(d);
    CHECK(q * d + r == a);
    if (!r.is_zero())
      CHECK(r.topdeg() - r.botdeg() < d.topdeg() - d.botdeg());
  }
  LaurentMatrix<Q> m(kQ, 2);
  m.at(0, 0) = Laurent<Q>::monomial(kQ, 1);       // x
  m.at(0, 1) = Laurent<Q>::one(kQ);
  m.at(1, 1) = Laurent<Q>::monomial(kQ, -1);      // x^-1
  CHECK(laurent_det(m) == Laurent<Q>::one(kQ));
  LaurentMatrix<Q> s(kQ, 2);
  s.at(0, 0) = Laurent<Q>::one(kQ);
  s.at(0, 1) = Laurent<Q>::one(kQ);
  s.at(1, 0) = Laurent<Q>::one(kQ);
  s.at(1, 1) = Laurent<Q>::one(kQ);
  CHECK(laurent_det(s).is_zero());
  CHECK_THROWS_AS((Laurent<Q>::monomial(kQ, 1) + Laurent<Q>::one(kQ))
                      .unit_inverse(),
                  DomainError);
}

TEST_CASE("two-variable embeddings commute and blocks round-trip") {
  E2 a = embed1(1, s1_monomial(kQ, 2, 1));
  E2 b = embed1(2, s1_monomial(kQ, 0, 3));
  CHECK(a * b == b * a);
  CHECK(a * b == tensor12(s1_monomial(kQ, 2, 1), s1_monomial(kQ, 0, 3)));

  Rng rng(5);
  for (int factor : {1, 2})
    for (int t = 0; t < 20; ++t) {
      BlockOverS1<Q> blk = rand_block(kQ, rng, factor, 2, 2, 2);
      E2 e = from_block(blk);
      BlockOverS1<Q> back = to_block(factor, e);
      CHECK(from_block(back) == e);
    }
  CHECK(thrown([&] { to_block(1, s2_x(kQ, 1)); }) ==
        Err::NotInScalarPlusIdeal);
}

TEST_CASE("block transport is multiplicative") {
  Rng rng(17);
  for (int factor : {1, 2})
    for (int t = 0; t < 15; ++t) {
      BlockOverS1<Q> a = rand_block(kQ, rng, factor, 2, 2, 2);
      BlockOverS1<Q> b = rand_block(kQ, rng, factor, 2, 2, 2);
      CHECK(from_block(block_mul(a, b)) == from_block(a) * from_block(b));
    }
}

TEST_CASE("ideal membership") {
  E2 f2 = matrix_unit2(kQ, {1, 0}, {0, 2});
  CHECK(membership(f2, Ideal2::F2));
  CHECK(membership(f2, Ideal2::P1));
  CHECK(membership(f2, Ideal2::P2));
  E2 p1 = matrix_unit_f(kQ, 1, 0, 1) * s2_x(kQ, 2);
  CHECK(membership(p1, Ideal2::P1));
  CHECK_FALSE(membership(p1, Ideal2::P2));
  CHECK(membership(p1, Ideal2::A2));
  CHECK_FALSE(membership(s2_x(kQ, 1), Ideal2::A2));
}

TEST_CASE("truncation oracle on pinned operators") {
  OracleOptions opt;
  OracleOutcome o = oracle_index1(s1_x(kQ), opt);
  CHECK(o.index == -1);
  CHECK(o.ker == 0);
  CHECK(o.def == 1);
  o = oracle_index1(s1_y(kQ), opt);
  CHECK(o.index == 1);
  CHECK(o.ker == 1);
  CHECK(o.def == 0);
  o = oracle_index1(s1_x(kQ) * s1_y(kQ), opt);  // 1 - E_00
  CHECK(o.index == 0);
  CHECK(o.ker == 1);
  CHECK(o.def == 1);
  CHECK(thrown([&] { oracle_index1(matrix_unit1(kQ, 0, 0), opt); }) ==
        Err::NoStabilization);
  CHECK(thrown([&] { oracle_index1(E1::zero(kQ), opt); }) ==
        Err::NotFredholm);
}

TEST_CASE("corrections repair pinned operators") {
  OracleOptions opt;
  E1 xy = s1_x(kQ) * s1_y(kQ);
  E1 corr = make_correction1(xy, CorrectionGoal::Iso, opt);
  CHECK(corr == matrix_unit1(kQ, 0, 0));
  CHECK(make_correction1(s1_x(kQ), CorrectionGoal::Injective, opt)
            .is_zero());
  CHECK(make_correction1(s1_y(kQ), CorrectionGoal::Surjective, opt)
            .is_zero());
  E1 fixed = xy + corr;
  OracleOutcome after = oracle_index1(fixed, opt);
  CHECK(after.ker == 0);
  CHECK(after.def == 0);
}

TEST_CASE("correction goals reject impossible indices") {
  OracleOptions opt;
  CHECK(thrown([&] {
          make_correction1(s1_x(kQ), CorrectionGoal::Iso, opt);
        }) == Err::IndexNotZero);
  CHECK(thrown([&] {
          make_correction1(s1_y(kQ), CorrectionGoal::Injective, opt);
        }) == Err::PreconditionViolated);
  CHECK(thrown([&] {
          make_correction1(s1_x(kQ), CorrectionGoal::Surjective, opt);
        }) == Err::PreconditionViolated);
}

TEST_CASE("symbolic index on pinned elements") {
  CHECK(index1(s1_x(kQ, 3)).value == -3);
  CHECK(index1(s1_y(kQ, 2)).value == 2);
  CHECK(index1(s1_one(kQ) + s1_x(kQ)).value == -1);
  CHECK(thrown([&] { index1(matrix_unit1(kQ, 0, 0)); }) == Err::NotFredholm);
  BlockOverS1<Q> zero_c(kQ, 1, 1);
  zero_c.at(0, 0) = s1_x(kQ);
  CHECK(thrown([&] { index_block(zero_c); }) == Err::NotFredholm);
}

TEST_CASE("part split against ideal membership") {
  Rng rng(23);
  for (int t = 0; t < 20; ++t) {
    E2 u = rand_unit_a2(kQ, rng, -1, 1, 3);
    auto [a1, a2] = split_parts(u);
    CHECK(membership(a1, Ideal2::P1));
    CHECK(membership(a2, Ideal2::P2));
    CHECK(s2_one(kQ) + a1 + a2 == u);
  }
  CHECK(thrown([&] { split_parts(s2_x(kQ, 1)); }) == Err::NotInOnePlusA2);
}

TEST_CASE("finite-block units: determinant, inverse, filtration") {
  E2 one = s2_one(kQ);
  E2 u = one + matrix_unit2(kQ, {0, 0}, {0, 0}).scaled(kQ.from_long(2));
  CHECK(kQ.eq(det_block(u), kQ.from_long(3)));
  E2 ui = invert_1F2(u);
  CHECK(u * ui == one);
  CHECK(ui * u == one);
  CHECK(thrown([&] { invert_1F2(one - matrix_unit2(kQ, {0, 0}, {0, 0})); }) ==
        Err::NotUnit);

  Rng rng(29);
  for (int t = 0; t < 20; ++t) {
    E2 v = rand_unit_1f2(kQ, rng, 2, 3);
    E2 vi = invert_1F2(v);
    CHECK(v * vi == one);
    std::vector<Window> ws;
    for (unsigned m = 2; m <= 8; ++m) ws.push_back(Window::cube(m));
    CHECK(kQ.eq(det_filtration(v, ws), det_block(v)));
  }

  // Windows that never contain the support must not fake a stabilized
  // determinant off the identity restriction.
  E2 far = one + matrix_unit2(kQ, {5, 5}, {5, 5});
  std::vector<Window> small{Window::cube(1), Window::cube(2),
                            Window::cube(3)};
  CHECK(thrown([&] { det_filtration(far, small); }) == Err::NoStabilization);
  std::vector<Window> big{Window::cube(5), Window::cube(6), Window::cube(7)};
  CHECK(kQ.eq(det_filtration(far, big), kQ.from_long(2)));
}

TEST_CASE("group letters serialize and re-parse") {
  Rng rng(31);
  GroupWord<Q> w;
  w.push_back(make_theta_pow(kQ, -2));
  w.push_back(make_mu_u(kQ, 1, kQ.from_ratio(3, 2)));
  GroupWord<Q> elems = rand_elementary_word(kQ, rng, 2, 3, 2, 2);
  w.insert(w.end(), elems.begin(), elems.end());
  w.push_back(make_mu_uprime(kQ, kQ.from_long(5)));
  w.push_back(make_block_f2(rand_unit_1f2(kQ, rng, 1, 2)));
  std::string text = serialize_word(kQ, w);
  GroupWord<Q> back = parse_word(kQ, text);
  CHECK(multiply_out(kQ, back) == multiply_out(kQ, w));
  // Letter-by-letter inverses cancel.
  for (const auto& l : w) {
    E2 p = letter_element(kQ, l) * letter_element(kQ, letter_inverse(kQ, l));
    CHECK(p == s2_one(kQ));
  }
  E2 all = multiply_out(kQ, w) * multiply_out(kQ, invert_word(kQ, w));
  CHECK(all == s2_one(kQ));
}

TEST_CASE("shift element: inverses, indices, action") {
  E2 one = s2_one(kQ);
  CHECK(theta(kQ) * theta_inverse(kQ) == one);
  CHECK(theta_inverse(kQ) * theta(kQ) == one);
  CHECK(ind_component(1, theta(kQ)) == -1);
  CHECK(ind_component(2, theta(kQ)) == 1);
  CHECK(theta_pow(kQ, 3) == theta(kQ) * theta(kQ) * theta(kQ));
  CHECK(theta_pow(kQ, -2) == theta_inverse(kQ) * theta_inverse(kQ));
  std::map<std::pair<unsigned, unsigned>, Q::Elem> img =
      act2(theta(kQ), {0, 2});
  REQUIRE(img.size() == 1);
  CHECK(img.begin()->first == std::pair<unsigned, unsigned>{0, 3});
}

TEST_CASE("laurent matrix factorization round-trips") {
  // diag(x, x^-1): determinant 1, pure Whitehead word.
  LaurentMatrix<Q> d(kQ, 2);
  d.at(0, 0) = Laurent<Q>::monomial(kQ, 1);
  d.at(1, 1) = Laurent<Q>::monomial(kQ, -1);
  GLFactorization<Q> g = factor_gl_laurent(d);
  CHECK(kQ.is_one(g.lambda));
  CHECK(g.power == 0);
  CHECK(g.word.size() == 4);
  LaurentMatrix<Q> re = gl_word_matrix(kQ, 2, g.word);
  CHECK(re == d);

  Rng rng(37);
  for (int t = 0; t < 25; ++t) {
    std::size_t n = rng.urange(1, 3);
    LaurentMatrix<Q> m = LaurentMatrix<Q>::identity(kQ, n);
    // A product of random transvections and a monomial head stays a unit.
    long head = rng.range(-2, 2);
    m.at(0, 0) = Laurent<Q>::monomial(kQ, head, rand_scalar(kQ, rng, true));
    for (int s = 0; s < 6; ++s) {
      std::size_t r = rng.urange(0, n - 1), c = rng.urange(0, n - 1);
      if (r == c) continue;
      GLLetter<Q> l{r, c, Laurent<Q>::monomial(kQ, rng.range(-2, 2),
                                               rand_scalar(kQ, rng))};
      m = m * gl_letter_matrix(kQ, n, l);
    }
    GLFactorization<Q> gf = factor_gl_laurent(m);
    LaurentMatrix<Q> mu = LaurentMatrix<Q>::identity(kQ, n);
    mu.at(0, 0) = Laurent<Q>::monomial(kQ, gf.power, gf.lambda);
    CHECK(mu * gl_word_matrix(kQ, n, gf.word) == m);
  }
  LaurentMatrix<Q> sing(kQ, 1);
  sing.at(0, 0) = Laurent<Q>::one(kQ) + Laurent<Q>::monomial(kQ, 1);
  CHECK(thrown([&] { factor_gl_laurent(sing); }) == Err::NotInvertibleOverL);
}

TEST_CASE("symbol determinant scalar with certificates") {
  E2 one = s2_one(kQ);
  E2 u = one + matrix_unit_f(kQ, 1, 0, 0).scaled(kQ.from_long(4));  // mu(5)
  CHECK(kQ.eq(detbar_unit(1, u), kQ.from_long(5)));
  E2 shift = one + matrix_unit_f(kQ, 1, 0, 0) * (s2_x(kQ, 2) - one);
  try {
    detbar_unit(1, shift);
    CHECK(false);
  } catch (const DomainError& e) {
    CHECK(e.code() == Err::NonzeroDegree);
    CHECK(e.aux() == 1);  // symbol degree 1 <=> index -1
  }
  CHECK(thrown([&] { detbar_unit(1, u.scaled(kQ.from_long(2))); }) ==
        Err::PreconditionViolated);
}

TEST_CASE("one-sided block units factor and re-multiply") {
  E2 one = s2_one(kQ);
  Rng rng(41);
  for (int factor : {1, 2})
    for (int t = 0; t < 10; ++t) {
      GroupWord<Q> w{make_mu_u(kQ, factor, rand_scalar(kQ, rng, true))};
      GroupWord<Q> tail = rand_elementary_word(kQ, rng, factor, 3, 2, 2);
      w.insert(w.end(), tail.begin(), tail.end());
      E2 u = multiply_out(kQ, w);
      UnitFactorization1P<Q> c = factor_unit_1p(factor, u);
      E2 mu = one + matrix_unit_f(kQ, factor, 0, 0)
                        .scaled(kQ.sub(c.lambda, kQ.one()));
      CHECK(mu * multiply_out(kQ, c.word) == u);
      // Expanded residual: every letter elementary, same product.
      UnitFactorization1P<Q> cx = factor_unit_1p(factor, u, false);
      for (const auto& l : cx.word)
        CHECK(std::holds_alternative<LetterElementary<Q>>(l));
      CHECK(mu * multiply_out(kQ, cx.word) == u);
    }
  E2 not_unit = one + matrix_unit_f(kQ, 1, 0, 0) * (s2_x(kQ, 2) - one);
  try {
    factor_unit_1p(1, not_unit);
    CHECK(false);
  } catch (const DomainError& e) {
    CHECK(e.code() == Err::NotUnit);
    CHECK(e.aux() == -1);
  }
  CHECK(thrown([&] { factor_unit_1p(1, s2_x(kQ, 1)); }) ==
        Err::NotInOnePlusP);
}

TEST_CASE("scalar head telescope and finite-block expansion") {
  for (int j : {1, 2}) {
    CHECK(multiply_out(kQ, muprime_expansion(kQ, kQ.from_long(2), j)) ==
          muprime(kQ, kQ.from_long(2)));
    CHECK(muprime_expansion(kQ, kQ.one(), j).empty());
    CHECK(thrown([&] { muprime_expansion(kQ, kQ.zero(), j); }) ==
          Err::LambdaMinusOne);
  }
  Rng rng(43);
  for (int j : {1, 2})
    for (int t = 0; t < 10; ++t) {
      E2 e = rand_unit_1f2(kQ, rng, 2, 3);
      GroupWord<Q> w = factor_1F2_into_elementaries(e, j);
      for (const auto& l : w) {
        const auto* el = std::get_if<LetterElementary<Q>>(&l);
        REQUIRE(el != nullptr);
        CHECK(el->factor == j);
      }
      CHECK(multiply_out(kQ, w) == e);
    }
}

TEST_CASE("global splits on pinned units") {
  E2 one = s2_one(kQ);
  ThetaSplit<Q> ts = split_theta(theta(kQ));
  CHECK(ts.n == 1);
  CHECK(ts.k == one);

  E2 u = one + matrix_unit2(kQ, {0, 0}, {0, 0}).scaled(kQ.from_long(2));
  BoxtimesSplit<Q> bs = split_boxtimes(u);
  CHECK(bs.u1 * bs.u2 == u);
  CHECK(membership(bs.u1 - one, Ideal2::P1));
  CHECK(membership(bs.u2 - one, Ideal2::P2));

  FactorizationCertificate<Q> cert =
      full_factor_unit(theta_pow(kQ, 2).scaled(kQ.from_long(3)));
  CHECK(kQ.eq(cert.scalar, kQ.from_long(3)));
  CHECK(cert.theta_power == 2);
  CHECK(certificate_element(kQ, cert) ==
        theta_pow(kQ, 2).scaled(kQ.from_long(3)));

  CHECK(thrown([&] { full_factor_unit(s2_x(kQ, 1)); }) == Err::NotUnit);
  CHECK(thrown([&] {
          full_factor_unit(one - matrix_unit2(kQ, {0, 0}, {0, 0}));
        }) == Err::NotUnit);
}

TEST_CASE("automorphism letters act correctly") {
  Automorphism<Q> s = make_swap(kQ);
  CHECK(s.apply(s2_x(kQ, 1)) == s2_x(kQ, 2));
  CHECK(s.apply(s2_y(kQ, 2)) == s2_y(kQ, 1));
  E2 probe = parse_element(kQ, "2*x1^2*y2 + x2 - 3");
  CHECK(s.apply(s.apply(probe)) == probe);

  Automorphism<Q> t = make_torus(kQ, kQ.from_long(2), kQ.from_ratio(1, 3));
  CHECK(t.apply(s2_x(kQ, 1)) == s2_x(kQ, 1).scaled(kQ.from_long(2)));
  CHECK(t.apply(s2_y(kQ, 1)) == s2_y(kQ, 1).scaled(kQ.from_ratio(1, 2)));
  CHECK(t.apply(s2_x(kQ, 2)) == s2_x(kQ, 2).scaled(kQ.from_ratio(1, 3)));
  Automorphism<Q> tti = compose(t, t.inverse());
  CHECK(tti.apply(probe) == probe);

  Automorphism<Q> om = make_inner(theta(kQ), theta_inverse(kQ));
  CHECK(om.apply(probe) == theta(kQ) * probe * theta_inverse(kQ));
  CHECK(relation_check(om));
  CHECK(thrown([&] { make_inner(s2_x(kQ, 1), s2_y(kQ, 1)); }) ==
        Err::NotUnit);
  CHECK(thrown([&] { make_torus(kQ, kQ.zero(), kQ.one()); }) == Err::NotUnit);

  for (const auto& [name, sigma] : g2_generator_set(kQ)) {
    (void)name;
    CHECK(relation_check(sigma));
  }
}

TEST_CASE("parser round-trips and rejects junk") {
  for (const char* src : {
           "0", "1", "-1", "1/2", "x1", "x1*y1", "2*x1^2*x2*y2^3",
           "1 - x1*y1", "1/2*y2 - x1", "x1^2*x2^3*y1^4*y2^5",
       }) {
    E2 e = parse_element(kQ, src);
    CHECK(to_text(e) == src);
  }
  CHECK(parse_element(kQ, "E1(0,0)") ==
        embed1(1, matrix_unit1(kQ, 0, 0)));
  CHECK(parse_element(kQ, "E2(1,2)") ==
        embed1(2, matrix_unit1(kQ, 1, 2)));
  CHECK(parse_element(kQ, "EE(1,0;0,2)") ==
        matrix_unit2(kQ, {1, 0}, {0, 2}));
  CHECK(parse_element(kQ, "theta") == theta(kQ));
  CHECK(parse_element(kQ, "(x1+y1)^2") ==
        (s2_x(kQ, 1) + s2_y(kQ, 1)) * (s2_x(kQ, 1) + s2_y(kQ, 1)));
  CHECK(parse_element(kQ, "x1+x2*y2") ==
        s2_x(kQ, 1) + s2_x(kQ, 2) * s2_y(kQ, 2));
  try {
    parse_element(kQ, "x1 + @");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.pos() == 5);
  }
  CHECK_THROWS_AS(parse_element(kQ, "x3"), ParseError);
  CHECK_THROWS_AS(parse_element(kQ, "x1^-2"), ParseError);
  CHECK_THROWS_AS(parse_element(kQ, ""), ParseError);
  CHECK_THROWS_AS(parse_element(kQ, "x1 x2"), ParseError);
}

TEST_CASE("automorphism words parse and apply") {
  Automorphism<Q> a = parse_auto_word(kQ, "S\nT 2 1/3\n");
  E2 probe = parse_element(kQ, "x1*y2 + 3*x2");
  Automorphism<Q> s = make_swap(kQ);
  Automorphism<Q> t = make_torus(kQ, kQ.from_long(2), kQ.from_ratio(1, 3));
  CHECK(a.apply(probe) == compose(s, t).apply(probe));
  Automorphism<Q> w = parse_auto_word(kQ, "# inner by theta\nW theta\n");
  CHECK(w.apply(probe) == theta(kQ) * probe * theta_inverse(kQ));
  CHECK_THROWS_AS(parse_auto_word(kQ, "Q 1\n"), ParseError);
}

TEST_CASE("string api surface") {
  api::Config cfg;
  CHECK(api::nf(cfg, "y1*x1") == "1");
  CHECK(api::nf(cfg, "y2*x2 - 1") == "0");
  CHECK(api::act(cfg, "x1*x2", "1") == "x1*x2");
  CHECK(api::act(cfg, "y1", "x1^2") == "x1");
  CHECK(api::act(cfg, "y1", "1") == "0");
  std::string method;
  CHECK(api::index_auto(cfg, "y1^4", &method) == 4);
  CHECK(method == "scalar");
  CHECK(api::index_auto(cfg, "1 + E1(0,0)*(x2-1)", &method) == -1);
  CHECK(method == "block:1");
  CHECK(api::ind(cfg, 2, "theta") == 1);
  CHECK(api::ind(cfg, 1, "theta") == -1);
  CHECK(api::det(cfg, "1 + 2*EE(0,0;0,0)") == "3");
  CHECK(api::detbar(cfg, 1, "1 + 4*E1(0,0)") == "5");
  CHECK(api::eta(cfg, "x1^2*x2") == "y1^2*y2");
  std::string inv = api::invert(cfg, "theta");
  CHECK(api::nf(cfg, "theta*(" + inv + ")") == "1");
  api::FactorResult fr = api::factor(cfg, "3*theta^2");
  CHECK(fr.scalar == "3");
  CHECK(fr.theta_power == 2);
  CHECK(api::auto_apply(cfg, "S\n", "x1") == "x2");

  api::Config fp;
  fp.field = "fp:7";
  CHECK(api::nf(fp, "1/2") == "4");
  api::Config bad;
  bad.field = "fp:9";
  CHECK_THROWS_AS(api::nf(bad, "1"), ParseError);
}
