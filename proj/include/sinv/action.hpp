#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "sinv/block.hpp"
#include "sinv/errors.hpp"
#include "sinv/linalg.hpp"
#include "sinv/s2.hpp"

namespace sinv {

// The defining representation: the algebra acts on polynomials with x =
// multiply, y = shift down (y * 1 = 0).  On basis monomials
//   x^i y^j . x^alpha = x^(i + alpha - j)  when alpha >= j, else 0,
// and factor-wise in the two-variable case.

template <class F>
std::map<unsigned, typename F::Elem> act1(const Element1<F>& a,
                                          unsigned alpha) {
  const F& f = a.field();
  std::map<unsigned, typename F::Elem> out;
  for (const auto& [m, c] : a.terms()) {
    if (alpha < m.j) continue;
    unsigned target = m.i + alpha - m.j;
    auto [it, fresh] = out.try_emplace(target, c);
    if (!fresh) {
      it->second = f.add(it->second, c);
      if (f.is_zero(it->second)) out.erase(it);
    }
  }
  return out;
}

template <class F>
std::map<std::pair<unsigned, unsigned>, typename F::Elem> act2(
    const Element2<F>& a, std::pair<unsigned, unsigned> alpha) {
  const F& f = a.field();
  std::map<std::pair<unsigned, unsigned>, typename F::Elem> out;
  for (const auto& [m, c] : a.terms()) {
    if (alpha.first < m.b1 || alpha.second < m.b2) continue;
    std::pair<unsigned, unsigned> t{m.a1 + alpha.first - m.b1,
                                    m.a2 + alpha.second - m.b2};
    auto [it, fresh] = out.try_emplace(t, c);
    if (!fresh) {
      it->second = f.add(it->second, c);
      if (f.is_zero(it->second)) out.erase(it);
    }
  }
  return out;
}

// Truncation windows for the action.  Degree windows live in the one-variable
// polynomial space (monomials 0..M); cube windows in the two-variable space
// (both exponents <= m), enumerated degree-first so "lowest order" is
// meaningful for correction-building.
struct Window {
  enum class Kind { Degree, Cube };
  Kind kind = Kind::Degree;
  unsigned bound = 0;

  static Window degree(unsigned m) { return {Kind::Degree, m}; }
  static Window cube(unsigned m) { return {Kind::Cube, m}; }
  std::size_t dim() const {
    return kind == Kind::Degree
               ? bound + std::size_t(1)
               : (bound + std::size_t(1)) * (bound + std::size_t(1));
  }
};

inline std::vector<unsigned> window_basis1(const Window& w) {
  std::vector<unsigned> out;
  for (unsigned k = 0; k <= w.bound; ++k) out.push_back(k);
  return out;
}

inline std::vector<std::pair<unsigned, unsigned>> window_basis2(
    const Window& w) {
  std::vector<std::pair<unsigned, unsigned>> out;
  unsigned m = w.bound;
  for (unsigned total = 0; total <= 2 * m; ++total)
    for (unsigned a1 = 0; a1 <= total && a1 <= m; ++a1) {
      unsigned a2 = total - a1;
      if (a2 <= m) out.emplace_back(a1, a2);
    }
  return out;
}

// Exact matrix of the action between two explicit windows.  The codomain
// must really contain the image of the domain; escaping monomials are a
// caller error (the homomorphism property only holds for aligned windows).
template <class F>
Mat<F> operator_matrix1(const Element1<F>& a, const Window& dom,
                        const Window& cod) {
  const F& f = a.field();
  Mat<F> m(f, cod.dim(), dom.dim());
  for (unsigned alpha = 0; alpha <= dom.bound; ++alpha)
    for (const auto& [t, c] : act1(a, alpha)) {
      if (t > cod.bound) throw std::logic_error("image escapes codomain window");
      m.at(t, alpha) = f.add(m.at(t, alpha), c);
    }
  return m;
}

template <class F>
Mat<F> operator_matrix2(const Element2<F>& a, const Window& dom,
                        const Window& cod) {
  const F& f = a.field();
  auto dbasis = window_basis2(dom);
  auto cbasis = window_basis2(cod);
  std::map<std::pair<unsigned, unsigned>, std::size_t> cindex;
  for (std::size_t i = 0; i < cbasis.size(); ++i) cindex[cbasis[i]] = i;
  Mat<F> m(f, cbasis.size(), dbasis.size());
  for (std::size_t col = 0; col < dbasis.size(); ++col)
    for (const auto& [t, c] : act2(a, dbasis[col])) {
      auto it = cindex.find(t);
      if (it == cindex.end())
        throw std::logic_error("image escapes codomain window");
      m.at(it->second, col) = f.add(m.at(it->second, col), c);
    }
  return m;
}

// ---------------------------------------------------------------------------
// Numeric Fredholm-index oracle.
//
// Kernel side (both cases): restrict the domain to a finite window but keep
// every image monomial as a codomain row; windowed kernel vectors are honest
// kernel vectors, so the nullity converges monotonically to dim ker once the
// window clears the y-degrees of a.
//
// One-variable cokernel side: the codomain is the downward-closed span
// 0..maxdeg of the actual images and the defect dim U - rank counts the
// missing monomials.  A single element shifts every large domain degree by
// the same band, so the staircase top is uniform and the defect stabilizes
// to the cokernel dimension.
//
// Two-variable cokernel side: per-row staircase tops are not trustworthy --
// the scalar tail and the block entries shift different columns by different
// amounts, so a row's top may be fed by out-of-window domain monomials and
// the staircase defect overshoots.  Instead use transposition: the action
// matrix of eta2(a) is exactly the transpose of the action matrix of a, so
// linear functionals vanishing on the image of a are the formal-series
// solutions v of eta2(a) . v = 0, and dim coker a equals the dimension of
// that solution space.  Truncation stays honest by keeping only equations
// whose whole dependency cone sits inside the window, solving exactly, and
// projecting the solutions to the half-size cube so coordinates that are
// free merely because their equations were cut off get discarded.
//
// Either way both counts must agree over three consecutive window
// escalations to be accepted.
// ---------------------------------------------------------------------------

struct OracleOptions {
  unsigned start1 = 6;  // first degree window (one-variable case)
  unsigned start2 = 2;  // first cube window (block case)
  unsigned step = 4;
  unsigned consec = 3;
  unsigned cap = 48;
};

struct WindowCounts {
  std::size_t ker = 0, def = 0;
  bool operator==(const WindowCounts&) const = default;
};

template <class F>
WindowCounts window_counts1(const Element1<F>& a, unsigned M) {
  const F& f = a.field();
  std::vector<std::map<unsigned, typename F::Elem>> images;
  bool any = false;
  unsigned maxdeg = 0;
  for (unsigned alpha = 0; alpha <= M; ++alpha) {
    images.push_back(act1(a, alpha));
    for (const auto& [t, c] : images.back()) {
      (void)c;
      if (!any || t > maxdeg) maxdeg = t;
      any = true;
    }
  }
  std::size_t udim = any ? maxdeg + std::size_t(1) : 0;
  Mat<F> m(f, udim, M + std::size_t(1));
  for (unsigned alpha = 0; alpha <= M; ++alpha)
    for (const auto& [t, c] : images[alpha]) m.at(t, alpha) = c;
  std::size_t r = mat_rank(m);
  return {M + 1 - r, udim - r};
}

namespace detail {
// Exact matrix of a on a cube window: columns in window_basis2 order, one
// row per image monomial (nothing truncated away, so the nullity is the
// honest windowed kernel dimension).
template <class F>
struct ActionWindow2 {
  std::vector<std::pair<unsigned, unsigned>> basis;
  Mat<F> mat;
};

template <class F>
ActionWindow2<F> action_window2(const Element2<F>& a, unsigned m) {
  const F& f = a.field();
  auto basis = window_basis2(Window::cube(m));
  std::vector<std::map<std::pair<unsigned, unsigned>, typename F::Elem>>
      images;
  images.reserve(basis.size());
  std::map<std::pair<unsigned, unsigned>, std::size_t> rowindex;
  for (auto alpha : basis) {
    images.push_back(act2(a, alpha));
    for (const auto& [t, c] : images.back()) {
      (void)c;
      rowindex.try_emplace(t, rowindex.size());
    }
  }
  Mat<F> mat(f, rowindex.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col)
    for (const auto& [t, c] : images[col]) mat.at(rowindex.at(t), col) = c;
  return {std::move(basis), std::move(mat)};
}

// Truncated formal-series solutions of w . v = 0 on a cube window.  Rows are
// restricted to "complete" output monomials t (every domain monomial w can
// map onto t lies inside the window, guaranteed by t_i + max-y-degree_i <=
// m), so each kept equation is exact.  The nullspace then still contains
// vectors that are free only because their equations fell outside the
// window; projecting onto the half cube discards those, and the projected
// dimension is what stabilization gets to certify.  With w = eta2(a) the
// solutions are functionals vanishing on im a, and the pivot monomials of
// the projected solution space give cokernel representatives paired to an
// invertible functional matrix.
struct SeriesKernelData {
  std::size_t dim = 0;
  std::vector<std::pair<unsigned, unsigned>> mons;
};

template <class F>
SeriesKernelData series_kernel2(const Element2<F>& w, unsigned m,
                                bool want_mons) {
  const F& f = w.field();
  unsigned by1 = 0, by2 = 0;
  for (const auto& [mon, c] : w.terms()) {
    (void)c;
    if (mon.b1 > by1) by1 = mon.b1;
    if (mon.b2 > by2) by2 = mon.b2;
  }
  auto basis = window_basis2(Window::cube(m));
  std::vector<std::map<std::pair<unsigned, unsigned>, typename F::Elem>>
      images;
  images.reserve(basis.size());
  std::map<std::pair<unsigned, unsigned>, std::size_t> rowindex;
  auto complete = [&](std::pair<unsigned, unsigned> t) {
    return t.first + by1 <= m && t.second + by2 <= m;
  };
  for (auto alpha : basis) {
    images.push_back(act2(w, alpha));
    for (const auto& [t, c] : images.back()) {
      (void)c;
      if (complete(t)) rowindex.try_emplace(t, rowindex.size());
    }
  }
  Mat<F> tm(f, rowindex.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col)
    for (const auto& [t, c] : images[col]) {
      auto it = rowindex.find(t);
      if (it != rowindex.end()) tm.at(it->second, col) = c;
    }
  KernelInfo<F> ki = kernel_info(std::move(tm));
  auto hbasis = window_basis2(Window::cube(m / 2));
  std::map<std::pair<unsigned, unsigned>, std::size_t> colpos;
  for (std::size_t i = 0; i < basis.size(); ++i) colpos[basis[i]] = i;
  Mat<F> proj(f, hbasis.size(), ki.basis.size());
  for (std::size_t k = 0; k < ki.basis.size(); ++k)
    for (std::size_t i = 0; i < hbasis.size(); ++i)
      proj.at(i, k) = ki.basis[k][colpos.at(hbasis[i])];
  SeriesKernelData out;
  if (!want_mons) {
    out.dim = mat_rank(std::move(proj));
    return out;
  }
  // Row pivots of proj = column pivots of its transpose.
  Mat<F> pt(f, proj.cols, proj.rows);
  for (std::size_t i = 0; i < proj.rows; ++i)
    for (std::size_t j = 0; j < proj.cols; ++j) pt.at(j, i) = proj.at(i, j);
  auto piv = row_echelon(pt);
  out.dim = piv.size();
  for (auto r : piv) out.mons.push_back(hbasis[r]);
  return out;
}
}  // namespace detail

// The `factor` names the block reading the caller has in mind; the counts
// themselves are properties of the operator on two-variable polynomials and
// do not depend on it.
template <class F>
WindowCounts window_counts2(const Element2<F>& a, int factor, unsigned m) {
  (void)factor;
  detail::ActionWindow2<F> aw = detail::action_window2(a, m);
  std::size_t ker = aw.basis.size() - mat_rank(std::move(aw.mat));
  std::size_t def = detail::series_kernel2(eta2(a), m, false).dim;
  return {ker, def};
}

struct OracleOutcome {
  long index = 0;
  std::size_t ker = 0, def = 0;
  unsigned window = 0;  // the window where stabilization was declared
};

namespace detail {
template <class CountFn>
OracleOutcome stabilize(CountFn&& counts, unsigned start,
                        const OracleOptions& opt) {
  std::vector<WindowCounts> history;
  for (unsigned w = start; w <= opt.cap; w += opt.step) {
    history.push_back(counts(w));
    if (history.size() >= opt.consec) {
      bool stable = true;
      for (std::size_t k = history.size() - opt.consec;
           k + 1 < history.size(); ++k)
        if (!(history[k] == history[k + 1])) stable = false;
      if (stable) {
        const auto& c = history.back();
        return {static_cast<long>(c.ker) - static_cast<long>(c.def), c.ker,
                c.def, w};
      }
    }
  }
  throw DomainError(Err::NoStabilization,
                    "kernel/cokernel counts kept changing up to window cap " +
                        std::to_string(opt.cap));
}
}  // namespace detail

template <class F>
OracleOutcome oracle_index1(const Element1<F>& a, OracleOptions opt = {}) {
  if (a.is_zero()) throw DomainError(Err::NotFredholm, "zero element");
  return detail::stabilize(
      [&](unsigned w) { return window_counts1(a, w); }, opt.start1, opt);
}

template <class F>
OracleOutcome oracle_index2(const Element2<F>& a, int factor,
                            OracleOptions opt = {}) {
  if (a.is_zero()) throw DomainError(Err::NotFredholm, "zero element");
  return detail::stabilize(
      [&](unsigned w) { return window_counts2(a, factor, w); }, opt.start2,
      opt);
}

// ---------------------------------------------------------------------------
// Finite-rank corrections.  At the stabilized window, pick the kernel's free
// monomials gamma_t (they carry coefficient 1 in the reduced kernel basis and
// 0 in each other's slots) and the first missing image monomials w_t, and add
// f = sum E_(w_t, gamma_t).  Then a + f restores injectivity/surjectivity
// exactly; the oracle re-run certifies it.
// ---------------------------------------------------------------------------

enum class CorrectionGoal { Iso, Injective, Surjective };

namespace detail {
// Kernel free columns and cokernel representative rows at one window.
template <class F, class MatFn>
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> pairing_data(
    const F& f, MatFn&& build) {
  Mat<F> m = build();
  KernelInfo<F> ker = kernel_info(m);
  // Row space of the transposed matrix = column space; its pivot rows are
  // the image's leading monomials, the rest represent the cokernel.
  Mat<F> t(f, m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  auto impivots = row_echelon(t);
  std::vector<bool> covered(m.rows, false);
  for (auto p : impivots) covered[p] = true;
  std::vector<std::size_t> coker;
  for (std::size_t r = 0; r < m.rows; ++r)
    if (!covered[r]) coker.push_back(r);
  return {ker.free_cols, coker};
}

inline std::pair<std::size_t, std::size_t> pair_count(std::size_t ker,
                                                      std::size_t def,
                                                      CorrectionGoal goal) {
  switch (goal) {
    case CorrectionGoal::Iso:
      if (ker != def)
        throw DomainError(Err::IndexNotZero,
                          "kernel and cokernel dimensions differ");
      return {ker, def};
    case CorrectionGoal::Injective:
      if (ker > def)
        throw DomainError(Err::PreconditionViolated,
                          "kernel larger than cokernel");
      return {ker, ker};
    case CorrectionGoal::Surjective:
      if (def > ker)
        throw DomainError(Err::PreconditionViolated,
                          "cokernel larger than kernel");
      return {def, def};
  }
  return {0, 0};
}
}  // namespace detail

// One-variable correction: f is a span-of-E_ij element.
template <class F>
Element1<F> make_correction1(const Element1<F>& a, CorrectionGoal goal,
                             OracleOptions opt = {}) {
  const F& f = a.field();
  OracleOutcome oc = oracle_index1(a, opt);
  auto [nk, nd] = detail::pair_count(oc.ker, oc.def, goal);
  (void)nd;
  unsigned M = oc.window;
  // Codomain monomials in the staircase order used by window_counts1.
  auto [kercols, coker] = detail::pairing_data(f, [&] {
    const unsigned cap = M;
    std::vector<std::map<unsigned, typename F::Elem>> images;
    bool any = false;
    unsigned maxdeg = 0;
    for (unsigned alpha = 0; alpha <= cap; ++alpha) {
      images.push_back(act1(a, alpha));
      for (const auto& [t, c] : images.back()) {
        (void)c;
        if (!any || t > maxdeg) maxdeg = t;
        any = true;
      }
    }
    Mat<F> m(f, any ? maxdeg + 1 : 0, cap + std::size_t(1));
    for (unsigned alpha = 0; alpha <= cap; ++alpha)
      for (const auto& [t, c] : images[alpha]) m.at(t, alpha) = c;
    return m;
  });
  Element1<F> corr(f);
  for (std::size_t t = 0; t < nk; ++t)
    corr += matrix_unit1(f, static_cast<unsigned>(coker[t]),
                         static_cast<unsigned>(kercols[t]));
  // Certify the goal on the corrected element.
  Element1<F> fixed = a + corr;
  OracleOutcome check = oracle_index1(fixed, opt);
  bool ok = (goal == CorrectionGoal::Iso && check.ker == 0 && check.def == 0) ||
            (goal == CorrectionGoal::Injective && check.ker == 0 &&
             check.index == oc.index) ||
            (goal == CorrectionGoal::Surjective && check.def == 0 &&
             check.index == oc.index);
  if (!ok) throw std::logic_error("correction failed certification");
  return corr;
}

// Block correction: f lands in the finite-block ideal (doubly indexed
// matrix units).  Kernel free monomials come from the exact windowed action
// matrix; cokernel representatives are the pivot monomials of the projected
// series functionals, so the pairing matrix against the true cokernel is
// invertible by construction.
template <class F>
Element2<F> make_correction2(const Element2<F>& a, int factor,
                             CorrectionGoal goal, OracleOptions opt = {}) {
  const F& f = a.field();
  OracleOutcome oc = oracle_index2(a, factor, opt);
  auto [nk, nd] = detail::pair_count(oc.ker, oc.def, goal);
  (void)nd;
  unsigned m = oc.window;
  detail::ActionWindow2<F> aw = detail::action_window2(a, m);
  KernelInfo<F> ki = kernel_info(std::move(aw.mat));
  detail::SeriesKernelData series =
      detail::series_kernel2(eta2(a), m, /*want_mons=*/true);
  if (ki.free_cols.size() < nk || series.mons.size() < nk)
    throw std::logic_error("stabilized counts disagree with pairing data");
  Element2<F> corr(f);
  for (std::size_t t = 0; t < nk; ++t)
    corr += matrix_unit2(f, series.mons[t], aw.basis[ki.free_cols[t]]);
  Element2<F> fixed = a + corr;
  OracleOutcome check = oracle_index2(fixed, factor, opt);
  bool ok = (goal == CorrectionGoal::Iso && check.ker == 0 && check.def == 0) ||
            (goal == CorrectionGoal::Injective && check.ker == 0 &&
             check.index == oc.index) ||
            (goal == CorrectionGoal::Surjective && check.def == 0 &&
             check.index == oc.index);
  if (!ok) throw std::logic_error("correction failed certification");
  return corr;
}

}  // namespace sinv
