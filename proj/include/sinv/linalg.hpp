#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace sinv {

// Dense exact linear algebra over a field object.  Everything downstream
// (index oracles, block inverses, filtration determinants) reduces to plain
// Gaussian elimination with exact arithmetic; pivots are chosen as the first
// nonzero entry in column order so all outputs are deterministic.
template <class F>
struct Mat {
  using Elem = typename F::Elem;
  F field;
  std::size_t rows = 0, cols = 0;
  std::vector<Elem> a;

  Mat(const F& f, std::size_t r, std::size_t c)
      : field(f), rows(r), cols(c), a(r * c, f.zero()) {}
  Elem& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const Elem& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  static Mat identity(const F& f, std::size_t n) {
    Mat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
  }
};

template <class F>
Mat<F> mat_mul(const Mat<F>& a, const Mat<F>& b) {
  if (a.cols != b.rows) throw std::logic_error("mat_mul shape mismatch");
  Mat<F> r(a.field, a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (a.field.is_zero(a.at(i, k))) continue;
      for (std::size_t j = 0; j < b.cols; ++j)
        r.at(i, j) = a.field.add(r.at(i, j),
                                 a.field.mul(a.at(i, k), b.at(k, j)));
    }
  return r;
}

template <class F>
bool mat_eq(const Mat<F>& a, const Mat<F>& b) {
  if (a.rows != b.rows || a.cols != b.cols) return false;
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j)
      if (!a.field.eq(a.at(i, j), b.at(i, j))) return false;
  return true;
}

// In-place reduction to row echelon form; returns the pivot column of each
// eliminated row, in order.  Rows are swapped, pivot rows normalized to 1,
// and entries below pivots cleared; with `reduced` also the entries above.
template <class F>
std::vector<std::size_t> row_echelon(Mat<F>& m, bool reduced = false) {
  const F& f = m.field;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t pr = r;
    while (pr < m.rows && f.is_zero(m.at(pr, c))) ++pr;
    if (pr == m.rows) continue;
    if (pr != r)
      for (std::size_t j = 0; j < m.cols; ++j)
        std::swap(m.at(pr, j), m.at(r, j));
    typename F::Elem inv = f.inv(m.at(r, c));
    for (std::size_t j = c; j < m.cols; ++j)
      m.at(r, j) = f.mul(inv, m.at(r, j));
    std::size_t start = reduced ? 0 : r + 1;
    for (std::size_t i = start; i < m.rows; ++i) {
      if (i == r || f.is_zero(m.at(i, c))) continue;
      typename F::Elem factor = m.at(i, c);
      for (std::size_t j = c; j < m.cols; ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
std::size_t mat_rank(Mat<F> m) {
  return row_echelon(m).size();
}

// Kernel description from the reduced echelon form: the free columns act as
// the "pivot monomials" of the kernel, and each free column f yields the
// basis vector with 1 at f and -R[r][f] at the pivot column of row r.  The
// vectors have a 1 at their own free column and 0 at every other free
// column, which downstream correction-building relies on.
template <class F>
struct KernelInfo {
  std::vector<std::size_t> pivot_cols;              // columns with a pivot
  std::vector<std::size_t> free_cols;               // complement, in order
  std::vector<std::vector<typename F::Elem>> basis;  // one vector per free col
};

template <class F>
KernelInfo<F> kernel_info(Mat<F> m) {
  const F& f = m.field;
  KernelInfo<F> out;
  out.pivot_cols = row_echelon(m, /*reduced=*/true);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : out.pivot_cols) is_pivot[c] = true;
  for (std::size_t c = 0; c < m.cols; ++c)
    if (!is_pivot[c]) out.free_cols.push_back(c);
  for (auto fc : out.free_cols) {
    std::vector<typename F::Elem> v(m.cols, f.zero());
    v[fc] = f.one();
    for (std::size_t r = 0; r < out.pivot_cols.size(); ++r)
      v[out.pivot_cols[r]] = f.neg(m.at(r, fc));
    out.basis.push_back(std::move(v));
  }
  return out;
}

template <class F>
typename F::Elem mat_det(Mat<F> m) {
  const F& f = m.field;
  if (m.rows != m.cols) throw std::logic_error("det of non-square matrix");
  typename F::Elem det = f.one();
  std::size_t n = m.rows;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pr = c;
    while (pr < n && f.is_zero(m.at(pr, c))) ++pr;
    if (pr == n) return f.zero();
    if (pr != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(pr, j), m.at(c, j));
      det = f.neg(det);
    }
    det = f.mul(det, m.at(c, c));
    typename F::Elem inv = f.inv(m.at(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (f.is_zero(m.at(i, c))) continue;
      typename F::Elem factor = f.mul(inv, m.at(i, c));
      for (std::size_t j = c; j < n; ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(c, j)));
    }
  }
  return det;
}

// Inverse via Gauss-Jordan on [m | I]; nullopt when singular.
template <class F>
std::optional<Mat<F>> mat_inverse(const Mat<F>& m) {
  const F& f = m.field;
  if (m.rows != m.cols) throw std::logic_error("inverse of non-square matrix");
  std::size_t n = m.rows;
  Mat<F> aug(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = f.one();
  }
  auto pivots = row_echelon(aug, /*reduced=*/true);
  if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
  Mat<F> inv(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

}  // namespace sinv
