#pragma once

// Exact integer linear algebra on dense Eigen matrices. Everything here is
// templated on the scalar so the same code serves int64 test fixtures and
// BigInt production data; the scalar only needs ring operations plus
// truncating division.

#include <algorithm>
#include <utility>

#include "rtoric/types.hpp"

namespace rtoric::lattice {

template <typename Scalar> Scalar abs_value(Scalar const &x) { return x < 0 ? Scalar(-x) : x; }

/// floor(num / den) for den != 0.
template <typename Scalar> Scalar floor_div(Scalar const &num, Scalar const &den)
{
  Scalar q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) { q -= 1; }
  return q;
}

/// Rank over the rationals, by fraction-free (Bareiss) elimination.
template <typename Scalar> Index rank(Matrix<Scalar> m)
{
  Index const rows = m.rows();
  Index const cols = m.cols();
  Index r = 0;
  Scalar prev = 1;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index pivot = r;
    while (pivot < rows && m(pivot, c) == 0) { ++pivot; }
    if (pivot == rows) { continue; }
    m.row(r).swap(m.row(pivot));
    for (Index i = r + 1; i < rows; ++i) {
      for (Index j = c + 1; j < cols; ++j) {
        m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

/// Determinant of a square matrix (Bareiss; exact for integer scalars).
template <typename Scalar> Scalar determinant(Matrix<Scalar> m)
{
  Index const n = m.rows();
  if (m.cols() != n) { throw std::invalid_argument("determinant of a non-square matrix"); }
  if (n == 0) { return Scalar(1); }
  Scalar sign = 1;
  Scalar prev = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Index pivot = k + 1;
      while (pivot < n && m(pivot, k) == 0) { ++pivot; }
      if (pivot == n) { return Scalar(0); }
      m.row(k).swap(m.row(pivot));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Unimodular row reduction on the leading `ncols` columns: afterwards those
/// columns are in row echelon form with positive pivots, and rows at or below
/// the returned rank are zero there. Entries above each pivot are reduced into
/// [0, pivot). Trailing columns ride along.
template <typename Scalar> Index echelonize(Matrix<Scalar> &m, Index ncols)
{
  Index const rows = m.rows();
  Index r = 0;
  for (Index c = 0; c < ncols && r < rows; ++c) {
    for (;;) {
      // Smallest nonzero entry in column c at or below r becomes the pivot.
      Index best = -1;
      for (Index i = r; i < rows; ++i) {
        if (m(i, c) != 0 && (best < 0 || abs_value<Scalar>(m(i, c)) < abs_value<Scalar>(m(best, c)))) { best = i; }
      }
      if (best < 0) { break; }
      m.row(r).swap(m.row(best));
      bool done = true;
      for (Index i = r + 1; i < rows; ++i) {
        if (m(i, c) == 0) { continue; }
        Scalar const q = m(i, c) / m(r, c);
        m.row(i) -= q * m.row(r);
        if (m(i, c) != 0) { done = false; }
      }
      if (done) { break; }
    }
    if (m(r, c) == 0) { continue; }
    if (m(r, c) < 0) { m.row(r) = -m.row(r); }
    for (Index i = 0; i < r; ++i) {
      Scalar const q = floor_div<Scalar>(m(i, c), m(r, c));
      if (q != 0) { m.row(i) -= q * m.row(r); }
    }
    ++r;
  }
  return r;
}

/// Row-style Hermite normal form of the lattice spanned by the rows; zero rows
/// are dropped. Two matrices span the same lattice iff their forms are equal.
template <typename Scalar> Matrix<Scalar> hermite_normal_form(Matrix<Scalar> m)
{
  Index const r = echelonize(m, m.cols());
  return m.topRows(r);
}

template <typename Scalar> bool same_row_lattice(Matrix<Scalar> const &lhs, Matrix<Scalar> const &rhs)
{
  if (lhs.cols() != rhs.cols()) { return false; }
  Matrix<Scalar> const a = hermite_normal_form(lhs);
  Matrix<Scalar> const b = hermite_normal_form(rhs);
  return a.rows() == b.rows() && a == b;
}

/// Greedy pairwise size reduction: b_i -= round(<b_i,b_j>/<b_j,b_j>) b_j while
/// that strictly shortens b_i. Keeps the lattice, shrinks entries.
template <typename Scalar> void size_reduce(Matrix<Scalar> &basis)
{
  Index const k = basis.rows();
  bool changed = true;
  while (changed) {
    changed = false;
    for (Index i = 0; i < k; ++i) {
      for (Index j = 0; j < k; ++j) {
        if (i == j) { continue; }
        Scalar const nj = basis.row(j).squaredNorm();
        if (nj == 0) { continue; }
        Scalar const dot = basis.row(i).dot(basis.row(j));
        Scalar const q = floor_div<Scalar>(Scalar(2 * dot + nj), Scalar(2 * nj));
        if (q == 0) { continue; }
        RowVector<Scalar> const candidate = basis.row(i) - q * basis.row(j);
        if (candidate.squaredNorm() < basis.row(i).squaredNorm()) {
          basis.row(i) = candidate;
          changed = true;
        }
      }
    }
  }
}

/// Rows form a basis of { u in Z^n : a u = 0 }. The quotient Z^n / span is
/// torsion free by construction (the basis comes from a unimodular transform).
template <typename Scalar> Matrix<Scalar> integer_kernel(Matrix<Scalar> const &a)
{
  Index const k = a.rows();
  Index const n = a.cols();
  Matrix<Scalar> work(n, k + n);
  work.leftCols(k) = a.transpose();
  work.rightCols(n) = Matrix<Scalar>::Identity(n, n);
  Index const r = echelonize(work, k);
  Matrix<Scalar> kernel = work.bottomRightCorner(n - r, n);
  size_reduce(kernel);
  return kernel;
}

/// Determinants of the square submatrices obtained by deleting one column of an
/// r x (r+1) matrix, in column order.
template <typename Scalar> Vector<Scalar> maximal_minors(Matrix<Scalar> const &m)
{
  Index const r = m.rows();
  if (m.cols() != r + 1) { throw std::invalid_argument("maximal_minors expects an r x (r+1) matrix"); }
  Vector<Scalar> minors(r + 1);
  for (Index skip = 0; skip <= r; ++skip) {
    Matrix<Scalar> sub(r, r);
    for (Index c = 0, out = 0; c <= r; ++c) {
      if (c != skip) { sub.col(out++) = m.col(c); }
    }
    minors(skip) = determinant(sub);
  }
  return minors;
}

} // namespace rtoric::lattice
