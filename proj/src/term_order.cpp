#include "rtoric/term_order.hpp"

#include <limits>
#include <stdexcept>

#include "rtoric/lattice.hpp"

namespace rtoric {

namespace {

bool fits_int64(BigInt const &x)
{
  return x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max();
}

} // namespace

MatrixOrder::MatrixOrder(BigMatrix rows)
  : rows_(std::move(rows))
{
  Index const n = rows_.cols();
  if (rows_.rows() != n) { throw std::invalid_argument("order matrix must be square"); }
  if (n == 0) { throw std::invalid_argument("order matrix must be nonempty"); }
  for (Index c = 0; c < n; ++c) {
    if (rows_(0, c) <= 0) { throw std::invalid_argument("order matrix first row must be strictly positive"); }
  }
  if (lattice::rank(rows_) != n) { throw std::invalid_argument("order matrix must have full rank"); }

  bool narrow = true;
  for (Index r = 0; r < n && narrow; ++r) {
    for (Index c = 0; c < n && narrow; ++c) { narrow = fits_int64(rows_(r, c)); }
  }
  if (narrow) {
    Matrix<std::int64_t> m(n, n);
    for (Index r = 0; r < n; ++r) {
      for (Index c = 0; c < n; ++c) { m(r, c) = static_cast<std::int64_t>(rows_(r, c)); }
    }
    narrow_rows_ = std::move(m);
  }
}

std::strong_ordering MatrixOrder::compare(Monomial const &u, Monomial const &v) const
{
  Index const n = num_vars();
  if (u.size() != n || v.size() != n) { throw std::invalid_argument("monomial size does not match order"); }
  if (u == v) { return std::strong_ordering::equal; }

  if (narrow_rows_) {
    // |entry| < 2^63 and |diff| < 2^32, so each row sum fits comfortably in 128 bits.
    for (Index r = 0; r < n; ++r) {
      __int128 acc = 0;
      for (Index c = 0; c < n; ++c) {
        std::int64_t const d = std::int64_t(u[c]) - std::int64_t(v[c]);
        if (d != 0) { acc += static_cast<__int128>((*narrow_rows_)(r, c)) * d; }
      }
      if (acc != 0) { return acc < 0 ? std::strong_ordering::less : std::strong_ordering::greater; }
    }
  } else {
    for (Index r = 0; r < n; ++r) {
      BigInt acc = 0;
      for (Index c = 0; c < n; ++c) {
        std::int64_t const d = std::int64_t(u[c]) - std::int64_t(v[c]);
        if (d != 0) { acc += rows_(r, c) * d; }
      }
      if (acc != 0) { return acc < 0 ? std::strong_ordering::less : std::strong_ordering::greater; }
    }
  }
  // Unreachable for a full-rank matrix and u != v.
  throw std::logic_error("matrix order failed to separate distinct monomials");
}

BigInt MatrixOrder::weight(Monomial const &m) const
{
  BigInt w = 0;
  for (Index c = 0; c < num_vars(); ++c) {
    if (m[c] != 0) { w += rows_(0, c) * m[c]; }
  }
  return w;
}

std::vector<int> cheapest_variables(int n, int i)
{
  if (n < 1 || i < 1 || i > n) { throw std::out_of_range("order index i must lie in 1..n"); }
  std::vector<int> seq;
  seq.reserve(n);
  for (int k = i; k >= 1; --k) { seq.push_back(k); }
  for (int k = n; k > i; --k) { seq.push_back(k); }
  return seq;
}

MatrixOrder build_order_i(BigVector const &weights, int i)
{
  int const n = static_cast<int>(weights.size());
  auto const seq = cheapest_variables(n, i);
  for (Index c = 0; c < n; ++c) {
    if (weights(c) <= 0) { throw std::invalid_argument("order weights must be strictly positive"); }
  }
  BigMatrix m = BigMatrix::Zero(n, n);
  m.row(0) = weights.transpose();
  for (int r = 1; r < n; ++r) { m(r, seq[r - 1] - 1) = -1; }
  return MatrixOrder(std::move(m));
}

MatrixOrder example5_order(BigVector const &weights)
{
  if (weights.size() != 5) { throw std::invalid_argument("example5_order takes exactly 5 weights"); }
  BigMatrix m = BigMatrix::Zero(5, 5);
  m.row(0) = weights.transpose();
  m(1, 2) = -1;
  m(2, 4) = -1;
  m(3, 3) = -1;
  m(4, 1) = -1;
  return MatrixOrder(std::move(m));
}

bool lemma3_predicate(int n, int i, int j, int k)
{
  if (j < 1 || j > n - 2 || k < j + 1 || k > n - 1 || i < 1 || i > n) {
    throw std::out_of_range("lemma3 indices out of range");
  }
  return i <= j || k + 1 <= i;
}

} // namespace rtoric
