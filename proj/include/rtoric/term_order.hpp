#pragma once

#include <compare>
#include <optional>

#include "rtoric/monomial.hpp"

namespace rtoric {

/// Total monomial order given by an integer weight matrix: u < v iff the first
/// nonzero entry of rows * (u - v) is negative.
///
/// Construction enforces rank n and a strictly positive first row, which makes
/// the order total and a well-ordering on monomials. Comparisons therefore never
/// need a tie-break.
class MatrixOrder
{
public:
  explicit MatrixOrder(BigMatrix rows);

  Index num_vars() const { return rows_.cols(); }
  BigMatrix const &rows() const { return rows_; }
  BigVector weights() const { return rows_.row(0).transpose(); }

  std::strong_ordering compare(Monomial const &u, Monomial const &v) const;
  bool less(Monomial const &u, Monomial const &v) const { return compare(u, v) < 0; }

  /// Value of the first row on m (the grading the order refines).
  BigInt weight(Monomial const &m) const;

private:
  BigMatrix rows_;
  // Same matrix when every entry fits in 64 bits; rows * diff is then
  // accumulated in 128 bits without touching the allocator.
  std::optional<Matrix<std::int64_t>> narrow_rows_;
};

inline std::strong_ordering compare(MatrixOrder const &order, Monomial const &u, Monomial const &v)
{
  return order.compare(u, v);
}

/// The A-graded reverse lexicographic order with
///   x_i < x_{i-1} < ... < x_1 < x_n < ... < x_{i+1}
/// (i is 1-based). Row 0 is the weight vector; each following row is -e_k for
/// the next cheapest variable k. The most expensive variable needs no row.
MatrixOrder build_order_i(BigVector const &weights, int i);

/// Cheapest-first variable sequence used by build_order_i (1-based indices).
std::vector<int> cheapest_variables(int n, int i);

/// The 5x5 order whose tie-break rows are -e_3, -e_5, -e_4, -e_2.
MatrixOrder example5_order(BigVector const &weights);

/// (i <= j) || (k + 1 <= i), for 1 <= j <= n-2, j+1 <= k <= n-1, 1 <= i <= n.
/// Equivalent to x_j^b x_{k+1} < x_{j+1} x_k^b under build_order_i(a, i).
bool lemma3_predicate(int n, int i, int j, int k);

} // namespace rtoric
