#pragma once

#include <span>
#include <string>
#include <vector>

#include "rtoric/monomial.hpp"
#include "rtoric/term_order.hpp"

namespace rtoric {

/// Pure-difference binomial x^plus - x^minus. Coefficients are implicitly +-1.
///
/// The zero binomial is the value with plus == minus (stored as 1 - 1).
/// Canonical storage puts the lexicographically larger monomial in `plus`;
/// once oriented by a term order, `plus` is the leading monomial instead.
class Binomial
{
public:
  Binomial() = default;

  static Binomial zero(Index nvars);
  /// Lex-larger monomial first; equal monomials give zero.
  static Binomial canonical(Monomial u, Monomial v);
  /// Leading monomial under `order` first.
  static Binomial oriented(Monomial u, Monomial v, MatrixOrder const &order);
  /// Stored exactly as given (lead first); equal monomials give zero.
  static Binomial with_lead(Monomial lead, Monomial trail);
  /// x^{u+} - x^{u-} for an integer vector u (positive and negative parts).
  template <typename Derived> static Binomial from_lattice_vector(Eigen::MatrixBase<Derived> const &u);

  Index size() const { return plus_.size(); }
  bool is_zero() const { return plus_ == minus_; }
  Monomial const &plus() const { return plus_; }
  Monomial const &minus() const { return minus_; }
  /// Aliases for binomials oriented by an order.
  Monomial const &lead() const { return plus_; }
  Monomial const &trail() const { return minus_; }

  Binomial canonicalized() const { return canonical(plus_, minus_); }
  Binomial oriented_by(MatrixOrder const &order) const { return oriented(plus_, minus_, order); }
  Binomial negated() const;

  /// plus - minus as an integer vector.
  Vector<std::int64_t> exponent_difference() const;

  /// Same storage, i.e. same monomials in the same slots.
  friend bool operator==(Binomial const &, Binomial const &) = default;

private:
  Binomial(Monomial plus, Monomial minus)
    : plus_(std::move(plus))
    , minus_(std::move(minus))
  {}

  Monomial plus_;
  Monomial minus_;
};

/// Equal as polynomials up to sign.
bool same_up_to_sign(Binomial const &lhs, Binomial const &rhs);

/// Multiply both monomials by m.
Binomial operator*(Monomial const &m, Binomial const &f);

/// `x1^2*x4 - x2*x3^2`, plus monomial first; zero renders as `0`.
std::string to_string(Binomial const &f);
Binomial parse_binomial(std::string_view text, Index nvars);

/// One or more weight rows. At least one row must be strictly positive, which
/// makes every fiber finite and supplies the total degree used for ordering.
class Grading
{
public:
  explicit Grading(BigMatrix rows);
  static Grading scalar(BigVector const &weights);

  Index num_vars() const { return rows_.cols(); }
  Index num_rows() const { return rows_.rows(); }
  BigMatrix const &rows() const { return rows_; }

  /// Index of the first strictly positive row.
  Index positive_row_index() const { return positive_row_; }
  BigVector positive_row() const { return rows_.row(positive_row_).transpose(); }

  /// The scalar that orders degrees: the component along the positive row.
  BigInt const &key(BigVector const &degree) const { return degree(positive_row_); }

private:
  BigMatrix rows_;
  Index positive_row_ = 0;
};

/// rows * exponents.
BigVector degree(Grading const &grading, Monomial const &m);
bool is_homogeneous(Grading const &grading, Binomial const &f);

/// S-polynomial of two binomials oriented by `order`:
///   (L / lt f) trail f - (L / lt g) trail g, with L = lcm(lt f, lt g),
/// returned oriented (or zero).
Binomial s_pair(Binomial const &f, Binomial const &g, MatrixOrder const &order);

/// Division-algorithm normal form of a monomial: while some lead divides m,
/// replace m by (m / lead) trail. Basis elements must be oriented by one order.
Monomial reduce_monomial(Monomial m, std::span<Binomial const> basis);

/// (NF(plus), NF(minus)) oriented by `order`; zero iff the normal forms agree.
Binomial reduce_binomial(Binomial const &f, std::span<Binomial const> basis, MatrixOrder const &order);

template <typename Derived> Binomial Binomial::from_lattice_vector(Eigen::MatrixBase<Derived> const &u)
{
  using Scalar = typename Derived::Scalar;
  Vector<Scalar> pos(u.size());
  Vector<Scalar> neg(u.size());
  for (Index k = 0; k < u.size(); ++k) {
    pos(k) = u(k) > 0 ? Scalar(u(k)) : Scalar(0);
    neg(k) = u(k) < 0 ? Scalar(-u(k)) : Scalar(0);
  }
  return canonical(Monomial::from_integers(pos), Monomial::from_integers(neg));
}

} // namespace rtoric
