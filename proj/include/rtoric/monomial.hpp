#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

#include "rtoric/types.hpp"

namespace rtoric {

/// Raised when exponent arithmetic leaves the range of Exponent.
struct ExponentOverflow : std::overflow_error
{
  using std::overflow_error::overflow_error;
};

/// x^u for a nonnegative exponent vector u. Variables are 0-based internally
/// and rendered 1-based (x1..xn).
class Monomial
{
public:
  Monomial() = default;
  explicit Monomial(ExponentVector exponents);
  Monomial(std::initializer_list<Exponent> exponents);

  static Monomial one(Index nvars);
  static Monomial variable(Index nvars, Index var, Exponent power = 1);

  /// Checked conversion from any integer vector (e.g. the positive part of a
  /// lattice vector). Throws ExponentOverflow if an entry does not fit.
  template <typename Derived> static Monomial from_integers(Eigen::MatrixBase<Derived> const &values);

  Index size() const { return exponents_.size(); }
  Exponent operator[](Index var) const { return exponents_(var); }
  ExponentVector const &exponents() const { return exponents_; }

  bool is_one() const { return (exponents_.array() == 0).all(); }
  std::int64_t total_degree() const { return exponents_.cast<std::int64_t>().sum(); }

  /// True iff this monomial divides `other`.
  bool divides(Monomial const &other) const;

  friend bool operator==(Monomial const &, Monomial const &);
  /// Lexicographic on exponent vectors (x1 most significant).
  friend std::strong_ordering operator<=>(Monomial const &, Monomial const &);

private:
  ExponentVector exponents_;
};

Monomial operator*(Monomial const &lhs, Monomial const &rhs);
/// lhs / rhs; throws std::domain_error if rhs does not divide lhs.
Monomial operator/(Monomial const &lhs, Monomial const &rhs);
Monomial lcm(Monomial const &lhs, Monomial const &rhs);
Monomial gcd(Monomial const &lhs, Monomial const &rhs);
bool coprime(Monomial const &lhs, Monomial const &rhs);

/// `x1^2*x4`; the unit monomial renders as `1`.
std::string to_string(Monomial const &m);
/// Inverse of to_string for a known number of variables.
Monomial parse_monomial(std::string_view text, Index nvars);

struct MonomialHash
{
  std::size_t operator()(Monomial const &m) const noexcept;
};

template <typename Derived> Monomial Monomial::from_integers(Eigen::MatrixBase<Derived> const &values)
{
  ExponentVector e(values.size());
  for (Index k = 0; k < values.size(); ++k) {
    auto const &v = values(k);
    if (v < 0 || v > std::numeric_limits<Exponent>::max()) {
      throw ExponentOverflow("exponent out of range in monomial construction");
    }
    e(k) = static_cast<Exponent>(v);
  }
  return Monomial(std::move(e));
}

} // namespace rtoric
