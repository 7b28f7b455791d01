#pragma once

#include "rtoric/types.hpp"

namespace rtoric {

/// The triple (a, b, n) fixing one generalized repunit monomial curve.
struct InstanceParams
{
  int a = 1;
  int b = 2;
  int n = 2;

  /// Throws std::invalid_argument unless a >= 1, b >= 1, n >= 2.
  static InstanceParams make(int a, int b, int n);

  friend bool operator==(InstanceParams const &, InstanceParams const &) = default;
};

/// r_b(ell) = 1 + b + ... + b^(ell-1), with r_b(0) = 0.
BigInt repunit(int b, int ell);

/// a_i = r_b(n) + a r_b(i-1). Indices above n follow the same formula.
BigInt generator(InstanceParams const &params, int i);

/// (a_1, ..., a_n).
BigVector generators(InstanceParams const &params);

/// gcd(a_1, ..., a_n). Throws std::logic_error if it ever disagrees with
/// gcd(a, r_b(n)).
BigInt gcd_of_generators(InstanceParams const &params);

bool is_coprime(InstanceParams const &params);

/// b a_j + a_{j+k} == b a_{j+k-1} + a_{j+1}, evaluated with extended generators.
bool lemma2_holds(InstanceParams const &params, int j, int k);

} // namespace rtoric
