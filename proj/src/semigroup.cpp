#include "rtoric/semigroup.hpp"

#include <stdexcept>
#include <string>

namespace rtoric {

InstanceParams InstanceParams::make(int a, int b, int n)
{
  if (a < 1 || b < 1 || n < 2) {
    throw std::invalid_argument("instance requires a >= 1, b >= 1, n >= 2 (got a=" + std::to_string(a) +
                                ", b=" + std::to_string(b) + ", n=" + std::to_string(n) + ")");
  }
  return InstanceParams{a, b, n};
}

BigInt repunit(int b, int ell)
{
  if (b < 1 || ell < 0) { throw std::invalid_argument("repunit requires b >= 1 and ell >= 0"); }
  BigInt sum = 0;
  for (int j = 0; j < ell; ++j) {
    sum = sum * b + 1; // Horner: r_b(l+1) = b r_b(l) + 1
  }
  return sum;
}

BigInt generator(InstanceParams const &params, int i)
{
  if (i < 1) { throw std::invalid_argument("generator index starts at 1"); }
  return repunit(params.b, params.n) + BigInt(params.a) * repunit(params.b, i - 1);
}

BigVector generators(InstanceParams const &params)
{
  BigVector values(params.n);
  for (int i = 1; i <= params.n; ++i) {
    values(i - 1) = generator(params, i);
  }
  return values;
}

BigInt gcd_of_generators(InstanceParams const &params)
{
  BigInt g = 0;
  for (int i = 1; i <= params.n; ++i) {
    g = boost::multiprecision::gcd(g, generator(params, i));
  }
  BigInt const expected = boost::multiprecision::gcd(BigInt(params.a), repunit(params.b, params.n));
  if (g != expected) {
    throw std::logic_error("gcd(a_1..a_n) = " + g.str() + " differs from gcd(a, r_b(n)) = " + expected.str());
  }
  return g;
}

bool is_coprime(InstanceParams const &params) { return gcd_of_generators(params) == 1; }

bool lemma2_holds(InstanceParams const &params, int j, int k)
{
  if (j < 1 || k < 1) { throw std::invalid_argument("lemma2 requires j >= 1 and k >= 1"); }
  BigInt const b = params.b;
  return b * generator(params, j) + generator(params, j + k) ==
         b * generator(params, j + k - 1) + generator(params, j + 1);
}

} // namespace rtoric
