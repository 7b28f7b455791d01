#pragma once

#include <cstdint>
#include <type_traits>

#include <Eigen/Dense>
#include <boost/multiprecision/traits/is_byte_container.hpp>

// Eigen 3.4 gives every dense expression a `const_iterator` typedef, which is
// `void` for non-vector shapes. Boost 1.74 probes that typedef when Eigen asks
// whether a matrix converts to a scalar, and fails hard instead of SFINAE-ing.
namespace boost::multiprecision::detail {
template <class C>
  requires std::is_void_v<typename C::const_iterator>
struct is_byte_container_imp<C, true> : boost::false_type {};
} // namespace boost::multiprecision::detail

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace rtoric {

using BigInt = boost::multiprecision::cpp_int;
using Index = Eigen::Index;

// Exponents are fixed width; every product is range-checked (see Monomial).
using Exponent = std::int32_t;

template <typename Scalar> using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar> using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;
template <typename Scalar> using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using ExponentVector = Vector<Exponent>;
using BigVector = Vector<BigInt>;
using BigMatrix = Matrix<BigInt>;

} // namespace rtoric
