#pragma once

#include <vector>

#include "rtoric/groebner.hpp"
#include "rtoric/semigroup.hpp"

namespace rtoric {

enum class MinorSource { X, Y };

/// The 2x2 minors of
///   X = | x_1^b ... x_{n-1}^b  x_n^b     |     Y = | x_1^b ... x_{n-1}^b |
///       | x_2   ... x_n        x_1^{a+1} |         | x_2   ... x_n       |
/// in canonical (lex-larger first) storage, ordered by column pair.
struct MinorFamily
{
  MinorSource source;
  InstanceParams params;
  std::vector<Binomial> binomials;
};

MinorFamily minors_Y(InstanceParams const &params);
MinorFamily minors_X(InstanceParams const &params);

/// The families G_1..G_4 attached to the order build_order_i(a, i), with the
/// designated leading monomial stored in `plus`:
///   G_1: x_{j+1} x_k^b - x_j^b x_{k+1},  i <= j <= n-2,  j < k <= n-1
///   G_2: x_{j+1} x_k^b - x_j^b x_{k+1},  1 <= j <= i-2,  j < k <= i-1
///   G_3: x_j^b x_{k+1} - x_{j+1} x_k^b,  1 <= j <= i-1,  i <= k <= n-1
///   G_4: x_1^{a+1} x_l^b - x_{l+1} x_n^b for l < i, and
///        x_{l+1} x_n^b - x_1^{a+1} x_l^b for i <= l <= n-1
std::vector<Binomial> family_G(InstanceParams const &params, int i, int part);
/// G_1 u G_2 u G_3.
std::vector<Binomial> family_GY(InstanceParams const &params, int i);
/// G_1 u G_2 u G_3 u G_4.
std::vector<Binomial> family_GX(InstanceParams const &params, int i);

/// The 2 x n matrix whose j-th column is (r_b(j-1), 1).
BigMatrix matrix_B(InstanceParams const &params);
/// Scalar grading by a_1..a_n.
Grading weight_grading(InstanceParams const &params);
/// Two-row grading by matrix_B.
Grading projective_grading(InstanceParams const &params);
/// build_order_i(a_1..a_n, i).
MatrixOrder order_i(InstanceParams const &params, int i);

enum class LatticeKind { C, L, GenericKernel };

/// Integer matrix whose rows generate a lattice; the binomials
/// x^{u+} - x^{u-} over its rows generate the lattice ideal up to saturation.
struct LatticeMatrix
{
  LatticeKind kind;
  BigMatrix rows;
};

/// (n-2) x n banded matrix spanning ker_Z(B); requires n >= 4.
LatticeMatrix lattice_C(InstanceParams const &params);
/// (n-1) x n matrix with rows in ker_Z(a_1..a_n); requires n >= 3.
LatticeMatrix lattice_L(InstanceParams const &params);
/// Basis of { u : weights u = 0 } computed through Hermite reduction.
LatticeMatrix kernel_lattice_basis(BigMatrix const &weights);

std::vector<Binomial> lattice_binomials(LatticeMatrix const &lattice);

/// Kernel of x_i -> t^{grading column i}: lattice basis binomials saturated by
/// every variable, returned as the reduced basis under `order`.
GroebnerBasis toric_ideal(Grading const &grading, MatrixOrder const &order);
/// Same, under build_order_i(grading.positive_row(), 1).
GroebnerBasis toric_ideal(Grading const &grading);

} // namespace rtoric
