#include "rtoric/families.hpp"

#include <stdexcept>

#include "rtoric/lattice.hpp"

namespace rtoric {

namespace {

Monomial var_pow(Index n, int var, int power) { return Monomial::variable(n, var - 1, power); }

// Entries of the matrices X and Y, column j (1-based).
Monomial top(InstanceParams const &p, int j) { return var_pow(p.n, j, p.b); }
Monomial bottom(InstanceParams const &p, int j)
{
  return j < p.n ? var_pow(p.n, j + 1, 1) : var_pow(p.n, 1, p.a + 1);
}

std::vector<Binomial> minors_of_columns(InstanceParams const &p, int ncols)
{
  std::vector<Binomial> out;
  for (int j = 1; j <= ncols; ++j) {
    for (int k = j + 1; k <= ncols; ++k) {
      out.push_back(Binomial::canonical(top(p, j) * bottom(p, k), top(p, k) * bottom(p, j)));
    }
  }
  return out;
}

void require_index(InstanceParams const &p, int i)
{
  if (i < 1 || i > p.n) { throw std::out_of_range("order index i must lie in 1..n"); }
}

} // namespace

MinorFamily minors_Y(InstanceParams const &params)
{
  return MinorFamily{MinorSource::Y, params, minors_of_columns(params, params.n - 1)};
}

MinorFamily minors_X(InstanceParams const &params)
{
  return MinorFamily{MinorSource::X, params, minors_of_columns(params, params.n)};
}

std::vector<Binomial> family_G(InstanceParams const &params, int i, int part)
{
  require_index(params, i);
  int const n = params.n;
  int const b = params.b;
  Index const nv = n;
  auto x = [&](int var, int power) { return var_pow(nv, var, power); };
  // x_{j+1} x_k^b and x_j^b x_{k+1}
  auto inner = [&](int j, int k) { return x(j + 1, 1) * x(k, b); };
  auto outer = [&](int j, int k) { return x(j, b) * x(k + 1, 1); };

  std::vector<Binomial> out;
  switch (part) {
  case 1:
    for (int j = i; j <= n - 2; ++j) {
      for (int k = j + 1; k <= n - 1; ++k) { out.push_back(Binomial::with_lead(inner(j, k), outer(j, k))); }
    }
    break;
  case 2:
    for (int j = 1; j <= i - 2; ++j) {
      for (int k = j + 1; k <= i - 1; ++k) { out.push_back(Binomial::with_lead(inner(j, k), outer(j, k))); }
    }
    break;
  case 3:
    for (int j = 1; j <= i - 1; ++j) {
      for (int k = i; k <= n - 1; ++k) { out.push_back(Binomial::with_lead(outer(j, k), inner(j, k))); }
    }
    break;
  case 4:
    for (int l = 1; l <= n - 1; ++l) {
      Monomial corner = x(1, params.a + 1) * x(l, b); // x_1^{a+1} x_l^b
      Monomial edge = x(l + 1, 1) * x(n, b);          // x_{l+1} x_n^b
      out.push_back(l < i ? Binomial::with_lead(std::move(corner), std::move(edge))
                          : Binomial::with_lead(std::move(edge), std::move(corner)));
    }
    break;
  default: throw std::out_of_range("family part must be 1, 2, 3 or 4");
  }
  return out;
}

std::vector<Binomial> family_GY(InstanceParams const &params, int i)
{
  std::vector<Binomial> out;
  for (int part = 1; part <= 3; ++part) {
    auto g = family_G(params, i, part);
    out.insert(out.end(), g.begin(), g.end());
  }
  return out;
}

std::vector<Binomial> family_GX(InstanceParams const &params, int i)
{
  auto out = family_GY(params, i);
  auto g4 = family_G(params, i, 4);
  out.insert(out.end(), g4.begin(), g4.end());
  return out;
}

BigMatrix matrix_B(InstanceParams const &params)
{
  BigMatrix m(2, params.n);
  for (int j = 1; j <= params.n; ++j) {
    m(0, j - 1) = repunit(params.b, j - 1);
    m(1, j - 1) = 1;
  }
  return m;
}

Grading weight_grading(InstanceParams const &params) { return Grading::scalar(generators(params)); }

Grading projective_grading(InstanceParams const &params) { return Grading(matrix_B(params)); }

MatrixOrder order_i(InstanceParams const &params, int i) { return build_order_i(generators(params), i); }

LatticeMatrix lattice_C(InstanceParams const &params)
{
  int const n = params.n;
  if (n < 4) { throw std::invalid_argument("lattice C is defined for n >= 4"); }
  BigInt const b = params.b;
  BigMatrix c = BigMatrix::Zero(n - 2, n);
  for (int r = 0; r < n - 3; ++r) {
    c(r, r) = b;
    c(r, r + 1) = -1;
    c(r, r + 2) = -b;
    c(r, r + 3) = 1;
  }
  c(n - 3, n - 3) = b;
  c(n - 3, n - 2) = -(b + 1);
  c(n - 3, n - 1) = 1;

  if (!(matrix_B(params) * c.transpose()).isZero()) { throw std::logic_error("B C^T != 0"); }
  if (lattice::determinant<BigInt>(c.rightCols(n - 2)) != 1) {
    throw std::logic_error("trailing square block of C is not unimodular");
  }
  return LatticeMatrix{LatticeKind::C, std::move(c)};
}

LatticeMatrix lattice_L(InstanceParams const &params)
{
  int const n = params.n;
  if (n < 3) { throw std::invalid_argument("lattice L is defined for n >= 3"); }
  BigInt const b = params.b;
  BigMatrix l = BigMatrix::Zero(n - 1, n);
  for (int r = 0; r < n - 2; ++r) {
    l(r, r) = b;
    l(r, r + 1) = -(b + 1);
    l(r, r + 2) = 1;
  }
  l(n - 2, 0) = params.a + 1;
  l(n - 2, n - 2) = b;
  l(n - 2, n - 1) = -(b + 1);

  if (!(l * generators(params)).isZero()) { throw std::logic_error("a row of L is not orthogonal to a_1..a_n"); }
  return LatticeMatrix{LatticeKind::L, std::move(l)};
}

LatticeMatrix kernel_lattice_basis(BigMatrix const &weights)
{
  if (weights.isZero()) { throw std::invalid_argument("kernel of a zero weight matrix"); }
  return LatticeMatrix{LatticeKind::GenericKernel, lattice::integer_kernel(weights)};
}

std::vector<Binomial> lattice_binomials(LatticeMatrix const &lattice)
{
  std::vector<Binomial> out;
  for (Index r = 0; r < lattice.rows.rows(); ++r) {
    out.push_back(Binomial::from_lattice_vector(lattice.rows.row(r).transpose()));
  }
  return out;
}

GroebnerBasis toric_ideal(Grading const &grading, MatrixOrder const &order)
{
  auto const gens = lattice_binomials(kernel_lattice_basis(grading.rows()));
  return reduced_groebner_basis(saturate_torus(gens, grading), order);
}

GroebnerBasis toric_ideal(Grading const &grading)
{
  return toric_ideal(grading, build_order_i(grading.positive_row(), 1));
}

} // namespace rtoric
