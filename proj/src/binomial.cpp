#include "rtoric/binomial.hpp"

#include <stdexcept>

namespace rtoric {

Binomial Binomial::zero(Index nvars) { return Binomial(Monomial::one(nvars), Monomial::one(nvars)); }

Binomial Binomial::canonical(Monomial u, Monomial v)
{
  if (u.size() != v.size()) { throw std::invalid_argument("binomial monomials differ in size"); }
  if (u == v) { return zero(u.size()); }
  if (u < v) { std::swap(u, v); }
  return Binomial(std::move(u), std::move(v));
}

Binomial Binomial::oriented(Monomial u, Monomial v, MatrixOrder const &order)
{
  auto const c = order.compare(u, v);
  if (c == 0) { return zero(u.size()); }
  if (c < 0) { std::swap(u, v); }
  return Binomial(std::move(u), std::move(v));
}

Binomial Binomial::with_lead(Monomial lead, Monomial trail)
{
  if (lead.size() != trail.size()) { throw std::invalid_argument("binomial monomials differ in size"); }
  if (lead == trail) { return zero(lead.size()); }
  return Binomial(std::move(lead), std::move(trail));
}

Binomial Binomial::negated() const { return Binomial(minus_, plus_); }

Vector<std::int64_t> Binomial::exponent_difference() const
{
  return plus_.exponents().cast<std::int64_t>() - minus_.exponents().cast<std::int64_t>();
}

bool same_up_to_sign(Binomial const &lhs, Binomial const &rhs)
{
  return lhs.canonicalized() == rhs.canonicalized();
}

Binomial operator*(Monomial const &m, Binomial const &f)
{
  if (f.is_zero()) { return Binomial::zero(f.size()); }
  // Slot assignment is kept: multiplication preserves any term order.
  return Binomial::with_lead(m * f.plus(), m * f.minus());
}

std::string to_string(Binomial const &f)
{
  if (f.is_zero()) { return "0"; }
  return to_string(f.plus()) + " - " + to_string(f.minus());
}

Binomial parse_binomial(std::string_view text, Index nvars)
{
  auto const trimmed = [&] {
    auto s = text;
    while (!s.empty() && s.front() == ' ') { s.remove_prefix(1); }
    while (!s.empty() && s.back() == ' ') { s.remove_suffix(1); }
    return s;
  }();
  if (trimmed == "0") { return Binomial::zero(nvars); }
  auto const minus = trimmed.find(" - ");
  if (minus == std::string_view::npos) {
    throw std::invalid_argument("binomial text must look like 'u - v': '" + std::string(text) + "'");
  }
  return Binomial::with_lead(parse_monomial(trimmed.substr(0, minus), nvars),
                             parse_monomial(trimmed.substr(minus + 3), nvars));
}

Grading::Grading(BigMatrix rows)
  : rows_(std::move(rows))
{
  if (rows_.rows() == 0) { throw std::invalid_argument("grading needs at least one row"); }
  for (Index r = 0; r < rows_.rows(); ++r) {
    bool positive = true;
    for (Index c = 0; c < rows_.cols() && positive; ++c) { positive = rows_(r, c) > 0; }
    if (positive) {
      positive_row_ = r;
      return;
    }
  }
  throw std::invalid_argument("grading needs a strictly positive row");
}

Grading Grading::scalar(BigVector const &weights) { return Grading(BigMatrix(weights.transpose())); }

BigVector degree(Grading const &grading, Monomial const &m)
{
  if (m.size() != grading.num_vars()) { throw std::invalid_argument("grading and monomial differ in size"); }
  BigVector d = BigVector::Zero(grading.num_rows());
  for (Index c = 0; c < m.size(); ++c) {
    if (m[c] == 0) { continue; }
    for (Index r = 0; r < grading.num_rows(); ++r) { d(r) += grading.rows()(r, c) * m[c]; }
  }
  return d;
}

bool is_homogeneous(Grading const &grading, Binomial const &f)
{
  return f.is_zero() || degree(grading, f.plus()) == degree(grading, f.minus());
}

Binomial s_pair(Binomial const &f, Binomial const &g, MatrixOrder const &order)
{
  if (f.is_zero() || g.is_zero()) { throw std::invalid_argument("s_pair of a zero binomial"); }
  Monomial const l = lcm(f.lead(), g.lead());
  return Binomial::oriented((l / f.lead()) * f.trail(), (l / g.lead()) * g.trail(), order);
}

Monomial reduce_monomial(Monomial m, std::span<Binomial const> basis)
{
  // Each step strictly decreases m in the term order, so this terminates.
  for (bool reduced = true; reduced;) {
    reduced = false;
    for (auto const &g : basis) {
      if (!g.is_zero() && g.lead().divides(m)) {
        m = (m / g.lead()) * g.trail();
        reduced = true;
        break;
      }
    }
  }
  return m;
}

Binomial reduce_binomial(Binomial const &f, std::span<Binomial const> basis, MatrixOrder const &order)
{
  if (f.is_zero()) { return f; }
  return Binomial::oriented(reduce_monomial(f.plus(), basis), reduce_monomial(f.minus(), basis), order);
}

} // namespace rtoric
