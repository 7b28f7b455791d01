#include "rtoric/monomial.hpp"

#include <charconv>
#include <limits>

namespace rtoric {

namespace {

void require_same_size(Monomial const &lhs, Monomial const &rhs)
{
  if (lhs.size() != rhs.size()) { throw std::invalid_argument("monomials live in different polynomial rings"); }
}

Monomial narrow(Vector<std::int64_t> const &wide)
{
  if (wide.size() > 0 && wide.maxCoeff() > std::numeric_limits<Exponent>::max()) {
    throw ExponentOverflow("exponent overflow in monomial product");
  }
  return Monomial(wide.cast<Exponent>());
}

} // namespace

Monomial::Monomial(ExponentVector exponents)
  : exponents_(std::move(exponents))
{
  if (exponents_.size() > 0 && exponents_.minCoeff() < 0) {
    throw std::invalid_argument("monomial exponents must be nonnegative");
  }
}

Monomial::Monomial(std::initializer_list<Exponent> exponents)
  : Monomial(ExponentVector(Eigen::Map<ExponentVector const>(exponents.begin(), Index(exponents.size()))))
{
}

Monomial Monomial::one(Index nvars) { return Monomial(ExponentVector::Zero(nvars)); }

Monomial Monomial::variable(Index nvars, Index var, Exponent power)
{
  if (var < 0 || var >= nvars) { throw std::out_of_range("variable index out of range"); }
  ExponentVector e = ExponentVector::Zero(nvars);
  e(var) = power;
  return Monomial(std::move(e));
}

bool Monomial::divides(Monomial const &other) const
{
  require_same_size(*this, other);
  return (exponents_.array() <= other.exponents_.array()).all();
}

bool operator==(Monomial const &lhs, Monomial const &rhs)
{
  return lhs.exponents_.size() == rhs.exponents_.size() && lhs.exponents_ == rhs.exponents_;
}

std::strong_ordering operator<=>(Monomial const &lhs, Monomial const &rhs)
{
  require_same_size(lhs, rhs);
  for (Index k = 0; k < lhs.size(); ++k) {
    if (auto c = lhs[k] <=> rhs[k]; c != 0) { return c; }
  }
  return std::strong_ordering::equal;
}

Monomial operator*(Monomial const &lhs, Monomial const &rhs)
{
  require_same_size(lhs, rhs);
  return narrow(lhs.exponents().cast<std::int64_t>() + rhs.exponents().cast<std::int64_t>());
}

Monomial operator/(Monomial const &lhs, Monomial const &rhs)
{
  if (!rhs.divides(lhs)) { throw std::domain_error("monomial quotient is not exact"); }
  return Monomial(ExponentVector(lhs.exponents() - rhs.exponents()));
}

Monomial lcm(Monomial const &lhs, Monomial const &rhs)
{
  require_same_size(lhs, rhs);
  return Monomial(ExponentVector(lhs.exponents().cwiseMax(rhs.exponents())));
}

Monomial gcd(Monomial const &lhs, Monomial const &rhs)
{
  require_same_size(lhs, rhs);
  return Monomial(ExponentVector(lhs.exponents().cwiseMin(rhs.exponents())));
}

bool coprime(Monomial const &lhs, Monomial const &rhs)
{
  require_same_size(lhs, rhs);
  return ((lhs.exponents().array() == 0) || (rhs.exponents().array() == 0)).all();
}

std::string to_string(Monomial const &m)
{
  std::string out;
  for (Index k = 0; k < m.size(); ++k) {
    if (m[k] == 0) { continue; }
    if (!out.empty()) { out += '*'; }
    out += 'x' + std::to_string(k + 1);
    if (m[k] > 1) { out += '^' + std::to_string(m[k]); }
  }
  return out.empty() ? "1" : out;
}

Monomial parse_monomial(std::string_view text, Index nvars)
{
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') { s.remove_prefix(1); }
    while (!s.empty() && s.back() == ' ') { s.remove_suffix(1); }
    return s;
  };
  auto parse_int = [](std::string_view s) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw std::invalid_argument("bad integer in monomial: '" + std::string(s) + "'");
    }
    return value;
  };

  text = trim(text);
  Vector<std::int64_t> e = Vector<std::int64_t>::Zero(nvars);
  if (text == "1") { return Monomial::one(nvars); }
  while (!text.empty()) {
    auto const star = text.find('*');
    auto factor = trim(text.substr(0, star));
    text = star == std::string_view::npos ? std::string_view{} : text.substr(star + 1);
    if (factor.size() < 2 || factor.front() != 'x') {
      throw std::invalid_argument("bad monomial factor: '" + std::string(factor) + "'");
    }
    auto const caret = factor.find('^');
    auto const var = parse_int(factor.substr(1, caret == std::string_view::npos ? factor.npos : caret - 1));
    auto const power = caret == std::string_view::npos ? 1 : parse_int(factor.substr(caret + 1));
    if (var < 1 || var > nvars) { throw std::invalid_argument("variable index out of range in monomial"); }
    e(var - 1) += power;
  }
  return Monomial::from_integers(e);
}

std::size_t MonomialHash::operator()(Monomial const &m) const noexcept
{
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Index k = 0; k < m.size(); ++k) {
    h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(m[k]));
    h *= 0x100000001b3ULL;
  }
  return h;
}

} // namespace rtoric
