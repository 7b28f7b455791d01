#include "rtoric/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace rtoric {

namespace {

struct PendingPair
{
  BigInt weight;
  Monomial lcm;
  std::size_t first;
  std::size_t second;
};

// priority_queue pops the greatest element, so "greater" means "later".
struct ProcessLater
{
  bool operator()(PendingPair const &lhs, PendingPair const &rhs) const
  {
    if (lhs.weight != rhs.weight) { return lhs.weight > rhs.weight; }
    if (auto c = lhs.lcm <=> rhs.lcm; c != 0) { return c > 0; }
    if (lhs.first != rhs.first) { return lhs.first > rhs.first; }
    return lhs.second > rhs.second;
  }
};

bool canonical_less(Binomial const &lhs, Binomial const &rhs)
{
  if (auto c = lhs.plus() <=> rhs.plus(); c != 0) { return c < 0; }
  return lhs.minus() < rhs.minus();
}

void require_homogeneous(std::span<Binomial const> gens, Grading const &grading)
{
  for (auto const &g : gens) {
    if (!is_homogeneous(grading, g)) {
      throw std::invalid_argument("saturation input is not homogeneous: " + to_string(g));
    }
  }
}

// One saturate_variable pass; the flag reports whether any power of x_var was stripped.
std::pair<std::vector<Binomial>, bool> saturate_variable_impl(std::span<Binomial const> gens, int var,
                                                              Grading const &grading)
{
  Index const v = var - 1;
  MatrixOrder const order = build_order_i(grading.positive_row(), var);
  std::vector<Binomial> current(gens.begin(), gens.end());
  bool stripped_any = false;
  for (;;) {
    GroebnerBasis const gb = reduced_groebner_basis(current, order);
    bool stripped = false;
    std::vector<Binomial> next;
    next.reserve(gb.size());
    for (auto const &e : gb.elements) {
      Exponent const common = std::min(e.lead()[v], e.trail()[v]);
      if (common == 0) {
        next.push_back(e);
        continue;
      }
      Monomial const factor = Monomial::variable(e.size(), v, common);
      next.push_back(Binomial::with_lead(e.lead() / factor, e.trail() / factor));
      stripped = true;
    }
    if (!stripped) { return {gb.elements, stripped_any}; }
    stripped_any = true;
    current = std::move(next);
  }
}

} // namespace

GroebnerBasis buchberger(std::span<Binomial const> gens, MatrixOrder const &order, BuchbergerOptions const &options)
{
  std::vector<Binomial> basis;
  std::priority_queue<PendingPair, std::vector<PendingPair>, ProcessLater> queue;

  auto append = [&](Binomial h) {
    std::size_t const idx = basis.size();
    for (std::size_t k = 0; k < idx; ++k) {
      Monomial l = lcm(basis[k].lead(), h.lead());
      BigInt w = order.weight(l);
      queue.push(PendingPair{std::move(w), std::move(l), k, idx});
    }
    basis.push_back(std::move(h));
    return idx;
  };

  for (auto const &g : gens) {
    if (g.size() != order.num_vars()) { throw std::invalid_argument("generator size does not match order"); }
    Binomial h = g.oriented_by(order);
    if (h.is_zero() || std::find(basis.begin(), basis.end(), h) != basis.end()) { continue; }
    append(std::move(h));
  }

  while (!queue.empty()) {
    PendingPair const pair = queue.top();
    queue.pop();
    SPairEvent event{pair.first, pair.second, pair.lcm};
    if (coprime(basis[pair.first].lead(), basis[pair.second].lead())) {
      event.coprime_skip = true;
      event.reduced_to_zero = true;
    } else {
      Binomial h = reduce_binomial(s_pair(basis[pair.first], basis[pair.second], order), basis, order);
      if (h.is_zero()) {
        event.reduced_to_zero = true;
      } else {
        event.appended = append(std::move(h));
      }
    }
    if (options.trace) { options.trace(event); }
  }

  return GroebnerBasis{std::move(basis), order, false, false};
}

bool is_groebner_basis(std::span<Binomial const> set, MatrixOrder const &order)
{
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set[i].is_zero()) { continue; }
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (set[j].is_zero()) { continue; }
      if (!reduce_binomial(s_pair(set[i], set[j], order), set, order).is_zero()) { return false; }
    }
  }
  return true;
}

bool is_minimal(std::span<Binomial const> set)
{
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = 0; j < set.size(); ++j) {
      if (i != j && set[i].lead().divides(set[j].lead())) { return false; }
    }
  }
  return true;
}

bool is_reduced(std::span<Binomial const> set)
{
  if (!is_minimal(set)) { return false; }
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = 0; j < set.size(); ++j) {
      if (i != j && set[i].lead().divides(set[j].trail())) { return false; }
    }
  }
  return true;
}

GroebnerBasis minimalize(GroebnerBasis const &gb)
{
  std::vector<Binomial> sorted;
  for (auto const &e : gb.elements) {
    if (!e.is_zero()) { sorted.push_back(e); }
  }
  std::stable_sort(sorted.begin(), sorted.end(),
                   [&](Binomial const &lhs, Binomial const &rhs) { return gb.order.less(lhs.lead(), rhs.lead()); });
  // A divisor precedes its multiples in the sorted list, so one pass suffices.
  std::vector<Binomial> kept;
  for (auto &e : sorted) {
    bool const redundant =
      std::any_of(kept.begin(), kept.end(), [&](Binomial const &k) { return k.lead().divides(e.lead()); });
    if (!redundant) { kept.push_back(std::move(e)); }
  }
  return GroebnerBasis{std::move(kept), gb.order, true, false};
}

GroebnerBasis reduce_gb(GroebnerBasis const &gb)
{
  GroebnerBasis out = minimalize(gb);
  std::vector<Binomial> reduced;
  reduced.reserve(out.size());
  for (auto const &e : out.elements) {
    reduced.push_back(Binomial::with_lead(e.lead(), reduce_monomial(e.trail(), out.elements)));
  }
  out.elements = std::move(reduced);
  out.reduced = true;
  return out;
}

GroebnerBasis reduced_groebner_basis(std::span<Binomial const> gens, MatrixOrder const &order,
                                     BuchbergerOptions const &options)
{
  return reduce_gb(buchberger(gens, order, options));
}

bool ideal_member(Binomial const &f, GroebnerBasis const &gb)
{
  return reduce_binomial(f, gb.elements, gb.order).is_zero();
}

bool ideal_equal(std::span<Binomial const> gens1, std::span<Binomial const> gens2, MatrixOrder const &order)
{
  return reduced_groebner_basis(gens1, order).elements == reduced_groebner_basis(gens2, order).elements;
}

std::vector<Binomial> saturate_variable(std::span<Binomial const> gens, int var, Grading const &grading)
{
  if (var < 1 || var > grading.num_vars()) { throw std::out_of_range("saturation variable out of range"); }
  require_homogeneous(gens, grading);
  return saturate_variable_impl(gens, var, grading).first;
}

std::vector<Binomial> saturate_torus(std::span<Binomial const> gens, Grading const &grading)
{
  require_homogeneous(gens, grading);
  // Heaviest variables first keeps the intermediate bases small. One pass
  // already gives I : (x_1...x_n)^oo; the fixpoint loop only confirms it.
  BigVector const w = grading.positive_row();
  std::vector<int> vars(static_cast<std::size_t>(w.size()));
  for (std::size_t k = 0; k < vars.size(); ++k) { vars[k] = static_cast<int>(k) + 1; }
  std::stable_sort(vars.begin(), vars.end(), [&](int l, int r) { return w(l - 1) > w(r - 1); });
  std::vector<Binomial> current(gens.begin(), gens.end());
  for (bool changed = true; changed;) {
    changed = false;
    for (int var : vars) {
      auto [next, stripped] = saturate_variable_impl(current, var, grading);
      changed = changed || stripped;
      current = std::move(next);
    }
  }
  return current;
}

std::vector<Binomial> canonical_set(std::span<Binomial const> set)
{
  std::vector<Binomial> out;
  out.reserve(set.size());
  for (auto const &f : set) {
    if (!f.is_zero()) { out.push_back(f.canonicalized()); }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

} // namespace rtoric
