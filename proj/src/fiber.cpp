#include "rtoric/fiber.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "rtoric/groebner.hpp"
#include "rtoric/union_find.hpp"

namespace rtoric {

namespace {

using IndexMap = std::unordered_map<Monomial, std::size_t, MonomialHash>;

IndexMap index_fiber(Fiber const &fiber)
{
  IndexMap index;
  index.reserve(fiber.monomials.size());
  for (std::size_t k = 0; k < fiber.monomials.size(); ++k) { index.emplace(fiber.monomials[k], k); }
  return index;
}

void apply_moves(Fiber const &fiber, IndexMap const &index, std::span<Binomial const> moves, DisjointSets &sets)
{
  for (auto const &g : moves) {
    if (g.is_zero()) { continue; }
    for (int dir = 0; dir < 2; ++dir) {
      Monomial const &from = dir == 0 ? g.plus() : g.minus();
      Monomial const &to = dir == 0 ? g.minus() : g.plus();
      for (std::size_t k = 0; k < fiber.monomials.size(); ++k) {
        Monomial const &m = fiber.monomials[k];
        if (!from.divides(m)) { continue; }
        auto const it = index.find((m / from) * to);
        // The target has the same degree whenever the move is homogeneous.
        if (it != index.end()) { sets.unite(k, it->second); }
      }
    }
  }
}

bool degree_before(Grading const &grading, BigVector const &lhs, BigVector const &rhs)
{
  if (grading.key(lhs) != grading.key(rhs)) { return grading.key(lhs) < grading.key(rhs); }
  return std::lexicographical_compare(lhs.begin(), lhs.end(), rhs.begin(), rhs.end());
}

} // namespace

Fiber enumerate_fiber(Grading const &grading, BigVector const &target)
{
  Index const n = grading.num_vars();
  Index const k = grading.num_rows();
  if (target.size() != k) { throw std::invalid_argument("degree vector length does not match grading"); }
  Index const p = grading.positive_row_index();
  BigMatrix const &rows = grading.rows();

  std::vector<bool> nonnegative_row(k);
  for (Index r = 0; r < k; ++r) { nonnegative_row[r] = (rows.row(r).array() >= 0).all(); }

  Fiber fiber{target, {}};
  if (grading.key(target) < 0) { return fiber; }

  ExponentVector current = ExponentVector::Zero(n);
  BigVector remaining = target;

  auto feasible = [&] {
    for (Index r = 0; r < k; ++r) {
      if (nonnegative_row[r] && remaining(r) < 0) { return false; }
    }
    return true;
  };

  // Depth-first over variables; the last exponent is solved for directly.
  auto visit = [&](auto &self, Index var) -> void {
    if (var == n - 1) {
      BigInt const &w = rows(p, var);
      if (remaining(p) % w != 0) { return; }
      BigInt const e = remaining(p) / w;
      for (Index r = 0; r < k; ++r) {
        if (remaining(r) != e * rows(r, var)) { return; }
      }
      if (e > std::numeric_limits<Exponent>::max()) { throw ExponentOverflow("fiber exponent out of range"); }
      current(var) = static_cast<Exponent>(e);
      fiber.monomials.emplace_back(current);
      current(var) = 0;
      return;
    }
    BigVector const saved = remaining;
    for (Exponent e = 0;; ++e) {
      if (e > 0) {
        remaining -= rows.col(var);
        if (!feasible()) { break; }
      }
      current(var) = e;
      self(self, var + 1);
    }
    current(var) = 0;
    remaining = saved;
  };
  visit(visit, 0);
  return fiber;
}

FiberGraph fiber_graph(Fiber fiber, std::span<Binomial const> moves)
{
  auto const index = index_fiber(fiber);
  DisjointSets sets(fiber.monomials.size());
  apply_moves(fiber, index, moves, sets);

  FiberGraph graph{std::move(fiber), {}, sets.components()};
  std::map<std::size_t, std::size_t> labels;
  graph.component.reserve(graph.fiber.monomials.size());
  for (std::size_t k = 0; k < graph.fiber.monomials.size(); ++k) {
    auto const [it, inserted] = labels.emplace(sets.find(k), labels.size());
    graph.component.push_back(it->second);
  }
  return graph;
}

MinimalGenerators analyze_minimal_generators(std::span<Binomial const> gens, Grading const &grading)
{
  std::vector<Binomial> nonzero;
  std::vector<BigVector> gen_degrees;
  for (auto const &g : gens) {
    if (g.is_zero()) { continue; }
    if (!is_homogeneous(grading, g)) { throw std::invalid_argument("oracle input is not homogeneous: " + to_string(g)); }
    nonzero.push_back(g);
    gen_degrees.push_back(degree(grading, g.plus()));
  }

  std::vector<BigVector> candidates = gen_degrees;
  std::sort(candidates.begin(), candidates.end(),
            [&](BigVector const &l, BigVector const &r) { return degree_before(grading, l, r); });
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  MinimalGenerators result;
  for (auto const &d : candidates) {
    Fiber const fiber = enumerate_fiber(grading, d);
    auto const index = index_fiber(fiber);
    DisjointSets sets(fiber.monomials.size());
    apply_moves(fiber, index, result.generators, sets);

    std::vector<std::size_t> lower_root(fiber.monomials.size());
    std::vector<std::size_t> lower_size(fiber.monomials.size());
    for (std::size_t k = 0; k < fiber.monomials.size(); ++k) {
      lower_root[k] = sets.find(k);
      lower_size[k] = sets.size_of(k);
    }

    std::size_t count = 0;
    for (std::size_t g = 0; g < nonzero.size(); ++g) {
      if (gen_degrees[g] != d) { continue; }
      auto const a = index.at(nonzero[g].plus());
      auto const b = index.at(nonzero[g].minus());
      if (sets.unite(a, b)) {
        ++count;
        result.generators.push_back(nonzero[g].canonicalized());
      }
    }
    if (count == 0) { continue; }
    result.betti.push_back(BettiDegree{d, count});

    // Forced choice: each merged class glues exactly two singleton components.
    std::map<std::size_t, std::map<std::size_t, std::size_t>> merged; // final root -> lower root -> size
    for (std::size_t k = 0; k < fiber.monomials.size(); ++k) {
      merged[sets.find(k)][lower_root[k]] = lower_size[k];
    }
    for (auto const &[root, parts] : merged) {
      if (parts.size() <= 1) { continue; }
      bool const forced =
        parts.size() == 2 && std::all_of(parts.begin(), parts.end(), [](auto const &kv) { return kv.second == 1; });
      if (!forced) { result.unique = false; }
    }
  }
  return result;
}

std::vector<BettiDegree> betti_degrees(std::span<Binomial const> gens, Grading const &grading)
{
  return analyze_minimal_generators(gens, grading).betti;
}

bool has_unique_minimal_system(std::span<Binomial const> gens, Grading const &grading)
{
  return analyze_minimal_generators(gens, grading).unique;
}

std::vector<Binomial> minimalize_generators(std::span<Binomial const> gens, MatrixOrder const &order)
{
  std::vector<Binomial> current;
  for (auto const &g : gens) {
    if (g.is_zero()) { continue; }
    auto const c = g.canonicalized();
    if (std::find(current.begin(), current.end(), c) == current.end()) { current.push_back(c); }
  }
  for (std::size_t k = 0; k < current.size();) {
    std::vector<Binomial> others;
    others.reserve(current.size() - 1);
    for (std::size_t j = 0; j < current.size(); ++j) {
      if (j != k) { others.push_back(current[j]); }
    }
    if (ideal_member(current[k], reduced_groebner_basis(others, order))) {
      current.erase(current.begin() + static_cast<std::ptrdiff_t>(k));
    } else {
      ++k;
    }
  }
  return current;
}

} // namespace rtoric
