#pragma once

// Brute-force oracle for minimal generators of graded binomial ideals.
//
// For a degree d, the fiber is every monomial of degree d. Two fiber monomials
// are joined when one is reached from the other by a move m -> (m / u) v with
// u - v (or v - u) a generator of strictly smaller degree. Each extra connected
// component at d that the degree-d generators glue together costs one minimal
// generator. This never touches a Groebner basis, so it checks the engine
// independently.

#include <span>
#include <vector>

#include "rtoric/binomial.hpp"

namespace rtoric {

struct Fiber
{
  BigVector degree;
  /// Every monomial of the degree, lexicographically increasing.
  std::vector<Monomial> monomials;
};

struct FiberGraph
{
  Fiber fiber;
  /// Component label per monomial, labels dense in 0..num_components-1.
  std::vector<std::size_t> component;
  std::size_t num_components = 0;
};

struct BettiDegree
{
  BigVector degree;
  std::size_t count = 0;
};

struct MinimalGenerators
{
  /// Nonzero counts, in processing order (by grading key, then lex degree).
  std::vector<BettiDegree> betti;
  /// One binomial per counted generator (canonical storage).
  std::vector<Binomial> generators;
  /// Every counted generator is forced up to sign.
  bool unique = true;

  std::size_t total() const { return generators.size(); }
};

/// All monomials of `degree`. Throws std::invalid_argument if the degree vector
/// has the wrong length.
Fiber enumerate_fiber(Grading const &grading, BigVector const &degree);

/// Components of the fiber under single-step moves by `moves` (both directions).
FiberGraph fiber_graph(Fiber fiber, std::span<Binomial const> moves);

/// Full oracle pass over the candidate degrees (the degrees of `gens`).
/// `gens` must generate the ideal and be homogeneous.
MinimalGenerators analyze_minimal_generators(std::span<Binomial const> gens, Grading const &grading);

std::vector<BettiDegree> betti_degrees(std::span<Binomial const> gens, Grading const &grading);
bool has_unique_minimal_system(std::span<Binomial const> gens, Grading const &grading);

/// Second route to minimality: greedily drop every generator that lies in the
/// ideal of the remaining ones (membership through a reduced Groebner basis).
std::vector<Binomial> minimalize_generators(std::span<Binomial const> gens, MatrixOrder const &order);

} // namespace rtoric
