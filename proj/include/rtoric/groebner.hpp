#pragma once

#include <functional>
#include <span>
#include <vector>

#include "rtoric/binomial.hpp"

namespace rtoric {

/// Binomials oriented by `order`, plus what is known about them.
struct GroebnerBasis
{
  std::vector<Binomial> elements;
  MatrixOrder order;
  bool minimal = false;
  bool reduced = false;

  std::size_t size() const { return elements.size(); }
};

/// One processed (or skipped) S-pair in the Buchberger loop.
struct SPairEvent
{
  std::size_t first = 0;
  std::size_t second = 0;
  Monomial lcm;
  bool coprime_skip = false;
  bool reduced_to_zero = false;
  /// Index of the appended element when the pair produced one.
  std::size_t appended = 0;
};

struct BuchbergerOptions
{
  std::function<void(SPairEvent const &)> trace;
};

/// Buchberger's algorithm for pure-difference binomials.
///
/// Pairs are processed by the normal strategy: smallest weight (first order row)
/// of the lcm first, ties broken by lexicographic lcm and then by index. Only the
/// coprime-leading-term criterion is applied. Input must be homogeneous for a
/// positive grading refined by the order, which guarantees termination.
GroebnerBasis buchberger(std::span<Binomial const> gens, MatrixOrder const &order,
                         BuchbergerOptions const &options = {});

/// Every S-pair reduces to zero by `set` (no pair criteria, no enlargement).
bool is_groebner_basis(std::span<Binomial const> set, MatrixOrder const &order);

/// No lead divides another lead.
bool is_minimal(std::span<Binomial const> set);
/// No lead divides any monomial of another element, and the set is minimal.
bool is_reduced(std::span<Binomial const> set);

/// Drop elements whose lead is divisible by another element's lead; output is
/// sorted by lead.
GroebnerBasis minimalize(GroebnerBasis const &gb);
/// The unique reduced basis: minimalize, then replace every trail by its
/// normal form. Output is sorted increasingly by lead, so equal ideals give
/// equal vectors.
GroebnerBasis reduce_gb(GroebnerBasis const &gb);

/// reduce_gb(buchberger(gens, order)).
GroebnerBasis reduced_groebner_basis(std::span<Binomial const> gens, MatrixOrder const &order,
                                     BuchbergerOptions const &options = {});

bool ideal_member(Binomial const &f, GroebnerBasis const &gb);
bool ideal_equal(std::span<Binomial const> gens1, std::span<Binomial const> gens2, MatrixOrder const &order);

/// Generators of I : x_var^oo (var is 1-based). Uses the reduced basis for the
/// grading-compatible reverse lexicographic order with x_var cheapest and
/// strips the common power of x_var from each element, until a pass strips
/// nothing.
std::vector<Binomial> saturate_variable(std::span<Binomial const> gens, int var, Grading const &grading);

/// Generators of I : (x_1 ... x_n)^oo, by saturate_variable over every
/// variable until a full sweep changes nothing.
std::vector<Binomial> saturate_torus(std::span<Binomial const> gens, Grading const &grading);

/// Orders two binomial lists for set comparison (canonical storage, sorted).
std::vector<Binomial> canonical_set(std::span<Binomial const> set);

} // namespace rtoric
