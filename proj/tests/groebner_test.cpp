#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "rtoric/families.hpp"
#include "rtoric/groebner.hpp"
#include "test_support.hpp"

namespace rtoric {
namespace {

using testing::big;
using testing::bin;
using testing::bins;
using testing::mono;

TEST(Buchberger, SingleGenerator)
{
  auto const p = InstanceParams::make(1, 2, 3);
  auto const minors = minors_Y(p).binomials;
  ASSERT_EQ(minors.size(), 1u);
  auto const gb = reduced_groebner_basis(minors, order_i(p, 1));
  ASSERT_EQ(gb.size(), 1u);
  EXPECT_TRUE(same_up_to_sign(gb.elements[0], minors[0]));
  EXPECT_TRUE(gb.minimal);
  EXPECT_TRUE(gb.reduced);
}

TEST(Buchberger, MinorsOfYForNFour)
{
  auto const p = InstanceParams::make(1, 2, 4);
  auto const gb = reduced_groebner_basis(minors_Y(p).binomials, order_i(p, 1));
  // Frozen from the independent Python Buchberger.
  auto const expected = bins({"x2^3 - x1^2*x3", "x2*x3^2 - x1^2*x4", "x3^3 - x2^2*x4"}, 4);
  EXPECT_EQ(canonical_set(gb.elements), canonical_set(expected));
  for (auto const &f : gb.elements) {
    EXPECT_TRUE(std::any_of(expected.begin(), expected.end(), [&](Binomial const &e) { return e == f; }))
      << "lead mismatch for " << to_string(f);
  }
}

TEST(Buchberger, TraceRecordsEveryPair)
{
  auto const p = InstanceParams::make(3, 3, 4);
  std::vector<SPairEvent> events;
  BuchbergerOptions options;
  options.trace = [&](SPairEvent const &e) { events.push_back(e); };
  auto const gb = buchberger(minors_X(p).binomials, order_i(p, 2), options);
  std::size_t const n = gb.size();
  EXPECT_EQ(events.size(), n * (n - 1) / 2);
  EXPECT_TRUE(std::any_of(events.begin(), events.end(), [](SPairEvent const &e) { return e.coprime_skip; }));
  EXPECT_TRUE(std::any_of(events.begin(), events.end(), [](SPairEvent const &e) { return e.reduced_to_zero; }));
  for (auto const &e : events) { EXPECT_LT(e.first, e.second); }
  EXPECT_TRUE(is_groebner_basis(gb.elements, gb.order));
}

TEST(GroebnerChecks, NonBasisDetected)
{
  // x1 is the cheapest variable, so x1 - x2 leads with x2 and the S-pair
  // with x2^2 - x1*x3 leaves x1*x3 - x1^2.
  MatrixOrder const order = build_order_i(big({1, 1, 1}), 1);
  auto const set = std::vector<Binomial>{Binomial::oriented(mono("x1", 3), mono("x2", 3), order),
                                         Binomial::oriented(mono("x2^2", 3), mono("x1*x3", 3), order)};
  EXPECT_FALSE(is_groebner_basis(set, order));
  EXPECT_TRUE(is_groebner_basis(reduced_groebner_basis(set, order).elements, order));
}

TEST(GroebnerChecks, ReduceIsIdempotent)
{
  auto const p = InstanceParams::make(2, 3, 5);
  MatrixOrder const order = order_i(p, 4);
  auto const gb = reduced_groebner_basis(minors_X(p).binomials, order);
  EXPECT_TRUE(is_reduced(gb.elements));
  EXPECT_EQ(reduce_gb(gb).elements, gb.elements);
  EXPECT_EQ(minimalize(gb).elements.size(), gb.size());
}

TEST(GroebnerChecks, ReducedBasisIndependentOfInputOrder)
{
  std::mt19937 rng(11);
  for (int n = 3; n <= 6; ++n) {
    for (int b = 2; b <= 3; ++b) {
      for (int a = 1; a <= 2; ++a) {
        auto const p = InstanceParams::make(a, b, n);
        for (int i = 1; i <= n; ++i) {
          MatrixOrder const order = order_i(p, i);
          auto gens = minors_X(p).binomials;
          auto const reference = reduced_groebner_basis(gens, order);
          for (int shuffle = 0; shuffle < 3; ++shuffle) {
            std::shuffle(gens.begin(), gens.end(), rng);
            EXPECT_EQ(reduced_groebner_basis(gens, order).elements, reference.elements);
          }
          // A different generating set of the same ideal.
          auto const family = family_GX(p, i);
          EXPECT_EQ(reduce_gb(GroebnerBasis{family, order, false, false}).elements, reference.elements);
        }
      }
    }
  }
}

TEST(Membership, MinorsLieInToricIdeal)
{
  for (int a = 1; a <= 3; ++a) {
    for (int b = 2; b <= 3; ++b) {
      for (int n = 3; n <= 5; ++n) {
        auto const p = InstanceParams::make(a, b, n);
        auto const toric = toric_ideal(weight_grading(p), order_i(p, 1));
        for (auto const &f : minors_X(p).binomials) { EXPECT_TRUE(ideal_member(f, toric)); }
        for (auto const &f : toric.elements) { EXPECT_TRUE(ideal_member(f, toric)); }
      }
    }
  }
}

TEST(Membership, NonMember)
{
  auto const p = InstanceParams::make(1, 2, 4);
  auto const gb = reduced_groebner_basis(minors_Y(p).binomials, order_i(p, 1));
  EXPECT_FALSE(ideal_member(bin("x1 - x2", 4), gb));
}

TEST(Membership, IdealEquality)
{
  auto const p = InstanceParams::make(1, 3, 5);
  auto gens = minors_X(p).binomials;
  auto shuffled = gens;
  std::reverse(shuffled.begin(), shuffled.end());
  EXPECT_TRUE(ideal_equal(gens, shuffled, order_i(p, 2)));

  auto const q = InstanceParams::make(3, 2, 4);
  auto const toric = toric_ideal(weight_grading(q));
  EXPECT_FALSE(ideal_equal(toric.elements, minors_X(q).binomials, order_i(q, 1)));
}

TEST(Saturation, StripsCommonVariable)
{
  Grading const ones = Grading::scalar(big({1, 1, 1}));
  auto const saturated = saturate_variable(bins({"x1*x3 - x2*x3"}, 3), 3, ones);
  ASSERT_EQ(saturated.size(), 1u);
  EXPECT_TRUE(same_up_to_sign(saturated[0], bin("x1 - x2", 3)));
  EXPECT_THROW(saturate_variable(bins({"x1 - x2^2"}, 3), 1, ones), std::invalid_argument);
}

TEST(Saturation, MinorsOfYAreSaturated)
{
  for (int n = 3; n <= 6; ++n) {
    auto const p = InstanceParams::make(1, 3, n);
    auto const minors = minors_Y(p).binomials;
    for (int var = 1; var <= n; ++var) {
      EXPECT_TRUE(ideal_equal(saturate_variable(minors, var, projective_grading(p)), minors, order_i(p, 1)));
    }
  }
}

TEST(Saturation, IdempotentAndMonotone)
{
  for (int n = 3; n <= 6; ++n) {
    for (int b = 2; b <= 4; ++b) {
      auto const p = InstanceParams::make(2, b, n);
      Grading const grading = weight_grading(p);
      MatrixOrder const order = order_i(p, 1);
      auto const lattice = lattice_binomials(lattice_L(p));
      auto const once = saturate_torus(lattice, grading);
      auto const twice = saturate_torus(once, grading);
      EXPECT_TRUE(ideal_equal(once, twice, order));
      auto const gb = reduced_groebner_basis(once, order);
      for (auto const &f : lattice) { EXPECT_TRUE(ideal_member(f, gb)); }
    }
  }
}

TEST(Saturation, LatticeCGivesMinorsOfY)
{
  auto const p = InstanceParams::make(1, 3, 5);
  auto const saturated = saturate_torus(lattice_binomials(lattice_C(p)), projective_grading(p));
  EXPECT_TRUE(ideal_equal(saturated, minors_Y(p).binomials, order_i(p, 1)));
}

TEST(CanonicalSet, DropsZerosAndDuplicates)
{
  auto set = bins({"x1 - x2", "x2 - x1", "x3 - x3"}, 3);
  auto const c = canonical_set(set);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0], bin("x1 - x2", 3));
}

} // namespace
} // namespace rtoric
