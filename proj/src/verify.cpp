#include "rtoric/verify.hpp"

#include <algorithm>
#include <sstream>

#include "rtoric/fiber.hpp"
#include "rtoric/lattice.hpp"

namespace rtoric {

namespace {

using Outcome = ReportBuilder::Outcome;

ReportInstance instance_of(InstanceParams const &p, std::optional<int> i = std::nullopt)
{
  return ReportInstance{p.a, p.b, p.n, i};
}

std::string yes_no(bool v) { return v ? "yes" : "no"; }

std::vector<Binomial> sorted_by_lead(std::vector<Binomial> set, MatrixOrder const &order)
{
  std::sort(set.begin(), set.end(),
            [&](Binomial const &l, Binomial const &r) { return order.less(l.lead(), r.lead()); });
  return set;
}

// Shared refusals for the theorem verifiers.
bool refuse_unless_theorem_params(ReportBuilder &report, InstanceParams const &p)
{
  if (p.b < 2) {
    report.refuse("preconditions", "verification requires b >= 2 (got b=" + std::to_string(p.b) + ")");
    return true;
  }
  return false;
}

bool refuse_unless_index(ReportBuilder &report, InstanceParams const &p, int i)
{
  if (i < 1 || i > p.n) {
    report.refuse("preconditions", "order index i must lie in 1..n (got i=" + std::to_string(i) + ")");
    return true;
  }
  return false;
}

bool refuse_unless_coprime(ReportBuilder &report, InstanceParams const &p)
{
  BigInt const g = gcd_of_generators(p);
  if (g != 1) {
    report.refuse("preconditions", "gcd(a, r_b(n)) = " + g.str() + " != 1");
    return true;
  }
  return false;
}

Outcome count_outcome(std::size_t got, std::uint64_t want, std::string const &what)
{
  return Outcome{got == want, what + " = " + std::to_string(got) + " (expected " + std::to_string(want) + ")"};
}

} // namespace

std::uint64_t choose(int n, int k)
{
  if (k < 0 || n < 0 || k > n) { return 0; }
  std::uint64_t r = 1;
  for (int t = 1; t <= k; ++t) { r = r * static_cast<std::uint64_t>(n - k + t) / static_cast<std::uint64_t>(t); }
  return r;
}

bool leads_match_order(std::span<Binomial const> set, MatrixOrder const &order)
{
  return std::all_of(set.begin(), set.end(),
                     [&](Binomial const &f) { return !f.is_zero() && order.compare(f.plus(), f.minus()) > 0; });
}

bool all_orders_reduced(InstanceParams const &params)
{
  for (int i = 1; i <= params.n; ++i) {
    if (!is_reduced(family_GX(params, i))) { return false; }
  }
  return true;
}

std::vector<Binomial> printed_n4_generators(int a, int b)
{
  auto x = [](int var, int power) { return Monomial::variable(4, var - 1, power); };
  return {
    Binomial::with_lead(x(2, b + 1), x(1, b) * x(3, 1)),
    Binomial::with_lead(x(1, b) * x(4, 1), x(2, 1) * x(3, b)),
    Binomial::with_lead(x(3, b + 1), x(2, b) * x(4, 1)),
    Binomial::with_lead(x(1, a + b + 1), x(2, 1) * x(4, b)),
    Binomial::with_lead(x(1, a + 1) * x(2, b), x(3, 1) * x(4, b)),
    Binomial::with_lead(x(4, b + 1), x(1, a + 1) * x(3, b)),
  };
}

VerificationReport verify_lemma2(InstanceParams const &params, int max_index)
{
  ReportBuilder report("lemma2", instance_of(params));
  report.check("identity", [&] {
    for (int j = 1; j <= max_index; ++j) {
      for (int k = 1; k <= max_index; ++k) {
        if (!lemma2_holds(params, j, k)) {
          return Outcome{false, "fails at j=" + std::to_string(j) + " k=" + std::to_string(k)};
        }
      }
    }
    return Outcome{true, "holds for 1 <= j, k <= " + std::to_string(max_index)};
  });
  return std::move(report).finish();
}

VerificationReport verify_lemma3(InstanceParams const &params)
{
  ReportBuilder report("lemma3", instance_of(params));
  if (refuse_unless_theorem_params(report, params)) { return std::move(report).finish(); }
  int const n = params.n;
  report.check("predicate-matches-order", [&] {
    std::size_t triples = 0;
    for (int i = 1; i <= n; ++i) {
      MatrixOrder const order = order_i(params, i);
      for (int j = 1; j <= n - 2; ++j) {
        for (int k = j + 1; k <= n - 1; ++k) {
          auto x = [&](int var, int power) { return Monomial::variable(n, var - 1, power); };
          bool const smaller = order.less(x(j, params.b) * x(k + 1, 1), x(j + 1, 1) * x(k, params.b));
          if (smaller != lemma3_predicate(n, i, j, k)) {
            return Outcome{false, "disagrees at i=" + std::to_string(i) + " j=" + std::to_string(j) +
                                    " k=" + std::to_string(k)};
          }
          ++triples;
        }
      }
    }
    return Outcome{true, std::to_string(triples) + " index triples agree"};
  });
  return std::move(report).finish();
}

VerificationReport verify_prop_gb1(InstanceParams const &params, int i, BuchbergerOptions const &options)
{
  ReportBuilder report("prop-gb1", instance_of(params, i));
  if (refuse_unless_theorem_params(report, params) || refuse_unless_index(report, params, i)) {
    return std::move(report).finish();
  }
  int const n = params.n;
  MatrixOrder const order = order_i(params, i);
  auto const family = family_GY(params, i);

  report.check("leading-terms", [&] {
    return Outcome{leads_match_order(family, order), "designated monomials lead under the order"};
  });
  report.check("cardinality", [&] {
    std::size_t const g1 = family_G(params, i, 1).size();
    std::size_t const g2 = family_G(params, i, 2).size();
    std::size_t const g3 = family_G(params, i, 3).size();
    bool const ok = g1 == choose(n - i, 2) && g2 == choose(i - 1, 2) &&
                    g3 == static_cast<std::uint64_t>((i - 1) * (n - i)) && family.size() == choose(n - 1, 2);
    return Outcome{ok, "|G1|=" + std::to_string(g1) + " |G2|=" + std::to_string(g2) + " |G3|=" +
                         std::to_string(g3) + " |G_Y|=" + std::to_string(family.size()) +
                         " (C(n-1,2)=" + std::to_string(choose(n - 1, 2)) + ")"};
  });
  report.check("groebner", [&] { return Outcome{is_groebner_basis(family, order), "all S-pairs reduce to zero"}; });
  report.check("reduced", [&] { return Outcome{is_reduced(family), "no lead divides another term"}; });
  report.check("generates-minors-Y", [&] {
    bool const ok = canonical_set(family) == canonical_set(minors_Y(params).binomials);
    return Outcome{ok, "G_Y coincides with the minors of Y"};
  });
  report.check("buchberger-agrees", [&] {
    auto const gb = reduced_groebner_basis(minors_Y(params).binomials, order, options);
    bool const ok = gb.elements == sorted_by_lead(family, order);
    return Outcome{ok, "reduced basis from the minors has " + std::to_string(gb.size()) + " elements"};
  });
  return std::move(report).finish();
}

VerificationReport verify_thm_gb2(InstanceParams const &params, int i, BuchbergerOptions const &options)
{
  ReportBuilder report("thm-gb2", instance_of(params, i));
  if (refuse_unless_theorem_params(report, params) || refuse_unless_index(report, params, i)) {
    return std::move(report).finish();
  }
  int const n = params.n;
  MatrixOrder const order = order_i(params, i);
  auto const family = family_GX(params, i);

  report.check("leading-terms", [&] {
    return Outcome{leads_match_order(family, order), "designated monomials lead under the order"};
  });
  report.check("cardinality", [&] {
    std::size_t const g4 = family_G(params, i, 4).size();
    bool const ok = g4 == static_cast<std::uint64_t>(n - 1) && family.size() == choose(n, 2);
    return Outcome{ok, "|G4|=" + std::to_string(g4) + " |G|=" + std::to_string(family.size()) +
                         " (C(n,2)=" + std::to_string(choose(n, 2)) + ")"};
  });
  report.check("groebner", [&] { return Outcome{is_groebner_basis(family, order), "all S-pairs reduce to zero"}; });
  report.check("minimal", [&] {
    return Outcome{is_minimal(family), "no lead divides another lead; reduced=" + yes_no(is_reduced(family))};
  });
  report.check("generates-minors-X", [&] {
    bool const ok = canonical_set(family) == canonical_set(minors_X(params).binomials);
    return Outcome{ok, "G coincides with the minors of X"};
  });
  report.check("buchberger-agrees", [&] {
    auto const from_minors = reduced_groebner_basis(minors_X(params).binomials, order, options);
    auto const from_family = reduce_gb(GroebnerBasis{family, order, false, false});
    return Outcome{from_minors.elements == from_family.elements,
                   "reduced basis has " + std::to_string(from_minors.size()) + " elements"};
  });
  return std::move(report).finish();
}

VerificationReport verify_cor_gb1(InstanceParams const &params)
{
  ReportBuilder report("cor-gb1", instance_of(params));
  if (refuse_unless_theorem_params(report, params)) { return std::move(report).finish(); }
  int const n = params.n;
  Grading const grading = projective_grading(params);
  MatrixOrder const order = order_i(params, 1);
  auto const minors = minors_Y(params).binomials;

  if (n >= 4) {
    report.check("lattice-C", [&] {
      auto const c = lattice_C(params); // checks B C^T = 0 and the unimodular block
      bool const ok = lattice::same_row_lattice(c.rows, lattice::integer_kernel(matrix_B(params)));
      return Outcome{ok, "rows of C span ker_Z(B)"};
    });
    report.check("saturation-IC", [&] {
      auto const saturated = saturate_torus(lattice_binomials(lattice_C(params)), grading);
      return Outcome{ideal_equal(saturated, minors, order), "I_C : (x_1...x_n)^oo equals the ideal of minors"};
    });
  }
  report.check("toric-J", [&] {
    auto const j = toric_ideal(grading);
    return Outcome{ideal_equal(j.elements, minors, order), "kernel of the projective map equals the ideal of minors"};
  });
  auto const oracle = analyze_minimal_generators(minors, grading);
  report.check("minimal-generators", [&] {
    std::size_t const pruned = minimalize_generators(minors, order).size();
    bool const ok = oracle.total() == choose(n - 1, 2) && pruned == choose(n - 1, 2);
    return Outcome{ok, "oracle count " + std::to_string(oracle.total()) + ", pruned count " + std::to_string(pruned) +
                         ", C(n-1,2)=" + std::to_string(choose(n - 1, 2))};
  });
  report.check("unique", [&] { return Outcome{oracle.unique, "unique minimal system: " + yes_no(oracle.unique)}; });
  return std::move(report).finish();
}

VerificationReport verify_cor_gb2(InstanceParams const &params)
{
  ReportBuilder report("cor-gb2", instance_of(params));
  if (refuse_unless_theorem_params(report, params) || refuse_unless_coprime(report, params)) {
    return std::move(report).finish();
  }
  int const n = params.n;
  Grading const grading = weight_grading(params);
  MatrixOrder const order = order_i(params, 1);
  auto const minors = minors_X(params).binomials;

  if (n >= 3) {
    report.check("lattice-L", [&] {
      auto const l = lattice_L(params); // checks rows are orthogonal to the weights
      auto const minors_l = lattice::maximal_minors(l.rows);
      std::vector<BigInt> got(minors_l.begin(), minors_l.end());
      for (auto &m : got) { m = lattice::abs_value(m); }
      auto const gens = generators(params);
      std::vector<BigInt> want(gens.begin(), gens.end());
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      return Outcome{got == want, "maximal minors of L are a_1..a_n up to sign"};
    });
    report.check("saturation-IL", [&] {
      auto const saturated = saturate_torus(lattice_binomials(lattice_L(params)), grading);
      return Outcome{ideal_equal(saturated, minors, order), "I_L : (x_1...x_n)^oo equals the ideal of minors"};
    });
  }
  auto const toric = toric_ideal(grading, order);
  report.check("toric-I", [&] {
    return Outcome{ideal_equal(toric.elements, minors, order), "toric ideal equals the ideal of minors of X"};
  });
  auto const oracle = analyze_minimal_generators(toric.elements, grading);
  report.check("minimal-generators", [&] {
    std::size_t const pruned = minimalize_generators(minors, order).size();
    bool const ok = oracle.total() == choose(n, 2) && pruned == choose(n, 2);
    return Outcome{ok, "oracle count " + std::to_string(oracle.total()) + ", pruned count " + std::to_string(pruned) +
                         ", C(n,2)=" + std::to_string(choose(n, 2))};
  });
  if (n > 3) {
    report.check("unique-iff-a-lt-b-minus-1", [&] {
      bool const predicate = params.a < params.b - 1;
      bool const reduced = all_orders_reduced(params);
      bool const ok = oracle.unique == predicate && predicate == reduced;
      return Outcome{ok, "oracle unique=" + yes_no(oracle.unique) + ", a<b-1=" + yes_no(predicate) +
                           ", G reduced for all i=" + yes_no(reduced)};
    });
  } else {
    report.record("unique-iff-a-lt-b-minus-1", ClaimStatus::pass, "not asserted for n <= 3; oracle unique=" +
                                                                    yes_no(oracle.unique));
  }
  return std::move(report).finish();
}

VerificationReport verify_example5(int a)
{
  auto const params = InstanceParams::make(a, 5, 5);
  ReportBuilder report("example5", instance_of(params));
  if (refuse_unless_coprime(report, params)) { return std::move(report).finish(); }
  MatrixOrder const order = example5_order(generators(params));
  auto const gb = reduced_groebner_basis(minors_Y(params).binomials, order);
  report.check("groebner", [&] { return Outcome{is_groebner_basis(gb.elements, order), "reduced basis verified"}; });
  report.check("reduced-gb-size", [&] {
    bool const ok = gb.size() == 8 && gb.size() > choose(4, 2);
    return Outcome{ok, "reduced basis has " + std::to_string(gb.size()) + " elements (expected 8 > 6)"};
  });
  return std::move(report).finish();
}

VerificationReport verify_example_n4_minors(int a, int b)
{
  auto const params = InstanceParams::make(a, b, 4);
  ReportBuilder report("example-n4-minors", instance_of(params));
  if (refuse_unless_theorem_params(report, params) || refuse_unless_coprime(report, params)) {
    return std::move(report).finish();
  }
  Grading const grading = weight_grading(params);
  MatrixOrder const order = order_i(params, 1);
  auto const printed = printed_n4_generators(a, b);
  auto const toric = toric_ideal(grading, order);
  auto const oracle = analyze_minimal_generators(toric.elements, grading);

  report.check("generates-I", [&] {
    return Outcome{ideal_equal(printed, toric.elements, order), "the six binomials generate the toric ideal"};
  });
  report.check("oracle-minimal-set", [&] {
    if (oracle.unique) {
      bool const ok = canonical_set(oracle.generators) == canonical_set(printed);
      return Outcome{ok, "oracle generators coincide with the listed six"};
    }
    return Outcome{oracle.total() == 6, "minimal system not unique; oracle count " + std::to_string(oracle.total())};
  });
  report.check("unique-iff-a-lt-b-minus-1", [&] {
    bool const predicate = a < b - 1;
    return Outcome{oracle.unique == predicate,
                   "oracle unique=" + yes_no(oracle.unique) + ", a<b-1=" + yes_no(predicate)};
  });
  return std::move(report).finish();
}

VerificationReport verify_example_gcd3()
{
  auto const params = InstanceParams::make(3, 2, 4);
  ReportBuilder report("example-gcd3", instance_of(params));
  Grading const grading = weight_grading(params);
  MatrixOrder const order = order_i(params, 1);
  auto const minors = minors_X(params).binomials;

  report.check("generators", [&] {
    BigVector want(4);
    want << 15, 18, 24, 36;
    std::ostringstream got;
    got << generators(params).transpose();
    return Outcome{generators(params) == want, "a_i = " + got.str()};
  });
  report.check("gcd", [&] {
    BigInt const g = gcd_of_generators(params);
    return Outcome{g == 3, "gcd = " + g.str()};
  });
  auto const toric = toric_ideal(grading, order);
  report.check("toric-I-count", [&] {
    return count_outcome(analyze_minimal_generators(toric.elements, grading).total(), 4, "minimal generators of I");
  });
  report.check("minors-X-count", [&] {
    std::size_t const oracle = analyze_minimal_generators(minors, grading).total();
    std::size_t const pruned = minimalize_generators(minors, order).size();
    return Outcome{oracle == 6 && pruned == 6,
                   "oracle count " + std::to_string(oracle) + ", pruned count " + std::to_string(pruned) + " (expected 6)"};
  });
  report.check("ideals-differ", [&] {
    return Outcome{!ideal_equal(toric.elements, minors, order), "I differs from the ideal of minors of X"};
  });
  return std::move(report).finish();
}

VerificationReport verify_example_a3b3()
{
  auto const params = InstanceParams::make(3, 3, 4);
  ReportBuilder report("example-a3b3", instance_of(params, 2));
  MatrixOrder const order = order_i(params, 2);
  Binomial const target = parse_binomial("x4^4 - x1*x2^4*x3^2", 4);
  auto const gb = reduced_groebner_basis(minors_X(params).binomials, order);

  report.check("in-reduced-basis", [&] {
    bool const ok = std::any_of(gb.elements.begin(), gb.elements.end(),
                                [&](Binomial const &f) { return same_up_to_sign(f, target); });
    return Outcome{ok, to_string(target) + " in reduced basis of " + std::to_string(gb.size()) + " elements"};
  });
  report.check("not-a-minor", [&] {
    auto const minors = canonical_set(minors_X(params).binomials);
    bool const ok = std::find(minors.begin(), minors.end(), target.canonicalized()) == minors.end();
    return Outcome{ok, to_string(target) + " is not a 2x2 minor of X"};
  });
  report.check("minimal-basis-not-reduced", [&] {
    auto const family = family_GX(params, 2);
    return Outcome{is_minimal(family) && !is_reduced(family), "G is minimal but not reduced"};
  });
  return std::move(report).finish();
}

} // namespace rtoric
