// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rtoric/families.hpp"
#include "rtoric/fiber.hpp"
#include "rtoric/verify.hpp"

using namespace rtoric;

namespace {

struct Result
{
  bool ok = true;
  std::string detail;
};

// Records the first few failures and keeps counting.
class Tally
{
public:
  void expect(bool ok, std::string const &what)
  {
    ++checks_;
    if (ok) { return; }
    ++failures_;
    if (failures_ <= 3) { notes_ << (failures_ > 1 ? "; " : "") << what; }
  }

  void expect_report(VerificationReport const &report)
  {
    std::ostringstream what;
    what << (report.claims.empty() ? std::string() : report.claims.front().name);
    what << " a=" << report.instance.a << " b=" << report.instance.b << " n=" << report.instance.n;
    if (report.instance.i) { what << " i=" << *report.instance.i; }
    for (auto const &c : report.claims) {
      if (c.status != ClaimStatus::pass) { what << " [" << to_string(c.status) << " " << c.check << ": " << c.detail << "]"; }
    }
    expect(report.passed(), what.str());
  }

  Result result(std::string const &summary) const
  {
    std::ostringstream out;
    out << summary << ", " << checks_ << " checks";
    if (failures_ > 0) { out << ", " << failures_ << " failed: " << notes_.str(); }
    return {failures_ == 0, out.str()};
  }

private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::ostringstream notes_;
};

struct Instance
{
  int a, b, n;
};

std::vector<Instance> theorem_grid()
{
  std::vector<Instance> grid;
  for (int n = 4; n <= 7; ++n) {
    for (int b = 2; b <= 5; ++b) {
      for (int a = 1; a <= 5; ++a) { grid.push_back({a, b, n}); }
    }
  }
  return grid;
}

Result criterion_prop_gb1()
{
  Tally tally;
  std::size_t pairs = 0;
  for (auto const [a, b, n] : theorem_grid()) {
    auto const p = InstanceParams::make(a, b, n);
    for (int i = 1; i <= n; ++i, ++pairs) { tally.expect_report(verify_prop_gb1(p, i)); }
  }
  return tally.result(std::to_string(pairs) + " (instance, i) pairs");
}

Result criterion_thm_gb2()
{
  Tally tally;
  std::size_t pairs = 0;
  for (auto const [a, b, n] : theorem_grid()) {
    auto const p = InstanceParams::make(a, b, n);
    for (int i = 1; i <= n; ++i, ++pairs) { tally.expect_report(verify_thm_gb2(p, i)); }
  }
  return tally.result(std::to_string(pairs) + " (instance, i) pairs");
}

Result criterion_cor_gb1()
{
  Tally tally;
  std::size_t count = 0;
  for (int n = 4; n <= 6; ++n) {
    for (int b = 2; b <= 4; ++b, ++count) { tally.expect_report(verify_cor_gb1(InstanceParams::make(1, b, n))); }
  }
  return tally.result(std::to_string(count) + " instances");
}

Result criterion_cor_gb2()
{
  Tally tally;
  std::size_t coprime = 0;
  std::size_t unique = 0;
  for (auto const [a, b, n] : theorem_grid()) {
    auto const p = InstanceParams::make(a, b, n);
    if (!is_coprime(p)) { continue; }
    ++coprime;
    unique += a < b - 1 ? 1 : 0;
    tally.expect_report(verify_cor_gb2(p));
  }
  return tally.result(std::to_string(coprime) + " coprime instances (" + std::to_string(unique) +
                      " with a unique minimal system)");
}

Result criterion_gcd_example()
{
  Tally tally;
  tally.expect_report(verify_example_gcd3());
  return tally.result("n=4 a=3 b=2");
}

Result criterion_example5()
{
  Tally tally;
  std::size_t count = 0;
  for (int a = 1; a <= 3; ++a) {
    if (boost::multiprecision::gcd(BigInt(a), BigInt(781)) != 1) { continue; }
    ++count;
    tally.expect_report(verify_example5(a));
  }
  return tally.result(std::to_string(count) + " values of a");
}

Result criterion_a3b3()
{
  Tally tally;
  tally.expect_report(verify_example_a3b3());
  return tally.result("n=4 a=3 b=3 under the second order");
}

Result criterion_n4_listing()
{
  Tally tally;
  int const a = 1;
  int const b = 3;
  auto const p = InstanceParams::make(a, b, 4);
  Grading const grading = weight_grading(p);
  auto const oracle = analyze_minimal_generators(toric_ideal(grading).elements, grading);
  tally.expect(oracle.unique, "oracle reports a non-unique minimal system");
  tally.expect(canonical_set(oracle.generators) == canonical_set(printed_n4_generators(a, b)),
               "oracle generators differ from the printed six");
  tally.expect_report(verify_example_n4_minors(a, b));
  return tally.result("n=4 a=1 b=3");
}

Result criterion_lemmas()
{
  Tally tally;
  std::mt19937 rng(781);
  std::uniform_int_distribution<int> param(1, 12);
  std::uniform_int_distribution<int> length(2, 12);
  std::uniform_int_distribution<int> index(1, 50);
  for (int trial = 0; trial < 10000; ++trial) {
    auto const p = InstanceParams::make(param(rng), param(rng), length(rng));
    int const j = index(rng);
    int const k = index(rng);
    tally.expect(lemma2_holds(p, j, k), "lemma2 a=" + std::to_string(p.a) + " b=" + std::to_string(p.b) +
                                          " n=" + std::to_string(p.n) + " j=" + std::to_string(j) +
                                          " k=" + std::to_string(k));
  }
  std::size_t triples = 0;
  for (int n = 3; n <= 8; ++n) {
    for (int b = 2; b <= 4; ++b) {
      for (int a = 1; a <= 3; ++a) {
        auto const p = InstanceParams::make(a, b, n);
        auto x = [&](int var, int power) { return Monomial::variable(n, var - 1, power); };
        for (int i = 1; i <= n; ++i) {
          MatrixOrder const order = order_i(p, i);
          for (int j = 1; j <= n - 2; ++j) {
            for (int k = j + 1; k <= n - 1; ++k, ++triples) {
              bool const smaller = compare(order, x(j, b) * x(k + 1, 1), x(j + 1, 1) * x(k, b)) < 0;
              tally.expect(smaller == lemma3_predicate(n, i, j, k),
                           "lemma3 n=" + std::to_string(n) + " i=" + std::to_string(i) + " j=" + std::to_string(j) +
                             " k=" + std::to_string(k));
            }
          }
        }
      }
    }
  }
  return tally.result("10000 random lemma2 cases, " + std::to_string(triples) + " lemma3 comparisons");
}

// Every instance touched by the criteria above.
std::vector<Instance> touched_instances()
{
  auto grid = theorem_grid();
  for (int a = 1; a <= 3; ++a) { grid.push_back({a, 5, 5}); }
  grid.push_back({3, 2, 4}); // already in the grid, kept for clarity
  grid.push_back({3, 3, 4});
  grid.push_back({1, 3, 4});
  std::sort(grid.begin(), grid.end(), [](Instance const &l, Instance const &r) {
    return std::tie(l.n, l.b, l.a) < std::tie(r.n, r.b, r.a);
  });
  grid.erase(std::unique(grid.begin(), grid.end(),
                         [](Instance const &l, Instance const &r) {
                           return std::tie(l.n, l.b, l.a) == std::tie(r.n, r.b, r.a);
                         }),
             grid.end());
  return grid;
}

Result criterion_self_consistency()
{
  Tally tally;
  std::mt19937 rng(2718);
  auto const instances = touched_instances();
  for (auto const [a, b, n] : instances) {
    auto const p = InstanceParams::make(a, b, n);
    std::string const tag = " a=" + std::to_string(a) + " b=" + std::to_string(b) + " n=" + std::to_string(n);
    Grading const weights = weight_grading(p);
    Grading const projective = projective_grading(p);

    // Reduced bases do not depend on the order in which generators arrive.
    for (int i = 1; i <= n; ++i) {
      MatrixOrder const order = order_i(p, i);
      for (auto gens : {minors_X(p).binomials, minors_Y(p).binomials}) {
        auto const reference = reduced_groebner_basis(gens, order).elements;
        for (int shuffle = 0; shuffle < 2; ++shuffle) {
          std::shuffle(gens.begin(), gens.end(), rng);
          tally.expect(reduced_groebner_basis(gens, order).elements == reference,
                       "shuffled reduced basis" + tag + " i=" + std::to_string(i));
        }
      }
    }
    if (n == 5 && b == 5) {
      MatrixOrder const order = example5_order(generators(p));
      auto gens = minors_Y(p).binomials;
      auto const reference = reduced_groebner_basis(gens, order).elements;
      std::shuffle(gens.begin(), gens.end(), rng);
      tally.expect(reduced_groebner_basis(gens, order).elements == reference, "shuffled example5 basis" + tag);
    }

    // Saturation is idempotent.
    MatrixOrder const order = order_i(p, 1);
    auto const sat_l = saturate_torus(lattice_binomials(lattice_L(p)), weights);
    tally.expect(ideal_equal(saturate_torus(sat_l, weights), sat_l, order), "I_L saturation idempotence" + tag);
    auto const sat_c = saturate_torus(lattice_binomials(lattice_C(p)), projective);
    tally.expect(ideal_equal(saturate_torus(sat_c, projective), sat_c, order), "I_C saturation idempotence" + tag);
    auto const toric = toric_ideal(weights, order);
    tally.expect(ideal_equal(saturate_torus(toric.elements, weights), toric.elements, order),
                 "toric ideal saturated" + tag);

    // Oracle and pruning agree on the number of minimal generators.
    auto const prune_agrees = [&](std::vector<Binomial> const &gens, Grading const &grading, char const *what) {
      std::size_t const oracle = analyze_minimal_generators(gens, grading).total();
      std::size_t const pruned = minimalize_generators(gens, order).size();
      tally.expect(oracle == pruned, std::string(what) + tag + " oracle " + std::to_string(oracle) + " vs pruned " +
                                       std::to_string(pruned));
    };
    prune_agrees(minors_X(p).binomials, weights, "minors of X");
    prune_agrees(minors_Y(p).binomials, projective, "minors of Y");
    prune_agrees(toric.elements, weights, "toric ideal basis");
  }
  return tally.result(std::to_string(instances.size()) + " instances");
}

} // namespace

int main()
{
  struct Criterion
  {
    int id;
    char const *title;
    std::function<Result()> run;
  };
  std::vector<Criterion> const criteria{
    {1, "G_Y is the reduced Groebner basis of the minors of Y", criterion_prop_gb1},
    {2, "G is a minimal Groebner basis of the minors of X", criterion_thm_gb2},
    {3, "minors of Y define the projective curve, unique minimal system", criterion_cor_gb1},
    {4, "minors of X define the affine curve; uniqueness iff a < b-1", criterion_cor_gb2},
    {5, "gcd 3 example: 4 versus 6 minimal generators", criterion_gcd_example},
    {6, "example order: reduced basis of 8 elements", criterion_example5},
    {7, "n=4 a=3 b=3: reduced basis element outside the minors", criterion_a3b3},
    {8, "n=4 listing equals the oracle minimal system", criterion_n4_listing},
    {9, "shift identity and order predicate, randomized", criterion_lemmas},
    {10, "engine self-consistency", criterion_self_consistency},
  };

  int failed = 0;
  for (auto const &c : criteria) {
    auto const start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.run();
    } catch (std::exception const &e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    double const secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += r.ok ? 0 : 1;
    std::cout << "criterion " << std::setw(2) << c.id << " [" << (r.ok ? "PASS" : "FAIL") << "] " << c.title << ": "
              << r.detail << " (" << std::fixed << std::setprecision(2) << secs << " s)" << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
