#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace rtoric {

/// Inclusive integer range parsed from "k" or "lo..hi"; empty when hi < lo.
struct IntRange
{
  int lo = 0;
  int hi = -1;

  bool empty() const { return hi < lo; }
};

IntRange parse_range(std::string const &text);

struct SweepRow
{
  int a = 0;
  int b = 0;
  int n = 0;
  std::string gcd;
  bool coprime = false;
  std::size_t generators = 0;
  bool unique = false;
  bool predicate = false;
  std::optional<bool> agreement; // set only where the prediction applies
};

/// One row per (a, b, n) in lexicographic (n, b, a) order, computed on
/// `workers` threads. Invalid parameter combinations are skipped.
std::vector<SweepRow> run_sweep(IntRange a, IntRange b, IntRange n, unsigned workers = 0);
std::string render_sweep(std::vector<SweepRow> const &rows, bool json);

/// Entry point behind the `repunit-toric` executable; args exclude argv[0].
int run_cli(std::vector<std::string> args, std::ostream &out, std::ostream &err);

} // namespace rtoric
