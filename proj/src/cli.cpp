#include "rtoric/cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rtoric/fiber.hpp"
#include "rtoric/verify.hpp"

namespace rtoric {

namespace {

constexpr int kUsageError = 2;

struct UsageError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

struct Options
{
  std::string a;
  std::string b;
  std::string n;
  std::optional<int> i;
  bool all_i = false;
  std::string claim;
  std::string format = "text";
  bool trace = false;
  std::string out_path;
  std::string source = "minors-x";
  std::string order = "prec";
};

int single_value(std::string const &text, char const *name)
{
  if (text.empty()) { throw UsageError(std::string("missing --") + name); }
  IntRange const r = parse_range(text);
  if (r.lo != r.hi) { throw UsageError(std::string("--") + name + " takes a single value here"); }
  return r.lo;
}

InstanceParams instance_from(Options const &o)
{
  return InstanceParams::make(single_value(o.a, "a"), single_value(o.b, "b"), single_value(o.n, "n"));
}

bool json_format(Options const &o)
{
  if (o.format == "text") { return false; }
  if (o.format == "json-like" || o.format == "json") { return true; }
  throw UsageError("unknown --format: " + o.format);
}

BuchbergerOptions trace_options(Options const &o, std::ostream &err)
{
  BuchbergerOptions options;
  if (o.trace) {
    options.trace = [&err](SPairEvent const &e) {
      err << "spair (" << e.first << "," << e.second << ") lcm=" << to_string(e.lcm);
      if (e.coprime_skip) {
        err << " skip:coprime";
      } else if (e.reduced_to_zero) {
        err << " zero";
      } else {
        err << " new:" << e.appended;
      }
      err << '\n';
    };
  }
  return options;
}

std::string join_vector(BigVector const &v, char const *sep = ",")
{
  std::ostringstream s;
  for (Index k = 0; k < v.size(); ++k) { s << (k ? sep : "") << v(k); }
  return s.str();
}

// ---- info ------------------------------------------------------------------

int cmd_info(Options const &o, std::ostream &out)
{
  auto const p = instance_from(o);
  BigVector const gens = generators(p);
  BigInt const g = gcd_of_generators(p);
  BigInt const r = repunit(p.b, p.n);
  bool const predicate = p.a < p.b - 1;
  if (json_format(o)) {
    nlohmann::json j;
    j["a"] = p.a;
    j["b"] = p.b;
    j["n"] = p.n;
    j["generators"] = nlohmann::json::array();
    for (Index k = 0; k < gens.size(); ++k) { j["generators"].push_back(gens(k).str()); }
    j["gcd"] = g.str();
    j["repunit"] = r.str();
    j["coprime"] = g == 1;
    j["unique_prediction"] = p.n > 3 ? nlohmann::json(predicate) : nlohmann::json(nullptr);
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "instance a=" << p.a << " b=" << p.b << " n=" << p.n << '\n';
  out << "generators: " << join_vector(gens, ", ") << '\n';
  out << "r_b(n): " << r << '\n';
  out << "gcd(a, r_b(n)): " << g << '\n';
  out << "coprime: " << (g == 1 ? "yes" : "no") << '\n';
  out << "unique minimal system predicted (a < b-1): ";
  if (p.n > 3) {
    out << (predicate ? "yes" : "no") << '\n';
  } else {
    out << "not asserted for n <= 3\n";
  }
  return 0;
}

// ---- verify ----------------------------------------------------------------

std::vector<int> order_indices(Options const &o, int n)
{
  if (o.i && o.all_i) { throw UsageError("--i and --all-i are mutually exclusive"); }
  if (o.i) { return {*o.i}; }
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) { all[static_cast<std::size_t>(k)] = k + 1; }
  return all;
}

std::vector<VerificationReport> run_verify(Options const &o, std::ostream &err)
{
  std::string const &claim = o.claim;
  if (claim.empty()) { throw UsageError("verify needs a claim name"); }
  if (!is_claim_name(claim)) { throw UsageError("unknown claim: " + claim); }
  auto const options = trace_options(o, err);

  if (claim == "example5") { return {verify_example5(o.a.empty() ? 1 : single_value(o.a, "a"))}; }
  if (claim == "example-gcd3") { return {verify_example_gcd3()}; }
  if (claim == "example-a3b3") { return {verify_example_a3b3()}; }
  if (claim == "example-n4-minors") {
    return {verify_example_n4_minors(o.a.empty() ? 1 : single_value(o.a, "a"), o.b.empty() ? 3 : single_value(o.b, "b"))};
  }

  auto const p = instance_from(o);
  if (claim == "lemma2") { return {verify_lemma2(p)}; }
  if (claim == "lemma3") { return {verify_lemma3(p)}; }
  if (claim == "cor-gb1") { return {verify_cor_gb1(p)}; }
  if (claim == "cor-gb2") { return {verify_cor_gb2(p)}; }

  std::vector<VerificationReport> reports;
  for (int i : order_indices(o, p.n)) {
    reports.push_back(claim == "prop-gb1" ? verify_prop_gb1(p, i, options) : verify_thm_gb2(p, i, options));
  }
  return reports;
}

int cmd_verify(Options const &o, std::ostream &out, std::ostream &err)
{
  bool const json = json_format(o);
  std::vector<VerificationReport> reports;
  try {
    reports = run_verify(o, err);
  } catch (std::invalid_argument const &e) {
    // Invalid instance parameters.
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  out << (json ? render_json(reports) : render_text(reports));
  return exit_code(reports);
}

// ---- groebner / betti / unique ----------------------------------------------

struct Source
{
  std::vector<Binomial> gens;
  Grading grading;
  bool toric = false;
};

Source make_source(Options const &o, InstanceParams const &p)
{
  if (o.source == "minors-x") { return {minors_X(p).binomials, weight_grading(p), false}; }
  if (o.source == "minors-y") { return {minors_Y(p).binomials, projective_grading(p), false}; }
  if (o.source == "toric-i") { return {{}, weight_grading(p), true}; }
  if (o.source == "toric-j") { return {{}, projective_grading(p), true}; }
  throw UsageError("unknown --source: " + o.source);
}

MatrixOrder make_order(Options const &o, InstanceParams const &p)
{
  if (o.order == "example5") {
    if (p.n != 5) { throw UsageError("example5 order requires n = 5"); }
    return example5_order(generators(p));
  }
  int i = 1;
  if (o.order == "prec") {
    i = o.i.value_or(1);
  } else if (o.order.rfind("prec-", 0) == 0) {
    try {
      std::size_t used = 0;
      i = std::stoi(o.order.substr(5), &used);
      if (used != o.order.size() - 5) { throw std::invalid_argument("trailing"); }
    } catch (std::exception const &) {
      throw UsageError("bad --order: " + o.order);
    }
  } else {
    throw UsageError("unknown --order: " + o.order);
  }
  if (i < 1 || i > p.n) { throw UsageError("order index must lie in 1..n"); }
  return order_i(p, i);
}

std::vector<Binomial> source_basis(Source const &s, MatrixOrder const &order, BuchbergerOptions const &options)
{
  if (s.toric) { return toric_ideal(s.grading, order).elements; }
  return reduced_groebner_basis(s.gens, order, options).elements;
}

int cmd_groebner(Options const &o, std::ostream &out, std::ostream &err)
{
  auto const p = instance_from(o);
  auto const source = make_source(o, p);
  auto const order = make_order(o, p);
  auto const basis = source_basis(source, order, trace_options(o, err));
  // Leading term first, sorted by leading term.
  std::vector<Binomial> listing;
  for (auto const &f : basis) { listing.push_back(f.oriented_by(order)); }
  std::sort(listing.begin(), listing.end(),
            [&](Binomial const &l, Binomial const &r) { return order.less(l.lead(), r.lead()); });
  bool const minimal = is_minimal(basis);
  bool const reduced = is_reduced(basis);
  if (json_format(o)) {
    nlohmann::json j;
    j["source"] = o.source;
    j["order"] = o.order;
    j["basis"] = nlohmann::json::array();
    for (auto const &f : listing) { j["basis"].push_back(to_string(f)); }
    j["cardinality"] = listing.size();
    j["minimal"] = minimal;
    j["reduced"] = reduced;
    out << j.dump(2) << '\n';
    return 0;
  }
  for (auto const &f : listing) { out << to_string(f) << '\n'; }
  out << "cardinality: " << listing.size() << '\n';
  out << "minimal: " << (minimal ? "yes" : "no") << '\n';
  out << "reduced: " << (reduced ? "yes" : "no") << '\n';
  return 0;
}

MinimalGenerators analyze_source(Options const &o, InstanceParams const &p)
{
  auto const source = make_source(o, p);
  auto const order = order_i(p, 1);
  std::vector<Binomial> const gens = source.toric ? toric_ideal(source.grading, order).elements : source.gens;
  return analyze_minimal_generators(gens, source.grading);
}

int cmd_betti(Options const &o, std::ostream &out)
{
  auto const p = instance_from(o);
  auto const result = analyze_source(o, p);
  if (json_format(o)) {
    nlohmann::json j = nlohmann::json::array();
    for (auto const &d : result.betti) {
      nlohmann::json degree = nlohmann::json::array();
      for (Index k = 0; k < d.degree.size(); ++k) { degree.push_back(d.degree(k).str()); }
      j.push_back({{"degree", degree}, {"count", d.count}});
    }
    out << j.dump(2) << '\n';
    return 0;
  }
  for (auto const &d : result.betti) { out << "degree (" << join_vector(d.degree) << "): " << d.count << '\n'; }
  out << "total: " << result.total() << '\n';
  return 0;
}

int cmd_unique(Options const &o, std::ostream &out)
{
  auto const p = instance_from(o);
  auto const result = analyze_source(o, p);
  if (json_format(o)) {
    nlohmann::json j;
    j["unique"] = result.unique;
    j["count"] = result.total();
    j["generators"] = nlohmann::json::array();
    for (auto const &g : result.generators) { j["generators"].push_back(to_string(g)); }
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "unique: " << (result.unique ? "yes" : "no") << '\n';
  out << "minimal generators: " << result.total() << '\n';
  for (auto const &g : result.generators) { out << "  " << to_string(g) << '\n'; }
  return 0;
}

// ---- sweep -----------------------------------------------------------------

SweepRow sweep_row(InstanceParams const &p)
{
  SweepRow row;
  row.a = p.a;
  row.b = p.b;
  row.n = p.n;
  BigInt const g = gcd_of_generators(p);
  row.gcd = g.str();
  row.coprime = g == 1;
  Grading const grading = weight_grading(p);
  auto const result = analyze_minimal_generators(toric_ideal(grading).elements, grading);
  row.generators = result.total();
  row.unique = result.unique;
  row.predicate = p.a < p.b - 1;
  if (row.coprime && p.n > 3 && p.b >= 2) { row.agreement = row.unique == row.predicate; }
  return row;
}

int cmd_sweep(Options const &o, std::ostream &out)
{
  auto const range = [](std::string const &text, char const *name) {
    if (text.empty()) { throw UsageError(std::string("missing --") + name); }
    return parse_range(text);
  };
  auto const rows = run_sweep(range(o.a, "a"), range(o.b, "b"), range(o.n, "n"));
  out << render_sweep(rows, json_format(o));
  return 0;
}

int dispatch(std::string const &command, Options const &o, std::ostream &out, std::ostream &err)
{
  if (command == "info") { return cmd_info(o, out); }
  if (command == "verify") { return cmd_verify(o, out, err); }
  if (command == "sweep") { return cmd_sweep(o, out); }
  if (command == "groebner") { return cmd_groebner(o, out, err); }
  if (command == "betti") { return cmd_betti(o, out); }
  if (command == "unique") { return cmd_unique(o, out); }
  throw UsageError("unknown command: " + command);
}

} // namespace

IntRange parse_range(std::string const &text)
{
  auto const to_int = [&](std::string const &s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (std::exception const &) {
      throw UsageError("bad integer range: " + text);
    }
    if (used != s.size()) { throw UsageError("bad integer range: " + text); }
    return v;
  };
  auto const dots = text.find("..");
  if (dots == std::string::npos) {
    int const v = to_int(text);
    return {v, v};
  }
  return {to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
}

std::vector<SweepRow> run_sweep(IntRange a, IntRange b, IntRange n, unsigned workers)
{
  std::vector<InstanceParams> instances;
  for (int nn = n.lo; nn <= n.hi; ++nn) {
    for (int bb = b.lo; bb <= b.hi; ++bb) {
      for (int aa = a.lo; aa <= a.hi; ++aa) {
        try {
          instances.push_back(InstanceParams::make(aa, bb, nn));
        } catch (std::invalid_argument const &) {
          // outside the parameter domain
        }
      }
    }
  }

  std::vector<SweepRow> rows(instances.size());
  std::vector<std::exception_ptr> errors(instances.size());
  std::atomic<std::size_t> next{0};
  auto const worker = [&] {
    for (std::size_t k = next++; k < instances.size(); k = next++) {
      try {
        rows[k] = sweep_row(instances[k]);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  if (workers == 0) { workers = std::max(1u, std::thread::hardware_concurrency()); }
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, instances.size())));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < workers; ++t) { pool.emplace_back(worker); }
  worker();
  pool.clear();
  for (auto const &e : errors) {
    if (e) { std::rethrow_exception(e); }
  }
  return rows;
}

std::string render_sweep(std::vector<SweepRow> const &rows, bool json)
{
  auto const flag = [](bool v) { return v ? "yes" : "no"; };
  std::ostringstream out;
  if (json) {
    nlohmann::json j = nlohmann::json::array();
    for (auto const &r : rows) {
      j.push_back({{"a", r.a},
                   {"b", r.b},
                   {"n", r.n},
                   {"gcd", r.gcd},
                   {"coprime", r.coprime},
                   {"generators", r.generators},
                   {"unique", r.unique},
                   {"a_lt_b_minus_1", r.predicate},
                   {"agreement", r.agreement ? nlohmann::json(*r.agreement) : nlohmann::json(nullptr)}});
    }
    out << j.dump(2) << '\n';
    return out.str();
  }
  out << "a\tb\tn\tgcd\tcoprime\tgenerators\tunique\ta<b-1\tagreement\n";
  for (auto const &r : rows) {
    out << r.a << '\t' << r.b << '\t' << r.n << '\t' << r.gcd << '\t' << flag(r.coprime) << '\t' << r.generators
        << '\t' << flag(r.unique) << '\t' << flag(r.predicate) << '\t'
        << (r.agreement ? flag(*r.agreement) : "-") << '\n';
  }
  return out.str();
}

int run_cli(std::vector<std::string> args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Exact toric ideals of generalized repunit monomial curves", "repunit-toric"};
  app.require_subcommand(1, 1);
  Options o;
  std::string positional_claim;

  app.add_option("--a", o.a, "parameter a (sweep accepts lo..hi)");
  app.add_option("--b", o.b, "parameter b (sweep accepts lo..hi)");
  app.add_option("--n", o.n, "number of generators (sweep accepts lo..hi)");
  auto *opt_i = app.add_option("--i", o.i, "order index for the i-th order");
  app.add_flag("--all-i", o.all_i, "run for every order index")->excludes(opt_i);
  app.add_option("--claim", o.claim, "claim name for verify");
  app.add_option("--format", o.format, "text or json-like")->capture_default_str();
  app.add_flag("--trace", o.trace, "print S-pair events to stderr");
  app.add_option("--out", o.out_path, "write the report to PATH instead of stdout");
  app.add_option("--source", o.source, "minors-x, minors-y, toric-i or toric-j")->capture_default_str();
  app.add_option("--order", o.order, "prec (with --i), prec-K or example5")->capture_default_str();

  for (auto const &[name, help] : std::vector<std::pair<char const *, char const *>>{
         {"info", "instance summary"},
         {"verify", "verify a named claim"},
         {"sweep", "oracle table over parameter ranges"},
         {"groebner", "reduced Groebner basis listing"},
         {"betti", "degrees of minimal generators"},
         {"unique", "uniqueness of the minimal generating system"}}) {
    auto *sub = app.add_subcommand(name, help);
    sub->fallthrough();
    if (std::string(name) == "verify") { sub->add_option("claim", positional_claim, "claim name"); }
  }

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (CLI::CallForHelp const &) {
    out << app.help();
    return 0;
  } catch (CLI::ParseError const &e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  std::string const command = app.get_subcommands().front()->get_name();
  if (!positional_claim.empty()) {
    if (!o.claim.empty() && o.claim != positional_claim) {
      err << "usage error: conflicting claim names\n";
      return kUsageError;
    }
    o.claim = positional_claim;
  }

  std::ofstream file;
  std::ostream *sink = &out;
  if (!o.out_path.empty()) {
    file.open(o.out_path);
    if (!file) {
      err << "error: cannot open " << o.out_path << '\n';
      return kUsageError;
    }
    sink = &file;
  }

  try {
    return dispatch(command, o, *sink, err);
  } catch (UsageError const &e) {
    err << "usage error: " << e.what() << '\n';
  } catch (std::invalid_argument const &e) {
    err << "error: " << e.what() << '\n';
  } catch (std::exception const &e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return kUsageError;
}

} // namespace rtoric
