#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "int_list.hpp"
#include "lucasres/lucasres.h"

using nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct Global {
  bool tsv = false;
  bool deterministic = false;
  int verbosity = 0;
};

// Raised for anything that should print the subcommand help and exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A library call that failed; carries the exit code it maps to.
struct LibraryError : std::runtime_error {
  LibraryError(lr_status s, const std::string& what) : std::runtime_error(what), status(s) {}
  lr_status status;
};

void check(lr_status s) {
  if (s == LR_OK) return;
  std::string msg = lr_status_string(s);
  if (*lr_last_error() != '\0') msg += std::string(": ") + lr_last_error();
  throw LibraryError(s, msg);
}

int exit_code_for(lr_status s) {
  switch (s) {
    case LR_ERR_DIVISIBILITY:
    case LR_ERR_INEXACT_DIVISION:
    case LR_ERR_INTERNAL:
      return kFailure;
    default:
      return kUsage;
  }
}

struct CString {
  char* p = nullptr;
  ~CString() { lr_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  ~Handle() { Free(p); }
};

using Reports = Handle<lr_reports, lr_reports_free>;
using ScanResult = Handle<lr_scan_result, lr_scan_result_free>;
using CheckArgs = Handle<lr_check_args, lr_check_args_free>;
using Poly = Handle<lr_poly, lr_poly_free>;

std::uint64_t u64_arg(const std::string& text, const char* name) {
  auto v = cli::parse_u64(text);
  if (!v) throw UsageError(std::string("--") + name + " expects a non-negative 64-bit integer, got '" + text + "'");
  return *v;
}

std::string int_arg(const std::string& text, const char* name) {
  if (!cli::is_integer(text)) throw UsageError(std::string("--") + name + " expects an integer, got '" + text + "'");
  return text;
}

std::string report_tsv(const ordered_json& r) {
  std::string line = r.value("check", "") + '\t' + r.value("p", "") + '\t';
  line += (r["a"].is_null() ? std::string("-") : r["a"].get<std::string>()) + '\t';
  line += r.value("outcome", "") + '\t';
  line += (r["lhs"].is_null() ? std::string("-") : r["lhs"].get<std::string>()) + '\t';
  line += (r["rhs"].is_null() ? std::string("-") : r["rhs"].get<std::string>()) + '\t';
  line += r["modulus"].is_null() ? std::string("-") : r["modulus"].get<std::string>();
  return line;
}

constexpr const char* kReportHeader = "check\tp\ta\toutcome\tlhs\trhs\tmodulus";

// ---- sum / delta

struct SumArgs {
  std::string n, m, r, a, strategy = "direct";
};

void add_sum_options(CLI::App* sub, SumArgs& args) {
  sub->add_option("--n", args.n, "row index, n >= 1")->required();
  sub->add_option("--m", args.m, "modulus of the residue class, m >= 1")->required();
  sub->add_option("--r", args.r, "residue class (any integer)")->required();
  sub->add_option("--a", args.a, "weight a; negative values as --a=-2")->required();
  sub->add_option("--strategy", args.strategy, "direct, recur or closed")->capture_default_str();
}

int run_sum(const Global& g, const SumArgs& args, bool delta) {
  const std::uint64_t n = u64_arg(args.n, "n");
  const std::uint64_t m = u64_arg(args.m, "m");
  int_arg(args.r, "r");
  int_arg(args.a, "a");
  lr_strategy strategy;
  if (lr_parse_strategy(args.strategy.c_str(), &strategy) != LR_OK)
    throw UsageError("unknown strategy '" + args.strategy + "'");
  CString value;
  check(delta ? lr_delta(n, m, args.r.c_str(), args.a.c_str(), strategy, &value.p)
              : lr_residue_sum(n, m, args.r.c_str(), args.a.c_str(), strategy, &value.p));
  if (g.tsv) {
    std::cout << "n\tm\tr\ta\tstrategy\tvalue\n"
              << args.n << '\t' << args.m << '\t' << args.r << '\t' << args.a << '\t' << args.strategy << '\t'
              << value.str() << '\n';
  } else {
    ordered_json j;
    j["spec"] = {{"n", args.n}, {"m", args.m}, {"r", args.r}, {"a", args.a}};
    j["strategy"] = args.strategy;
    j["value"] = value.str();
    std::cout << j.dump() << '\n';
  }
  return kOk;
}

// ---- poly

struct PolyArgs {
  std::string kind = "G", n, a;
  bool check = false;
};

int print_reports(const Global& g, const lr_reports* reports, bool all) {
  bool failed = false;
  if (g.tsv) std::cout << kReportHeader << '\n';
  for (std::size_t i = 0; i < lr_reports_count(reports); ++i) {
    const bool fail = lr_reports_outcome(reports, i) == LR_FAIL;
    failed |= fail;
    if (!all && !fail) continue;
    const char* line = lr_reports_json(reports, i);
    if (g.tsv)
      std::cout << report_tsv(ordered_json::parse(line)) << '\n';
    else
      std::cout << line << '\n';
  }
  return failed ? kFailure : kOk;
}

int run_poly(const Global& g, const PolyArgs& args) {
  lr_poly_kind kind;
  if (args.kind == "G" || args.kind == "g")
    kind = LR_POLY_G;
  else if (args.kind == "Q" || args.kind == "q")
    kind = LR_POLY_Q;
  else
    throw UsageError("--kind must be G or Q");
  const std::uint64_t n = u64_arg(args.n, "n");
  int_arg(args.a, "a");
  if (args.check) {
    Reports reports;
    check(lr_poly_check(kind, n, args.a.c_str(), &reports.p));
    return print_reports(g, reports.p, true);
  }
  Poly poly;
  check(lr_poly_new(kind, n, args.a.c_str(), &poly.p));
  const long degree = lr_poly_degree(poly.p);
  if (g.tsv) {
    std::cout << "power\tcoeff\n";
    for (long i = 0; i <= degree; ++i) std::cout << i << '\t' << lr_poly_coeff(poly.p, i) << '\n';
  } else {
    ordered_json j;
    j["kind"] = kind == LR_POLY_G ? "G" : "Q";
    j["n"] = args.n;
    j["a"] = args.a;
    j["degree"] = degree;
    ordered_json coeffs = ordered_json::array();
    for (long i = 0; i <= degree; ++i) coeffs.push_back(lr_poly_coeff(poly.p, i));
    j["coeffs"] = std::move(coeffs);
    std::cout << j.dump() << '\n';
  }
  return kOk;
}

// ---- quotient

struct QuotientArgs {
  std::string p;
  std::optional<std::string> A, B, x;
};

int run_quotient(const Global& g, const QuotientArgs& args) {
  const std::uint64_t p = u64_arg(args.p, "p");
  ordered_json j;
  j["p"] = args.p;
  if (args.x) {
    if (args.A || args.B) throw UsageError("--x excludes --A/--B");
    int_arg(*args.x, "x");
    std::uint64_t q = 0;
    check(lr_fermat_quotient(p, args.x->c_str(), &q));
    j["kind"] = "fermat";
    j["x"] = *args.x;
    j["quotient"] = std::to_string(q);
  } else {
    if (!args.A || !args.B) throw UsageError("give --A and --B, or --x");
    int_arg(*args.A, "A");
    int_arg(*args.B, "B");
    int eps = 0;
    std::uint64_t q = 0;
    check(lr_lucas_epsilon(args.A->c_str(), args.B->c_str(), p, &eps));
    check(lr_lucas_quotient(args.A->c_str(), args.B->c_str(), p, &q));
    j["kind"] = "lucas";
    j["A"] = *args.A;
    j["B"] = *args.B;
    j["epsilon"] = eps;
    j["quotient"] = std::to_string(q);
  }
  if (g.tsv) {
    bool first = true;
    for (const auto& [k, v] : j.items()) std::cout << (first ? "" : "\t") << k, first = false;
    std::cout << '\n';
    first = true;
    for (const auto& [k, v] : j.items())
      std::cout << (first ? "" : "\t") << (v.is_string() ? v.get<std::string>() : v.dump()), first = false;
    std::cout << '\n';
  } else {
    std::cout << j.dump() << '\n';
  }
  return kOk;
}

// ---- verify / scan

struct SweepArgs {
  std::string check;
  std::optional<std::string> a;
  std::optional<std::string> a_set;
  std::optional<std::string> p, p_min, p_max;
  std::optional<std::string> A, B;
  std::optional<std::string> m_list;
  std::optional<std::string> checkpoint;
  unsigned threads = 0;
  std::uint64_t segment_size = 0;
};

struct WallArgs {
  std::string A, B, from, to;
  std::optional<std::string> checkpoint;
  unsigned threads = 0;
  std::uint64_t segment_size = 0;
};

void add_scan_options(CLI::App* sub, std::optional<std::string>& checkpoint, unsigned& threads,
                      std::uint64_t& segment_size) {
  sub->add_option("--checkpoint", checkpoint, "append progress here; resume from its last line");
  sub->add_option("--threads", threads, "worker threads (0: LUCAS_RESIDUE_THREADS or all cores)");
  sub->add_option("--segment-size", segment_size, "sieve segment length (0: default)");
}

lr_scan_config scan_config(const std::optional<std::string>& checkpoint, unsigned threads,
                           std::uint64_t segment_size) {
  lr_scan_config config{};
  config.segment_size = segment_size;
  config.threads = threads;
  config.checkpoint = checkpoint ? checkpoint->c_str() : nullptr;
  return config;
}

int print_scan(const Global& g, lr_scan_result* result, bool all_reports) {
  const std::size_t hits = lr_scan_result_hit_count(result);
  if (g.tsv) {
    std::cout << kReportHeader << '\n';
    const std::size_t n = all_reports ? lr_scan_result_report_count(result) : hits;
    for (std::size_t i = 0; i < n; ++i) {
      const char* line = all_reports ? lr_scan_result_report_json(result, i) : lr_scan_result_hit_json(result, i);
      std::cout << report_tsv(ordered_json::parse(line)) << '\n';
    }
  } else if (all_reports) {
    for (std::size_t i = 0; i < lr_scan_result_report_count(result); ++i)
      std::cout << lr_scan_result_report_json(result, i) << '\n';
  } else {
    for (std::size_t i = 0; i < hits; ++i) std::cout << lr_scan_result_hit_json(result, i) << '\n';
  }
  const char* summary = lr_scan_result_summary(result, g.deterministic ? 0 : 1);
  if (g.tsv)
    std::cout << "# " << summary << '\n';
  else
    std::cout << summary << '\n';
  return hits == 0 ? kOk : kFailure;
}

int run_sweep(const Global& g, const SweepArgs& args, std::uint64_t lo, std::uint64_t hi) {
  const int a_free = lr_check_is_a_free(args.check.c_str());
  if (a_free < 0) throw UsageError("unknown check '" + args.check + "'");

  CheckArgs check_args;
  check_args.p = lr_check_args_new();
  if (check_args.p == nullptr) throw LibraryError(LR_ERR_INTERNAL, "out of memory");
  if (args.A || args.B) {
    if (!args.A || !args.B) throw UsageError("--A and --B go together");
    check(lr_check_args_set_params(check_args.p, int_arg(*args.A, "A").c_str(), int_arg(*args.B, "B").c_str()));
  }
  if (args.m_list) {
    for (const auto& m : cli::parse_int_list(*args.m_list)) check(lr_check_args_add_m(check_args.p, u64_arg(m, "m")));
  }

  std::vector<std::string> a_values;
  if (args.a && args.a_set) throw UsageError("--a and --a-set are exclusive");
  if (args.a) a_values.push_back(int_arg(*args.a, "a"));
  if (args.a_set) a_values = cli::parse_int_list(*args.a_set);
  const bool explicit_params = args.A.has_value() && args.check == "quotient_v";
  if (a_free == 0 && !explicit_params && !args.a && !args.a_set)
    throw UsageError("check '" + args.check + "' needs --a or --a-set");

  std::vector<const char*> ptrs;
  for (const auto& a : a_values) ptrs.push_back(a.c_str());
  const lr_scan_config config = scan_config(args.checkpoint, args.threads, args.segment_size);
  if (g.verbosity > 0)
    std::cerr << "sweep " << args.check << " over [" << lo << ", " << hi << "], " << a_values.size()
              << " value(s) of a\n";
  ScanResult result;
  check(lr_verify_sweep(args.check.c_str(), ptrs.data(), ptrs.size(), lo, hi, check_args.p, &config, &result.p));
  return print_scan(g, result.p, g.verbosity > 0);
}

int run_verify(const Global& g, const SweepArgs& args) {
  std::uint64_t lo = 3, hi = 0;
  if (args.p) {
    if (args.p_min || args.p_max) throw UsageError("--p excludes --p-min/--p-max");
    lo = hi = u64_arg(*args.p, "p");
    std::uint64_t* primes = nullptr;
    std::size_t count = 0;
    if (lo < 3 || lr_primes(lo, lo, &primes, &count) != LR_OK || count != 1) {
      lr_primes_free(primes);
      throw UsageError("--p must be an odd prime");
    }
    lr_primes_free(primes);
  } else {
    if (!args.p_max) throw UsageError("give --p or --p-max");
    if (args.p_min) lo = u64_arg(*args.p_min, "p-min");
    hi = u64_arg(*args.p_max, "p-max");
    if (lo < 3) lo = 3;
    if (hi < lo) throw UsageError("--p-max must be at least --p-min and 3");
  }
  return run_sweep(g, args, lo, hi);
}

int run_scan_verify(const Global& g, const SweepArgs& args) {
  const std::uint64_t lo = u64_arg(*args.p_min, "from");
  const std::uint64_t hi = u64_arg(*args.p_max, "to");
  if (lo < 3 || hi < lo) throw UsageError("need 3 <= --from <= --to");
  return run_sweep(g, args, lo, hi);
}

int run_scan_wall(const Global& g, const WallArgs& args) {
  const std::uint64_t lo = u64_arg(args.from, "from");
  const std::uint64_t hi = u64_arg(args.to, "to");
  if (lo < 3 || hi < lo) throw UsageError("need 3 <= --from <= --to");
  int_arg(args.A, "A");
  int_arg(args.B, "B");
  const lr_scan_config config = scan_config(args.checkpoint, args.threads, args.segment_size);
  if (g.verbosity > 0) std::cerr << "wall scan A=" << args.A << " B=" << args.B << " over [" << lo << ", " << hi << "]\n";
  ScanResult result;
  check(lr_wall_scan(args.A.c_str(), args.B.c_str(), lo, hi, &config, &result.p));
  print_scan(g, result.p, false);
  // A hit is a finding, not a failure; only a hit that does not survive exact
  // recomputation is.
  for (std::size_t i = 0; i < lr_scan_result_hit_count(result.p); ++i) {
    if (!ordered_json::parse(lr_scan_result_hit_json(result.p, i)).value("verified_exact", false)) return kFailure;
  }
  return kOk;
}

void add_sweep_options(CLI::App* sub, SweepArgs& args) {
  sub->add_option("--check", args.check, "check id")->required();
  sub->add_option("--a-set", args.a_set, "list of a: 1,2,7 or ranges like -5..5");
  sub->add_option("--m", args.m_list, "moduli for lemma_binom_p and fermat_props, e.g. 1..6");
  sub->add_option("--A", args.A, "explicit Lucas A for quotient_v");
  sub->add_option("--B", args.B, "explicit Lucas B for quotient_v");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Residue-class binomial sums, Lucas quotients and the congruences linking them"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_flag("--tsv", g.tsv, "tab-separated output instead of JSON lines");
  app.add_flag("--deterministic", g.deterministic, "omit elapsed time from summaries");
  app.add_flag("-v,--verbose", g.verbosity, "more diagnostics; verify/scan verify print every report");
  app.set_version_flag("--version", std::string(lr_version()));

  std::string checks;
  for (std::size_t i = 0; i < lr_check_count(); ++i) checks += std::string(i ? ", " : "") + lr_check_name(i);

  SumArgs sum_args, delta_args;
  auto* sum = app.add_subcommand("sum", "[n r]_m(a): sum of C(n,k) a^k over k = r (mod m)");
  add_sum_options(sum, sum_args);
  auto* delta = app.add_subcommand("delta", "Delta_m(r, n): the sum recentred by the (1 +- a)^n terms");
  add_sum_options(delta, delta_args);

  PolyArgs poly_args;
  auto* poly = app.add_subcommand("poly", "coefficients of G_n or Q_n");
  poly->add_option("--kind", poly_args.kind, "G or Q")->capture_default_str();
  poly->add_option("--n", poly_args.n, "index")->required();
  poly->add_option("--a", poly_args.a, "parameter a")->required();
  poly->add_flag("--check", poly_args.check, "run the coefficient identities instead");

  QuotientArgs quotient_args;
  auto* quotient = app.add_subcommand("quotient", "Lucas quotient u_{p-eps}/p or Fermat quotient q_p(x), mod p");
  quotient->add_option("--p", quotient_args.p, "odd prime")->required();
  quotient->add_option("--A", quotient_args.A, "Lucas A");
  quotient->add_option("--B", quotient_args.B, "Lucas B");
  quotient->add_option("--x", quotient_args.x, "Fermat quotient base");

  SweepArgs verify_args;
  auto* verify = app.add_subcommand("verify", "run a congruence check over primes\nchecks: " + checks);
  add_sweep_options(verify, verify_args);
  verify->add_option("--a", verify_args.a, "single a; negative values as --a=-2");
  verify->add_option("--p", verify_args.p, "single odd prime");
  verify->add_option("--p-min", verify_args.p_min, "smallest prime (default 3)");
  verify->add_option("--p-max", verify_args.p_max, "largest prime");
  add_scan_options(verify, verify_args.checkpoint, verify_args.threads, verify_args.segment_size);

  auto* scan = app.add_subcommand("scan", "range scans over primes");
  scan->require_subcommand(1);
  WallArgs wall_args;
  auto* wall = scan->add_subcommand("wall", "primes with p^2 | u_{p-eps}");
  wall->add_option("--A", wall_args.A, "Lucas A")->required();
  wall->add_option("--B", wall_args.B, "Lucas B")->required();
  wall->add_option("--from", wall_args.from, "lower end, >= 3")->required();
  wall->add_option("--to", wall_args.to, "upper end, < 2^32")->required();
  add_scan_options(wall, wall_args.checkpoint, wall_args.threads, wall_args.segment_size);
  SweepArgs scan_verify_args;
  auto* scan_verify = scan->add_subcommand("verify", "sweep a check over a prime range\nchecks: " + checks);
  add_sweep_options(scan_verify, scan_verify_args);
  scan_verify->add_option("--from", scan_verify_args.p_min, "lower end, >= 3")->required();
  scan_verify->add_option("--to", scan_verify_args.p_max, "upper end, < 2^32")->required();
  add_scan_options(scan_verify, scan_verify_args.checkpoint, scan_verify_args.threads, scan_verify_args.segment_size);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n";
    const CLI::App* target = &app;
    for (const CLI::App* sub = &app; sub != nullptr;) {
      const auto picked = sub->get_subcommands();
      if (picked.empty()) break;
      target = sub = picked.front();
    }
    std::cerr << target->help();
    return kUsage;
  }

  CLI::App* active = nullptr;
  for (auto* sub : {sum, delta, poly, quotient, verify, wall, scan_verify})
    if (sub->parsed()) active = sub;

  try {
    if (active == sum) return run_sum(g, sum_args, false);
    if (active == delta) return run_sum(g, delta_args, true);
    if (active == poly) return run_poly(g, poly_args);
    if (active == quotient) return run_quotient(g, quotient_args);
    if (active == verify) return run_verify(g, verify_args);
    if (active == wall) return run_scan_wall(g, wall_args);
    if (active == scan_verify) return run_scan_verify(g, scan_verify_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << active->help();
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n\n" << active->help();
    return kUsage;
  } catch (const LibraryError& e) {
    std::cerr << "error: " << e.what() << '\n';
    const int code = exit_code_for(e.status);
    if (e.status == LR_ERR_INVALID_ARGUMENT) std::cerr << '\n' << active->help();
    return code;
  }
  std::cerr << app.help();
  return kUsage;
}
