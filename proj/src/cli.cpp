#include "srlab/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "srlab/enumerate.hpp"
#include "srlab/error.hpp"
#include "srlab/expr.hpp"
#include "srlab/suites.hpp"

namespace srlab::cli {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

const std::vector<std::string> kDefaultFamily = {"nat",        "bool",         "gcd",        "minplus(1)",
                                                 "minplus(2)", "minplus(3)",   "divisors(30)", "powerset(3)"};

struct Globals {
  std::uint64_t seed = 42;
  std::size_t samples = 100;
  std::string out;
  std::string format = "json";
  unsigned threads = 1;
  bool timing = false;
};

struct Output {
  json report;
  std::string text;
  int code = ok;
};

// Usage errors found after option parsing (names, bindings, grammar).
struct UsageError : Error {
  using Error::Error;
};

SemiringPtr carrier(const std::string& name) {
  try {
    return semiring_from_name(name);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

void known_suite(const std::string& name) {
  const auto& cat = suite_catalog();
  if (std::find(cat.begin(), cat.end(), name) != cat.end()) return;
  std::string msg = "unknown suite '" + name + "'; known suites:";
  for (const auto& n : cat) msg += " " + n;
  throw UsageError(msg);
}

ExprPtr parse(const std::string& text) {
  try {
    return parse_expr(text);
  } catch (const ParseError& e) {
    std::string msg = std::string("cannot parse expression: ") + e.what() + "\n  " + text + "\n  ";
    // Point at the column on single-line input.
    if (text.find('\n') == std::string::npos) msg += std::string(e.column() - 1, ' ') + "^";
    throw UsageError(msg);
  }
}

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

json head(const std::string& command) {
  json j;
  j["schema"] = 1;
  j["command"] = command;
  return j;
}

Sampler sampler_of(const Globals& g) {
  Sampler s;
  s.seed = g.seed;
  s.samples = g.samples;
  s.threads = g.threads;
  return s;
}

// eval

struct EvalArgs {
  std::string semiring;
  std::string expr;
  std::vector<std::string> lets;
};

Output do_eval(const EvalArgs& a, const Globals&) {
  auto S = carrier(a.semiring);
  auto e = parse(a.expr);
  Env env;
  for (const auto& binding : a.lets) {
    const auto eq = binding.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--let expects NAME=EXPR, got '" + binding + "'");
    const auto name = binding.substr(0, eq);
    auto v = eval_expr(*parse(binding.substr(eq + 1)), S, env);
    if (v.is_bool()) throw UsageError("--let " + name + " must be an ideal, not a comparison");
    env.insert_or_assign(name, v.ideal());
  }
  for (const auto& v : expr_variables(*e))
    if (!env.count(v)) throw UsageError("unbound variable " + v + " (bind it with --let " + v + "=...)");

  auto r = eval_expr(*e, S, env);
  Output o;
  o.report = head("eval");
  o.report["semiring"] = S->id();
  o.report["expr"] = print_expr(*e);
  if (r.is_bool()) {
    o.report["value"] = r.truth();
    o.text = std::string(r.truth() ? "true" : "false");
  } else {
    o.report["value"] = format(r.ideal());
    o.report["canonical"] = canonical_json(r.ideal(), r.verification);
    o.text = format(r.ideal()) + "  [" + format_canonical(r.ideal()) + "]";
  }
  o.report["verification"] = r.verification.str();
  o.text += " (" + r.verification.str() + ")\n";
  return o;
}

// check

struct CheckArgs {
  std::string suite;
  std::string semiring;
  std::vector<std::string> primes;
  std::int64_t bound = 0;
};

Output do_check(const CheckArgs& a, const Globals& g) {
  known_suite(a.suite);
  auto S = carrier(a.semiring);
  std::vector<Int> primes;
  for (const auto& p : a.primes) {
    try {
      primes.push_back(parse_int(p));
    } catch (const std::exception&) {
      throw UsageError("--primes expects integers, got '" + p + "'");
    }
  }
  auto sm = sampler_of(g);
  sm.bound = a.bound;
  auto report = a.suite == "locally-valuation" ? locally_valuation_suite(S, primes, sm) : run_suite(a.suite, S, sm);

  Output o;
  o.report = report.to_json(g.timing);
  std::ostringstream t;
  t << "suite " << report.suite << " on " << report.semiring << " (seed " << report.seed << ", " << report.samples
    << " samples): " << report.status << "\n";
  for (const auto& law : report.laws) {
    t << "  " << law.id << "  pass=" << law.pass << " fail=" << law.fail << " skipped=" << law.skipped << "  "
      << law.verification.str() << "\n";
    if (law.counterexample) t << "    counterexample " << law.counterexample->dump() << "\n";
  }
  for (const auto& n : report.notes) t << "  note: " << n << "\n";
  o.text = t.str();
  o.code = report.status == "fail" || report.status == "inconsistent" ? counterexample : ok;
  return o;
}

// search

struct SearchArgs {
  std::string kind;
  std::string semiring;
  std::size_t max_deg = 2;
  std::int64_t coeff_bound = 9;
  std::uint64_t max_pairs = 50'000'000;
};

Output do_search(const SearchArgs& a, const Globals& g) {
  auto S = carrier(a.semiring);
  const auto t0 = Clock::now();
  auto r = a.kind == "gaussian" ? gaussian_search(S, a.max_deg, a.coeff_bound, g.threads, a.max_pairs)
                                : dm_search(S, a.max_deg, a.coeff_bound, g.threads, a.max_pairs);
  Output o;
  o.report = head("search");
  o.report["kind"] = a.kind;
  o.report["semiring"] = S->id();
  o.report["max_deg"] = a.max_deg;
  o.report["coeff_bound"] = a.coeff_bound;
  const auto found = r.to_json();
  for (const auto& [k, v] : found.items()) o.report[k] = v;
  o.report["verification"] = Verification::bounded(a.coeff_bound).str();
  if (g.timing) o.report["ms"] = ms_since(t0);
  std::ostringstream t;
  if (r.found) {
    t << a.kind << " counterexample on " << S->id() << ":\n  f = " << r.f->str() << "\n  g = " << r.g->str()
      << "\n";
    if (r.witness) t << "  witness " << S->format(*r.witness) << "\n";
    t << "  (pair " << r.checked_count << " of " << r.space << ")\n";
  } else {
    t << "no " << a.kind << " counterexample on " << S->id() << " among " << r.space << " pairs (deg <= "
      << a.max_deg << ", coefficients bound " << a.coeff_bound << ")\n";
  }
  o.text = t.str();
  o.code = r.found ? counterexample : ok;
  return o;
}

// enumerate

struct EnumerateArgs {
  std::size_t order = 3;
  bool classify = false;
  std::size_t deg = 2;
  std::uint64_t node_budget = 50'000'000;
  double max_seconds = 0;
  bool no_prune = false;
  std::string export_dir;
};

Output do_enumerate(const EnumerateArgs& a, const Globals& g) {
  EnumerationTask task;
  task.order = a.order;
  task.prune_isomorphic = !a.no_prune;
  task.node_budget = a.node_budget;
  task.max_seconds = a.max_seconds;
  task.threads = g.threads;
  const auto t0 = Clock::now();

  Output o;
  o.report = head("enumerate");
  o.report["order"] = a.order;
  std::ostringstream t;
  std::vector<FiniteTable> tables;
  bool partial = false;
  std::size_t violations = 0;
  json records = json::array();
  if (a.classify) {
    auto sweep = classify_all(task, a.deg);
    partial = sweep.partial;
    violations = sweep.violations;
    for (const auto& r : sweep.records) {
      tables.push_back(r.table);
      records.push_back(r.to_json());
      t << r.id << "  semidomain=" << r.semidomain << " subtractive=" << r.subtractive
        << " weak_gaussian=" << r.weak_gaussian << " gaussian=" << r.gaussian_flag() << " dm=" << r.dm_flag()
        << (r.violation ? "  VIOLATION" : "") << "\n";
    }
  } else {
    auto e = enumerate_semirings(task);
    partial = e.partial;
    tables = e.tables;
    for (std::size_t i = 0; i < tables.size(); ++i) {
      json r;
      r["id"] = "n" + std::to_string(a.order) + "-" + std::to_string(i);
      r["table"] = format_table(tables[i]);
      records.push_back(r);
    }
  }
  o.report["pruned"] = !a.no_prune;
  o.report["partial"] = partial;
  o.report["count"] = tables.size();
  if (a.classify) {
    o.report["degree"] = a.deg;
    o.report["violations"] = violations;
  }
  o.report["records"] = records;
  if (g.timing) o.report["ms"] = ms_since(t0);

  if (!a.export_dir.empty()) {
    std::filesystem::create_directories(a.export_dir);
    for (std::size_t i = 0; i < tables.size(); ++i) {
      const auto path = std::filesystem::path(a.export_dir) /
                        ("n" + std::to_string(a.order) + "-" + std::to_string(i) + ".table");
      std::ofstream f(path);
      if (!f) throw Error("cannot write " + path.string());
      f << format_table(tables[i]);
    }
  }
  t << "order " << a.order << ": " << tables.size() << " semirings" << (partial ? " (partial: cap hit)" : "")
    << "\n";
  if (a.classify) t << "violations of subtractive => no DM counterexample: " << violations << "\n";
  o.text = t.str();
  o.code = partial ? resource_cap : violations > 0 ? counterexample : ok;
  return o;
}

// falsify

struct FalsifyArgs {
  std::string expr;
  std::vector<std::string> semirings;
};

Output do_falsify(const FalsifyArgs& a, const Globals& g) {
  std::vector<SemiringPtr> family;
  for (const auto& n : a.semirings.empty() ? kDefaultFamily : a.semirings) family.push_back(carrier(n));
  auto e = parse(a.expr);
  if (!e->is_comparison()) throw UsageError("falsify needs a comparison (== or <=)");
  for (const auto& v : expr_variables(*e))
    if (v != "I" && v != "J" && v != "K") throw UsageError("falsify binds only I, J, K; found " + v);
  const auto t0 = Clock::now();
  auto cx = falsify(*e, family, sampler_of(g));

  Output o;
  o.report = head("falsify");
  o.report["expr"] = print_expr(*e);
  json names = json::array();
  for (const auto& S : family) names.push_back(S->id());
  o.report["semirings"] = names;
  o.report["seed"] = g.seed;
  o.report["samples"] = g.samples;
  o.report["found"] = cx.has_value();
  o.report["counterexample"] = cx ? cx->to_json() : json(nullptr);
  if (g.timing) o.report["ms"] = ms_since(t0);
  if (cx) {
    std::ostringstream t;
    t << "counterexample on " << cx->semiring << " (" << cx->phase << " " << cx->index << "):";
    for (std::size_t i = 0; i < cx->assignment.size(); ++i)
      t << (i ? ", " : " ") << cx->assignment[i].first << " = " << format(cx->assignment[i].second);
    o.text = t.str() + "\n";
  } else {
    o.text = "no counterexample\n";
  }
  o.code = cx ? counterexample : ok;
  return o;
}

void add_globals(CLI::App& app, Globals& g) {
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--samples", g.samples, "Samples per suite or falsification run")->capture_default_str();
  app.add_option("--out", g.out, "Write the report to this file");
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads (0: one per core)")->capture_default_str();
  app.add_flag("--timing", g.timing, "Include wall-clock times in JSON reports");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact ideal arithmetic and theorem checks over commutative semirings", "srlab"};
  app.require_subcommand(1, 1);
  Globals g;
  add_globals(app, g);

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "Evaluate an ideal expression");
  eval->add_option("expr", ea.expr, "Expression, e.g. \"(<2>+<3>)*(<2>^<3>) == <2>*<3>\"")->required();
  eval->add_option("--semiring", ea.semiring, "Carrier name")->required();
  eval->add_option("--let", ea.lets, "Bind a variable: NAME=EXPR (repeatable)");

  CheckArgs ca;
  auto* check = app.add_subcommand("check", "Run a theorem suite");
  check->add_option("--suite", ca.suite, "Suite name")->required();
  check->add_option("--semiring", ca.semiring, "Carrier name")->required();
  check->add_option("--primes", ca.primes, "Primes for locally-valuation on gcd")->delimiter(',');
  check->add_option("--bound", ca.bound, "Sampling bound (0: carrier default)");

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Exhaustive counterexample search over polynomial pairs");
  search->add_option("kind", sa.kind, "gaussian or dm")->required()->check(CLI::IsMember({"gaussian", "dm"}));
  search->add_option("--semiring", sa.semiring, "Carrier name")->required();
  search->add_option("--max-deg", sa.max_deg, "Total degree bound")->capture_default_str();
  search->add_option("--coeff-bound", sa.coeff_bound, "Coefficient bound")->capture_default_str();
  search->add_option("--max-pairs", sa.max_pairs, "Pair budget")->capture_default_str();

  EnumerateArgs na;
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate small finite semirings");
  enumerate->add_option("--order", na.order, "Number of elements (2..6)")->capture_default_str();
  enumerate->add_flag("--classify", na.classify, "Classify each table");
  enumerate->add_option("--deg", na.deg, "Degree bound for the bounded flags")->capture_default_str();
  enumerate->add_option("--node-budget", na.node_budget, "Search node budget")->capture_default_str();
  enumerate->add_option("--max-seconds", na.max_seconds, "Wall-clock cap (0: none)");
  enumerate->add_flag("--no-prune", na.no_prune, "Keep every labelled table");
  enumerate->add_option("--export-dir", na.export_dir, "Write each table in the text table format");

  FalsifyArgs fa;
  auto* fals = app.add_subcommand("falsify", "Look for I, J, K violating an identity");
  fals->add_option("expr", fa.expr, "Comparison over I, J, K")->required();
  fals->add_option("--semiring", fa.semirings, "Carrier (repeatable; default: the standard family)");

  for (auto* sub : {eval, check, search, enumerate, fals}) sub->fallthrough();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(std::move(rev));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  try {
    Output o;
    if (*eval)
      o = do_eval(ea, g);
    else if (*check)
      o = do_check(ca, g);
    else if (*search)
      o = do_search(sa, g);
    else if (*enumerate)
      o = do_enumerate(na, g);
    else
      o = do_falsify(fa, g);

    const std::string body = g.format == "json" ? o.report.dump(2) + "\n" : o.text;
    if (g.out.empty()) {
      out << body;
    } else {
      std::ofstream f(g.out, std::ios::binary);
      if (!f) {
        err << "error: cannot write " << g.out << "\n";
        return usage;
      }
      f << body;
    }
    return o.code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const ResourceLimit& e) {
    err << "resource cap: " << e.what() << "\n";
    return resource_cap;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return internal;
  } catch (const Error& e) {
    // Preconditions, unsupported operations and carrier mismatches all mean
    // the command does not apply to its arguments.
    err << "error: " << e.what() << "\n";
    return usage;
  }
}

}  // namespace srlab::cli
