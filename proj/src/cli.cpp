#include "qhs/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qhs/bounds.hpp"
#include "qhs/conditions.hpp"
#include "qhs/enumerate.hpp"
#include "qhs/io.hpp"

namespace qhs {

namespace {

Int parse_int(const std::string& tok) {
  try {
    return Int(tok);
  } catch (...) {
    throw CLI::ValidationError("not an integer: " + tok);
  }
}

std::string witness_str(const ConditionReport& rep) {
  std::string out = "J={";
  for (std::size_t i = 0; i < rep.witness_j.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(rep.witness_j[i]);
  }
  out += "}";
  return out;
}

std::string rat_str(const Rat& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

void cmd_check(const std::vector<std::string>& values, std::ostream& out) {
  if (values.size() < 2) throw CLI::ValidationError("check needs v_1 ... v_n d");
  std::vector<Int> v;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) v.push_back(parse_int(values[i]));
  Int d = parse_int(values.back());
  for (const Int& w : v) {
    if (w < 1 || w >= d) throw CLI::ValidationError("weights must satisfy 0 < v_i < d");
  }
  const int n = static_cast<int>(v.size());

  out << "weights:";
  for (const Int& w : v) out << " " << w.str();
  out << "   degree: " << d.str() << "\n";

  WeightSystem ws(v, d);  // sorted copy for the order-invariant analytics
  out << "reduced: " << (ws.is_reduced() ? "true" : "false") << "\n";

  // conditions run in the input order so witness indices match the input
  auto is3 = check_condition(SupportSet::full_support(v, d), Cond::C1Prime);
  out << "IS3: " << (is3.verdict ? "true" : "false");
  if (!is3.verdict) out << "   witness " << witness_str(is3);
  out << "\n";

  auto gcdrep = check_gcd_condition(v, d);
  out << "GCD (rho in Z[t]): " << (gcdrep.verdict ? "true" : "false");
  if (!gcdrep.verdict) out << "   witness " << witness_str(gcdrep);
  out << "\n";

  auto rho = poincare_series(ws);
  out << "rho in N0[t]: " << (rho && rho->all_coeffs_nonnegative() ? "true" : "false") << "\n";

  Rat mu = milnor_number(ws);
  out << "mu: " << rat_str(mu) << "\n";
  if (rho && rho->all_coeffs_nonnegative()) {
    out << "exponents: " << rho->sum_of_coeffs().str() << "\n";
  } else {
    out << "exponents: -\n";
  }

  out << "degree bound: " << (check_degree_bound(ws) ? "holds" : "violated")
      << "  (l(" << n << ") = " << rat_str(l_bound(n));
  if (n >= 2) out << ", l(" << n - 1 << ") = " << rat_str(l_bound(n - 1));
  out << ")\n";

  if (auto cp = charpoly_milnor_orlik(ws)) {
    out << "charpoly: " << cp->to_string() << "\n";
  } else {
    out << "charpoly: non-integral\n";
  }

  if (!is3.verdict) {
    out << "monodromy order: - (no isolated singularity)\n";
  } else if (ws.is_reduced() && ws.all_below_half_degree()) {
    out << "monodromy order: " << monodromy_order(ws).str() << "\n";
  } else {
    out << "monodromy order: - (needs reduced weights with v_i < d/2)\n";
  }
}

struct EnumerateArgs {
  int n = 2;
  long long mu_max = 50;
  std::string format = "jsonl";
  std::string out_path;
  int jobs = 1;
  long long budget = 0;
  std::string cache_dir;
  bool include_a1 = false;
  bool sum_weights_eq_d = false;
  bool sum3_eq_half_d = false;
};

std::vector<EnumerationRecord> run_enumeration(const EnumerateArgs& args) {
  EnumerateOptions opts;
  opts.n = args.n;
  opts.mu_max = args.mu_max;
  opts.jobs = args.jobs;
  opts.budget = args.budget;
  opts.cache_dir = args.cache_dir;
  return enumerate_systems(opts);
}

void cmd_enumerate(const EnumerateArgs& args, std::ostream& out, std::ostream& err) {
  if (args.include_a1 && args.n != 1) {
    throw CLI::ValidationError("--include-a1 applies to n=1 only");
  }
  if (args.sum3_eq_half_d && args.n != 3) {
    throw CLI::ValidationError("--sum3-eq-half-d applies to n=3 only");
  }
  auto records = run_enumeration(args);
  if (args.include_a1 && args.mu_max >= 1) {
    records.insert(records.begin(), make_record(WeightSystem({Int(1)}, Int(2)), 1));
  }
  if (args.sum_weights_eq_d || args.sum3_eq_half_d) {
    std::vector<EnumerationRecord> kept;
    for (auto& rec : records) {
      Int sum = 0;
      for (const Int& w : rec.ws.weights()) sum += w;
      if (args.sum_weights_eq_d && sum != rec.ws.degree()) continue;
      if (args.sum3_eq_half_d && 2 * sum != rec.ws.degree()) continue;
      kept.push_back(std::move(rec));
    }
    records = std::move(kept);
  }

  std::vector<OutputRow> rows;
  rows.reserve(records.size());
  for (const auto& rec : records) rows.push_back(to_output_row(rec));

  auto emit = [&](std::ostream& sink) {
    if (args.format == "csv") {
      write_csv(rows, sink);
    } else {
      write_jsonl(rows, sink);
    }
  };
  if (args.out_path.empty()) {
    emit(out);
  } else {
    std::ofstream file(args.out_path);
    if (!file) throw CLI::ValidationError("cannot open output file: " + args.out_path);
    emit(file);
  }
  err << "enumerate n=" << args.n << " mu_max=" << args.mu_max << " count=" << rows.size() << "\n";
}

void cmd_gaps(const EnumerateArgs& args, std::ostream& out, std::ostream& err) {
  auto records = run_enumeration(args);
  GapReport report = find_gaps(records, args.n, args.mu_max);
  const char* sg_name = (args.n % 2 == 0) ? "2p+1" : "2p-1";
  for (std::size_t i = 0; i < report.gaps.size(); ++i) {
    out << report.gaps[i].str() << " " << (report.sophie_germain[i] ? sg_name : "-") << "\n";
  }
  err << "gaps n=" << args.n << " mu_max=" << args.mu_max << " count=" << report.gaps.size() << "\n";
}

void cmd_types(int n, std::ostream& out, std::ostream& err) {
  auto types = enumerate_types(n);
  for (const auto& t : types) {
    std::string label = type_label(t, n);
    out << label;
    if (label != t.code) out << " " << t.code;
    out << "\n";
  }
  err << "types n=" << n << " count=" << types.size() << "\n";
}

void cmd_chain(const std::vector<std::string>& values, std::ostream& out) {
  if (values.empty()) throw CLI::ValidationError("chain needs a_1 ... a_n");
  std::vector<Int> a;
  for (const auto& tok : values) {
    Int ai = parse_int(tok);
    if (ai < 2) throw CLI::ValidationError("chain exponents must be >= 2");
    a.push_back(ai);
  }
  ChainSystem cs = chain_weight_system(a);
  out << "chain:";
  for (const Int& ai : a) out << " " << ai.str();
  out << "\n";
  out << "weight system: " << cs.ws.to_string() << "\n";
  out << "mu: " << cs.mu.str() << "\n";
  if (auto cp = charpoly_milnor_orlik(cs.ws)) {
    out << "charpoly: " << cp->to_string() << "\n";
  } else {
    out << "charpoly: non-integral\n";
  }
}

void cmd_prime_audit(const EnumerateArgs& args, std::ostream& out, std::ostream& err) {
  auto records = run_enumeration(args);
  PrimeMuReport report = classify_prime_mu(records);
  for (const auto& entry : report.entries) {
    out << "mu=" << entry.mu.str() << " chain=(";
    for (std::size_t i = 0; i < entry.chain_tuple.size(); ++i) {
      if (i) out << ",";
      out << entry.chain_tuple[i].str();
    }
    out << ") " << entry.ws.to_string() << "\n";
  }
  for (const auto& v : report.violations) out << "VIOLATION: " << v << "\n";
  err << "prime-audit n=" << args.n << " mu_max=" << args.mu_max
      << " entries=" << report.entries.size() << " violations=" << report.violations.size() << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"weight systems of quasihomogeneous isolated singularities"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "analyze one weight system (v_1 ... v_n d)");
  std::vector<std::string> check_values;
  check->add_option("values", check_values, "v_1 ... v_n d")->required()->expected(-1);

  EnumerateArgs eargs;
  auto add_engine_options = [&](CLI::App* cmd, bool full) {
    cmd->add_option("-n,--vars", eargs.n, "number of variables")->required()->check(CLI::Range(1, 4));
    cmd->add_option("--mu-max", eargs.mu_max, "Milnor number bound")->required()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--jobs", eargs.jobs, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--budget", eargs.budget, "search node budget (0 = unlimited)");
    cmd->add_option("--cache-dir", eargs.cache_dir, "checkpoint directory");
    if (full) {
      cmd->add_option("--format", eargs.format, "output format")
          ->check(CLI::IsMember({"jsonl", "csv"}));
      cmd->add_option("--out", eargs.out_path, "output file (default: stdout)");
      cmd->add_flag("--include-a1", eargs.include_a1, "include the A_1 row (n=1 only)");
      cmd->add_flag("--sum-weights-eq-d", eargs.sum_weights_eq_d, "keep rows with sum v_i = d");
      cmd->add_flag("--sum3-eq-half-d", eargs.sum3_eq_half_d, "keep rows with 2*sum v_i = d (n=3)");
    }
  };
  auto* enumerate = app.add_subcommand("enumerate", "enumerate all systems up to a mu bound");
  add_engine_options(enumerate, true);
  auto* gaps = app.add_subcommand("gaps", "list Milnor numbers with no system");
  add_engine_options(gaps, false);
  auto* prime_audit = app.add_subcommand("prime-audit", "audit records with prime Milnor number");
  add_engine_options(prime_audit, false);

  auto* types = app.add_subcommand("types", "list shape classes");
  int types_n = 2;
  types->add_option("-n,--vars", types_n, "number of variables")->required()->check(CLI::Range(1, 8));

  auto* chain = app.add_subcommand("chain", "chain-type system from exponents a_1 ... a_n");
  std::vector<std::string> chain_values;
  chain->add_option("values", chain_values, "a_1 ... a_n")->required()->expected(-1);

  std::vector<const char*> argv;
  std::string prog = "qhsing";
  argv.push_back(prog.c_str());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (check->parsed()) {
      cmd_check(check_values, out);
    } else if (enumerate->parsed()) {
      cmd_enumerate(eargs, out, err);
    } else if (gaps->parsed()) {
      cmd_gaps(eargs, out, err);
    } else if (prime_audit->parsed()) {
      cmd_prime_audit(eargs, out, err);
    } else if (types->parsed()) {
      cmd_types(types_n, out, err);
    } else if (chain->parsed()) {
      cmd_chain(chain_values, out);
    }
    return 0;
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace qhs
