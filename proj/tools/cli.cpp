#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "report.hpp"
#include "repro.hpp"
#include "timcoop/bounds.hpp"
#include "timcoop/scheduler.hpp"
#include "timcoop/serialization.hpp"
#include "timcoop/verifier.hpp"

namespace timcoop::cli {

namespace {

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_json(const std::string& path, std::istream& in) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(path + ": invalid JSON: " + e.what());
  }
}

Topology read_topology(const std::string& path, std::istream& in) {
  try {
    return topology_from_json(read_json(path, in));
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

struct Options {
  std::string generator;
  int k = 0;
  std::string topology_path;
  std::string scheme_path;
  std::string scheme_out;
  std::string receivers;
  std::string repro_case;
  std::string k_list;
  int exhaustive_limit = kDefaultExhaustiveLimit;
  int trials = 50;
  std::uint64_t seed = 0;
  bool json = false;
};

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string("bad ") + what + " entry '" + item + "'");
    }
  }
  return out;
}

int cmd_topology(const Options& o, std::ostream& out) {
  Topology t = [&] {
    if (o.generator == "figure4") return figure4_example();
    if (o.k < 1) throw UsageError(o.generator + " requires --k >= 1");
    if (o.generator == "wyner") return wyner(o.k);
    if (o.generator == "full") return fully_connected(o.k);
    if (o.generator == "cyclic") {
      if (o.k < 2) throw UsageError("cyclic requires --k >= 2");
      return cyclic_wyner(o.k);
    }
    throw UsageError("unknown generator '" + o.generator + "' (expected wyner, cyclic, full, figure4)");
  }();
  out << to_json(t).dump(2) << "\n";
  return kExitOk;
}

int cmd_analyze(const Options& o, std::istream& in, std::ostream& out) {
  const Topology t = read_topology(o.topology_path, in);
  const AnalysisReport r = analyze(t, o.exhaustive_limit, o.seed);
  if (o.json) {
    out << to_json(r).dump(2) << "\n";
  } else {
    print_summary(out, r);
  }
  return kExitOk;
}

int cmd_bound(const Options& o, std::istream& in, std::ostream& out) {
  const Topology t = read_topology(o.topology_path, in);
  if (!o.receivers.empty()) {
    std::vector<int> members = parse_int_list(o.receivers, "--set");
    ReceiverSet a;
    try {
      a = ReceiverSet(t.k(), members);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--set: ") + e.what());
    }
    auto outcome = check_condition1(t, a);
    if (auto* cert = std::get_if<Condition1Certificate>(&outcome)) {
      const DofCertificate dc{CertificateKind::condition1, cert->bound, *cert};
      out << (o.json ? to_json(dc).dump(2) : "upper bound: " + describe(dc)) << "\n";
      return kExitOk;
    }
    const auto& failure = std::get<Condition1Failure>(outcome);
    out << (o.json ? to_json(failure).dump(2) : "condition 1 fails: " + failure.detail) << "\n";
    return kExitClaimFailure;
  }
  const DofCertificate c = upper_bound(t, o.exhaustive_limit);
  out << (o.json ? to_json(c).dump(2) : "upper bound: " + describe(c)) << "\n";
  return kExitOk;
}

int cmd_achieve(const Options& o, std::istream& in, std::ostream& out) {
  const Topology t = read_topology(o.topology_path, in);
  const DofCertificate c = achievable_dof(t);
  out << (o.json ? to_json(c).dump(2) : "lower bound: " + describe(c)) << "\n";
  if (!o.scheme_out.empty()) {
    std::ofstream f(o.scheme_out);
    if (!f) throw UsageError("cannot write " + o.scheme_out);
    f << to_json(schedule_to_scheme(std::get<Schedule>(c.evidence), t)).dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_verify_scheme(const Options& o, std::istream& in, std::ostream& out) {
  const Topology t = read_topology(o.topology_path, in);
  LinearScheme s = [&] {
    try {
      return scheme_from_json(read_json(o.scheme_path, in));
    } catch (const ParseError& e) {
      throw UsageError(o.scheme_path + ": " + e.what());
    }
  }();
  if (s.k() != t.k()) {
    throw UsageError("scheme has " + std::to_string(s.k()) + " messages but topology has K=" + std::to_string(t.k()));
  }
  if (o.trials < 1) throw UsageError("--trials must be >= 1");
  const MonteCarloVerdict v = monte_carlo_dof(t, s, o.trials, o.seed);
  const bool ok = v.all_decodable_trials == v.trials;
  if (o.json) {
    Json j = to_json(v);
    j["pass"] = ok;
    out << j.dump(2) << "\n";
  } else {
    out << "DoF: " << to_string(v.outcome.dof);
    if (!v.generic) out << " (varies " << to_string(v.min_dof) << ".." << to_string(v.max_dof) << ")";
    out << "\n";
    for (std::size_t i = 0; i < v.outcome.status.size(); ++i) {
      out << "  receiver " << i + 1 << ": " << to_string(v.outcome.status[i]) << "\n";
    }
    out << (v.generic ? "generic over " : "NOT generic over ") << v.trials << " trials (seed " << v.seed << ")\n";
    for (auto seed : v.dissenting_seeds) out << "  dissenting seed " << seed << "\n";
  }
  return ok ? kExitOk : kExitClaimFailure;
}

int cmd_repro(const Options& o, std::ostream& out) {
  if (!is_repro_case(o.repro_case)) {
    throw UsageError("unknown repro case '" + o.repro_case + "' (expected theorem1, lemma2, fullyconnected, coherence)");
  }
  if (o.trials < 1) throw UsageError("--trials must be >= 1");
  ReproOptions ro;
  ro.k_list = parse_int_list(o.k_list, "--k-list");
  ro.trials = o.trials;
  ro.seed = o.seed;
  ro.exhaustive_limit = o.exhaustive_limit;
  std::vector<ClaimRow> rows;
  try {
    rows = run_repro(o.repro_case, ro);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (o.json) {
    Json arr = Json::array();
    for (const auto& r : rows) {
      arr.push_back({{"claim", r.claim}, {"expected", r.expected}, {"observed", r.observed}, {"pass", r.pass}});
    }
    out << Json{{"case", o.repro_case}, {"seed", o.seed}, {"trials", o.trials}, {"rows", arr}}.dump(2) << "\n";
  } else {
    print_table(out, rows);
  }
  const bool all = std::ranges::all_of(rows, [](const ClaimRow& r) { return r.pass; });
  return all ? kExitOk : kExitClaimFailure;
}

}  // namespace

std::string version() { return TIMCOOP_VERSION; }

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified DoF bounds and scheme verification for topological interference management", "timcoop"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1);
  Options o;

  auto* topo = app.add_subcommand("topology", "Emit a generated topology as JSON");
  topo->add_option("generator", o.generator, "wyner | cyclic | full | figure4")->required();
  topo->add_option("--k", o.k, "Number of user pairs");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("topology", o.topology_path, "Topology JSON file ('-' for stdin)")->required();
    sub->add_option("--exhaustive-limit", o.exhaustive_limit, "Largest K for exhaustive Condition 1 search")
        ->capture_default_str();
    sub->add_flag("--json", o.json, "Machine-readable output");
  };
  auto* analyze_cmd = app.add_subcommand("analyze", "Lower and upper DoF bounds with certificates");
  add_common(analyze_cmd);
  analyze_cmd->add_option("--seed", o.seed, "Recorded in the report")->capture_default_str();

  auto* bound = app.add_subcommand("bound", "Best certified upper bound");
  add_common(bound);
  bound->add_option("--set", o.receivers, "Check Condition 1 for this receiver set, e.g. 2,5");

  auto* achieve = app.add_subcommand("achieve", "Interference-avoidance schedule (lower bound)");
  add_common(achieve);
  achieve->add_option("--scheme-out", o.scheme_out, "Write the one-slot scheme JSON here");

  auto* verify = app.add_subcommand("verify-scheme", "Monte Carlo zero-forcing check of a linear scheme");
  verify->add_option("topology", o.topology_path, "Topology JSON file")->required();
  verify->add_option("scheme", o.scheme_path, "Scheme JSON file")->required();
  verify->add_option("--trials", o.trials, "Channel draws")->capture_default_str();
  verify->add_option("--seed", o.seed, "Base seed; trial t uses seed + t")->capture_default_str();
  verify->add_flag("--json", o.json, "Machine-readable output");

  auto* repro = app.add_subcommand("repro", "Re-run a claim suite and print a pass/fail table");
  repro->add_option("case", o.repro_case, "theorem1 | lemma2 | fullyconnected | coherence")->required();
  repro->add_option("--k-list", o.k_list, "Comma-separated K values");
  repro->add_option("--trials", o.trials, "Monte Carlo trials per configuration")->capture_default_str();
  repro->add_option("--seed", o.seed, "Base seed")->capture_default_str();
  repro->add_option("--exhaustive-limit", o.exhaustive_limit, "Largest K for exhaustive search")->capture_default_str();
  repro->add_flag("--json", o.json, "Machine-readable output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (topo->parsed()) return cmd_topology(o, out);
    if (analyze_cmd->parsed()) return cmd_analyze(o, in, out);
    if (bound->parsed()) return cmd_bound(o, in, out);
    if (achieve->parsed()) return cmd_achieve(o, in, out);
    if (verify->parsed()) return cmd_verify_scheme(o, in, out);
    if (repro->parsed()) return cmd_repro(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace timcoop::cli
