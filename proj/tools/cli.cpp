#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "degseq/characterize.hpp"
#include "degseq/error.hpp"
#include "degseq/extremal.hpp"
#include "degseq/graphic.hpp"
#include "degseq/oracle.hpp"
#include "degseq/parallel.hpp"
#include "degseq/patterns.hpp"
#include "degseq/report.hpp"
#include "json.hpp"

namespace degseq::cli {

namespace {

struct Format {
  bool json = false;
  bool text = false;
};

struct Options {
  Format format;
  std::string pattern;
  std::string seq;
  bool oracle = false;
  std::uint64_t budget_nodes = SearchBudget{}.max_nodes;
  int n_lo = 5;
  int n_hi = 5;
  int n = 5;
  unsigned workers = 0;
  bool timing = false;
};

void add_format_flags(CLI::App& sub, Format& format) {
  auto* json = sub.add_flag("--json", format.json, "Machine-readable JSON output");
  auto* text = sub.add_flag("--text", format.text, "Plain-text output (default)");
  json->excludes(text);
}

/// Thrown for user-facing input errors; maps to exit code 2.
struct InputError {
  std::string message;
};

PatternId require_pattern(const std::string& name) {
  if (auto id = parse_pattern(name)) return *id;
  std::string known;
  for (PatternId p : kAllPatterns) {
    if (!known.empty()) known += ", ";
    known += pattern_name(p);
  }
  throw InputError{"unknown pattern '" + name + "' (known: " + known + ")"};
}

SearchBudget budget_of(const Options& o) {
  SearchBudget b;
  b.max_nodes = o.budget_nodes;
  return b;
}

RunOptions run_options(const Options& o) {
  RunOptions r;
  r.workers = o.workers == 0 ? default_worker_count() : o.workers;
  r.budget = budget_of(o);
  return r;
}

int cmd_check(const Options& o, std::ostream& out) {
  const PatternId pattern = require_pattern(o.pattern);
  const DegreeSequence seq = parse_sequence(o.seq);
  if (!has_characterization(pattern) && !o.oracle) {
    throw InputError{"no closed-form characterization for " + std::string(pattern_name(pattern)) +
                     "; pass --oracle to decide it by search"};
  }

  std::vector<Verdict> verdicts;
  if (has_characterization(pattern)) verdicts.push_back(characterize(pattern, seq));
  if (o.oracle) {
    const OracleAnswer answer = potentially_oracle(seq, pattern, budget_of(o));
    if (answer == OracleAnswer::budget_exhausted) {
      out << "budget exhausted after " << o.budget_nodes << " nodes\n";
      return kBudget;
    }
    verdicts.push_back(oracle_verdict(pattern, seq, answer == OracleAnswer::potentially));
  }

  for (const Verdict& v : verdicts) out << (o.format.json ? verdict_json(v) + "\n" : verdict_text(v));

  const bool disagree = verdicts.size() == 2 && verdicts[0].decision != verdicts[1].decision;
  if (disagree) {
    if (!o.format.json) out << "DISAGREEMENT between characterization and oracle\n";
    return kDisagreement;
  }
  return verdicts.front().decision ? kYes : kNo;
}

int cmd_realize(const Options& o, std::ostream& out, std::ostream& err) {
  const DegreeSequence seq = parse_sequence(o.seq);
  if (auto violation = erdos_gallai_violation(seq)) {
    err << "error: sequence " << seq.to_string() << " is not graphic: ";
    if (violation->odd_sum) {
      err << "odd degree sum " << seq.sigma() << "\n";
    } else {
      err << "Erdos-Gallai inequality fails at k=" << violation->k << "\n";
    }
    return kInputError;
  }
  const SmallGraph g = havel_hakimi_realize(seq);
  if (o.format.json) {
    nlohmann::ordered_json doc;
    doc["version"] = kSchemaVersion;
    doc["sequence"] = seq.to_string();
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (const Edge& e : g.edges()) edges.push_back(std::to_string(e.u) + "-" + std::to_string(e.v));
    doc["edges"] = edges;
    out << doc.dump(2) << "\n";
  } else {
    out << to_edge_list(g);
  }
  return kYes;
}

int cmd_witness(const Options& o, std::ostream& out) {
  const PatternId pattern = require_pattern(o.pattern);
  const DegreeSequence seq = parse_sequence(o.seq);
  const WitnessResult result = find_witness(seq, pattern, budget_of(o));
  switch (result.answer) {
    case OracleAnswer::budget_exhausted:
      out << "budget exhausted after " << result.nodes << " nodes\n";
      return kBudget;
    case OracleAnswer::not_potentially:
      out << "no witness: " << seq.to_string() << " is not potentially " << pattern_name(pattern)
          << "-graphic\n";
      return kNo;
    case OracleAnswer::potentially:
      break;
  }
  const Witness& w = *result.witness;
  if (o.format.json) {
    out << witness_json(pattern, seq, w);
    return kYes;
  }
  out << "# witness for " << pattern_name(pattern) << " in " << seq.to_string() << "\n";
  out << to_edge_list(w.graph);
  out << "# embedding";
  for (std::size_t i = 0; i < w.embedding.size(); ++i) out << " " << i << "->" << w.embedding[i];
  out << "\n";
  return kYes;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const PatternId pattern = require_pattern(o.pattern);
  const auto start = std::chrono::steady_clock::now();
  const MismatchReport report = verify_characterization(pattern, o.n_lo, o.n_hi, run_options(o));
  std::optional<long> elapsed;
  if (o.timing) {
    elapsed = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                    std::chrono::steady_clock::now() - start)
                                    .count());
  }
  if (o.format.json) {
    out << report_json(report, elapsed);
  } else {
    out << report_text(report);
    if (elapsed) out << "elapsed " << *elapsed << " ms\n";
  }
  if (!report.mismatches.empty()) return kDisagreement;
  if (!report.budget_failures.empty()) return kBudget;
  return kYes;
}

int cmd_sigma(const Options& o, std::ostream& out) {
  const PatternId pattern = require_pattern(o.pattern);
  if (!has_sigma_formula(pattern)) {
    throw InputError{"no threshold formula for " + std::string(pattern_name(pattern)) +
                     " (supported: k5-p3, k5-c4, c5, k311)"};
  }
  const auto start = std::chrono::steady_clock::now();
  const SigmaResult result = empirical_sigma(pattern, o.n, run_options(o));
  std::optional<long> elapsed;
  if (o.timing) {
    elapsed = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                    std::chrono::steady_clock::now() - start)
                                    .count());
  }
  if (o.format.json) {
    out << report_json(result, elapsed);
  } else {
    out << report_text(result);
    if (elapsed) out << "elapsed " << *elapsed << " ms\n";
  }
  return result.matches_formula() ? kYes : kDisagreement;
}

int cmd_patterns(const Options& o, std::ostream& out) {
  if (o.format.json) {
    nlohmann::ordered_json doc;
    doc["version"] = kSchemaVersion;
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (PatternId p : kAllPatterns) {
      const SmallGraph& g = pattern_graph(p);
      nlohmann::ordered_json entry;
      entry["name"] = std::string(pattern_name(p));
      entry["order"] = g.order();
      entry["edges"] = g.edge_count();
      entry["degrees"] = g.degree_sequence().to_string();
      entry["characterized"] = has_characterization(p);
      entry["sigma_formula"] = has_sigma_formula(p);
      list.push_back(entry);
    }
    doc["patterns"] = list;
    out << doc.dump(2) << "\n";
    return kYes;
  }
  for (PatternId p : kAllPatterns) {
    const SmallGraph& g = pattern_graph(p);
    out << pattern_name(p) << ": " << g.order() << " vertices, " << g.edge_count()
        << " edges, degrees " << g.degree_sequence().to_string();
    if (has_characterization(p)) out << ", characterized";
    if (has_sigma_formula(p)) out << ", sigma formula";
    out << "\n";
  }
  return kYes;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Graphic and potentially K5-H-graphic degree sequences", "degseq"};
  app.require_subcommand(1, 1);

  auto* check = app.add_subcommand("check", "Decide potentially-H-graphic by characterization");
  check->add_option("--pattern", o.pattern, "Target pattern, e.g. k5-p3")->required();
  check->add_option("--seq", o.seq, "Degree sequence, e.g. \"4,3^2,2^3\"")->required();
  check->add_flag("--oracle", o.oracle, "Also decide by realization search and compare");
  check->add_option("--budget-nodes", o.budget_nodes, "Oracle node budget");
  add_format_flags(*check, o.format);

  auto* realize = app.add_subcommand("realize", "Print a Havel-Hakimi realization");
  realize->add_option("--seq", o.seq, "Degree sequence")->required();
  add_format_flags(*realize, o.format);

  auto* witness = app.add_subcommand("witness", "Find a realization containing the pattern");
  witness->add_option("--pattern", o.pattern, "Target pattern")->required();
  witness->add_option("--seq", o.seq, "Degree sequence")->required();
  witness->add_option("--budget-nodes", o.budget_nodes, "Search node budget");
  add_format_flags(*witness, o.format);

  auto* verify = app.add_subcommand("verify", "Compare characterization and oracle exhaustively");
  verify->add_option("--pattern", o.pattern, "Characterized pattern")->required();
  verify->add_option("--n-lo", o.n_lo, "Smallest sequence length")->required();
  verify->add_option("--n-hi", o.n_hi, "Largest sequence length")->required();
  verify->add_option("--workers", o.workers, "Worker threads (default DEGSEQ_WORKERS or cores)");
  verify->add_option("--budget-nodes", o.budget_nodes, "Per-sequence oracle node budget");
  verify->add_flag("--timing", o.timing, "Report elapsed time");
  add_format_flags(*verify, o.format);

  auto* sigma = app.add_subcommand("sigma", "Empirical vs closed-form sigma(H, n)");
  sigma->add_option("--pattern", o.pattern, "k5-p3, k5-c4, c5 or k311")->required();
  sigma->add_option("--n", o.n, "Sequence length")->required();
  sigma->add_option("--workers", o.workers, "Worker threads (default DEGSEQ_WORKERS or cores)");
  sigma->add_option("--budget-nodes", o.budget_nodes, "Per-sequence oracle node budget");
  sigma->add_flag("--timing", o.timing, "Report elapsed time");
  add_format_flags(*sigma, o.format);

  auto* patterns = app.add_subcommand("patterns", "List the built-in target graphs");
  add_format_flags(*patterns, o.format);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kYes : kInputError;
  }

  try {
    verify_pattern_identities();
    if (app.got_subcommand(check)) return cmd_check(o, out);
    if (app.got_subcommand(realize)) return cmd_realize(o, out, err);
    if (app.got_subcommand(witness)) return cmd_witness(o, out);
    if (app.got_subcommand(verify)) return cmd_verify(o, out);
    if (app.got_subcommand(sigma)) return cmd_sigma(o, out);
    if (app.got_subcommand(patterns)) return cmd_patterns(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.message << "\n";
    return kInputError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const BudgetExhausted& e) {
    err << "error: " << e.what() << "\n";
    return kBudget;
  }
  return kInputError;
}

}  // namespace degseq::cli
