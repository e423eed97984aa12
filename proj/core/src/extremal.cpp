#include "degseq/extremal.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>

#include "degseq/characterize.hpp"
#include "degseq/error.hpp"
#include "degseq/graphic.hpp"
#include "degseq/parallel.hpp"

namespace degseq {

namespace {

using Kind = PreconditionError::Kind;

void require_range(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(Kind::out_of_range, what);
}

void collect(int n, int max_term, std::vector<int>& prefix, std::vector<DegreeSequence>& out) {
  if (static_cast<int>(prefix.size()) == n) {
    DegreeSequence seq(prefix);
    if (is_graphic_eg(seq)) out.push_back(std::move(seq));
    return;
  }
  for (int t = max_term; t >= 1; --t) {
    prefix.push_back(t);
    collect(n, t, prefix, out);
    prefix.pop_back();
  }
}

bool descending_sigma_then_lex(const DegreeSequence& a, const DegreeSequence& b) {
  if (a.sigma() != b.sigma()) return a.sigma() > b.sigma();
  return a > b;
}

PatternId sigma_family(PatternId pattern) {
  switch (pattern) {
    case PatternId::K5_P3:
    case PatternId::K5_C4:
    case PatternId::C5:
      return PatternId::K5_P3;
    case PatternId::K311:
    case PatternId::K5_K3:
      return PatternId::K311;
    default:
      throw PreconditionError(Kind::unsupported_pattern,
                              "no threshold formula for " + std::string(pattern_name(pattern)));
  }
}

}  // namespace

unsigned default_worker_count() {
  if (const char* env = std::getenv("DEGSEQ_WORKERS")) {
    const long value = std::strtol(env, nullptr, 10);
    if (value >= 1) return static_cast<unsigned>(value);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<DegreeSequence> enumerate_graphic_sequences(int n, std::optional<long> min_sigma) {
  require_range(n >= 4 && n <= 10, "sequence enumeration needs 4 <= n <= 10");
  std::vector<DegreeSequence> out;
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(n));
  collect(n, n - 1, prefix, out);
  if (min_sigma) {
    std::erase_if(out, [&](const DegreeSequence& s) { return s.sigma() < *min_sigma; });
  }
  std::sort(out.begin(), out.end(), descending_sigma_then_lex);
  return out;
}

void for_each_graphic_sequence(int n, std::optional<long> min_sigma,
                               const std::function<void(const DegreeSequence&)>& visit) {
  for (const DegreeSequence& s : enumerate_graphic_sequences(n, min_sigma)) visit(s);
}

MismatchReport verify_characterization(PatternId pattern, int n_lo, int n_hi,
                                       const RunOptions& options) {
  if (!has_characterization(pattern)) {
    throw PreconditionError(Kind::unsupported_pattern,
                            "no closed-form characterization for " +
                                std::string(pattern_name(pattern)));
  }
  const int lowest = pattern == PatternId::C4 ? 4 : 5;
  require_range(lowest <= n_lo && n_lo <= n_hi && n_hi <= 10,
                "verification range must satisfy " + std::to_string(lowest) +
                    " <= n_lo <= n_hi <= 10");

  MismatchReport report;
  report.pattern = pattern;
  report.n_lo = n_lo;
  report.n_hi = n_hi;

  struct Outcome {
    bool characterization = false;
    OracleAnswer oracle = OracleAnswer::budget_exhausted;
  };

  for (int n = n_lo; n <= n_hi; ++n) {
    const std::vector<DegreeSequence> seqs = enumerate_graphic_sequences(n);
    const auto outcomes = parallel_map<Outcome>(seqs.size(), options.workers, [&](std::size_t i) {
      Outcome o;
      o.characterization = characterize(pattern, seqs[i]).decision;
      o.oracle = potentially_oracle(seqs[i], pattern, options.budget);
      return o;
    });
    for (std::size_t i = 0; i < seqs.size(); ++i) {
      const Outcome& o = outcomes[i];
      if (o.oracle == OracleAnswer::budget_exhausted) {
        report.budget_failures.push_back(seqs[i]);
      } else if (o.characterization != (o.oracle == OracleAnswer::potentially)) {
        report.mismatches.push_back({seqs[i], o.characterization, !o.characterization});
      }
    }
    report.sequences_per_n.push_back(seqs.size());
    report.sequences_checked += seqs.size();
  }
  return report;
}

bool has_sigma_formula(PatternId pattern) {
  switch (pattern) {
    case PatternId::K5_P3:
    case PatternId::K5_C4:
    case PatternId::C5:
    case PatternId::K311:
    case PatternId::K5_K3:
      return true;
    default:
      return false;
  }
}

long formula_sigma(PatternId pattern, int n) {
  const PatternId family = sigma_family(pattern);
  require_range(n >= 5, "threshold formulas hold for n >= 5");
  if (family == PatternId::K5_P3) return 4L * n - 4;
  if (n == 6) return 26;
  return 4L * n - 2;
}

DegreeSequence extremal_witness(PatternId pattern, int n) {
  const PatternId family = sigma_family(pattern);
  require_range(n >= 5, "extremal sequences are defined for n >= 5");
  if (family == PatternId::K5_P3) return DegreeSequence::from_runs({{n - 1, 2}, {2, n - 2}});
  return DegreeSequence::from_runs({{n - 1, 1}, {3, n - 1}});
}

SigmaResult empirical_sigma(PatternId pattern, int n, const RunOptions& options) {
  require_range(n >= 5 && n <= 9, "threshold scan needs 5 <= n <= 9");
  SigmaResult result;
  result.pattern = pattern;
  result.n = n;
  if (has_sigma_formula(pattern)) result.formula = formula_sigma(pattern, n);

  std::map<long, std::vector<DegreeSequence>, std::greater<>> levels;
  for (DegreeSequence& s : enumerate_graphic_sequences(n)) levels[s.sigma()].push_back(std::move(s));

  for (const auto& [level, seqs] : levels) {
    const auto answers = parallel_map<OracleAnswer>(seqs.size(), options.workers, [&](std::size_t i) {
      return potentially_oracle(seqs[i], pattern, options.budget);
    });
    result.sequences_checked += seqs.size();
    std::vector<DegreeSequence> failing;
    for (std::size_t i = 0; i < seqs.size(); ++i) {
      if (answers[i] == OracleAnswer::budget_exhausted) {
        throw BudgetExhausted("oracle budget exhausted on " + seqs[i].to_string() + " while scanning " +
                              std::string(pattern_name(pattern)) + " at n=" + std::to_string(n));
      }
      if (answers[i] == OracleAnswer::not_potentially) failing.push_back(seqs[i]);
    }
    if (!failing.empty()) {
      result.failing_level = level;
      result.failing_count = failing.size();
      result.empirical = level + 2;
      std::sort(failing.begin(), failing.end(), std::greater<>());
      if (failing.size() > 10) failing.resize(10);
      result.exceptional_sequences = std::move(failing);
      return result;
    }
    result.empirical = level;
  }
  return result;
}

}  // namespace degseq
