#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "degseq/oracle.hpp"
#include "degseq/patterns.hpp"
#include "degseq/sequence.hpp"

namespace degseq {

struct RunOptions {
  unsigned workers = 1;
  SearchBudget budget;
};

/// Every non-increasing positive graphic sequence of length n (terms in
/// 1..n-1), each once, by decreasing sum and then lexicographically
/// decreasing. `min_sigma` drops sequences whose sum is below it.
/// Requires 4 <= n <= 10.
std::vector<DegreeSequence> enumerate_graphic_sequences(int n,
                                                        std::optional<long> min_sigma = {});

/// Streaming form of enumerate_graphic_sequences with the same order.
void for_each_graphic_sequence(int n, std::optional<long> min_sigma,
                               const std::function<void(const DegreeSequence&)>& visit);

struct Mismatch {
  DegreeSequence sequence;
  bool characterization = false;
  bool oracle = false;
};

struct MismatchReport {
  PatternId pattern = PatternId::K5_P3;
  int n_lo = 0;
  int n_hi = 0;
  std::size_t sequences_checked = 0;
  /// sequences_per_n[i] counts sequences of length n_lo + i.
  std::vector<std::size_t> sequences_per_n;
  std::vector<Mismatch> mismatches;
  std::vector<DegreeSequence> budget_failures;

  bool verified() const noexcept { return mismatches.empty() && budget_failures.empty(); }
};

/// Compares the closed-form verdict with the oracle on every positive graphic
/// sequence with n_lo <= n <= n_hi. Requires a characterized pattern and
/// 5 <= n_lo <= n_hi <= 10 (4 <= n_lo for C4).
MismatchReport verify_characterization(PatternId pattern, int n_lo, int n_hi,
                                       const RunOptions& options = {});

/// Patterns with a known threshold: K5_P3, K5_C4, C5 (4n-4) and K311 / K5_K3
/// (4n-2, except 26 at n = 6).
bool has_sigma_formula(PatternId pattern);
long formula_sigma(PatternId pattern, int n);

/// Largest-sum sequence known to avoid the pattern: ((n-1)^2, 2^(n-2)) for
/// the 4n-4 patterns, (n-1, 3^(n-1)) for K311 / K5_K3.
DegreeSequence extremal_witness(PatternId pattern, int n);

struct SigmaResult {
  PatternId pattern = PatternId::K5_P3;
  int n = 0;
  /// Smallest even s such that every sequence with sum >= s is potentially
  /// pattern-graphic.
  long empirical = 0;
  std::optional<long> formula;
  /// Sum of the highest level holding a failing sequence (empirical - 2).
  std::optional<long> failing_level;
  /// Exact number of failing sequences at failing_level.
  std::size_t failing_count = 0;
  /// Up to ten failing sequences at failing_level, lexicographically greatest
  /// first.
  std::vector<DegreeSequence> exceptional_sequences;
  std::size_t sequences_checked = 0;

  bool matches_formula() const noexcept { return formula && *formula == empirical; }
};

/// Scans sum levels downward from n(n-1), checking every sequence of a level
/// with the oracle before moving on, and stops at the first level with a
/// failure. Requires 5 <= n <= 9. Throws BudgetExhausted if any search runs
/// out of budget.
SigmaResult empirical_sigma(PatternId pattern, int n, const RunOptions& options = {});

}  // namespace degseq
