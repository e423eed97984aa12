#pragma once

#include <optional>
#include <string>
#include <vector>

#include "degseq/patterns.hpp"
#include "degseq/sequence.hpp"

namespace degseq {

enum class ExceptionFamily {
  listed,     ///< one of a theorem's fixed exception sequences
  a3_family,  ///< (n-1, 3^3, 2^(n-k), 1^(k-4)), n >= 6, 4 <= k <= n-2, n = k mod 2
  s1,         ///< (n-i, n-j, 3^.., 2^.., 1^(i+j-2)) two-branch family
  s2,         ///< (n-1, 3^t, 1^(n-1-t)) for t in {5, 6}
  hub,        ///< (n-1, 3^t, 1^(n-1-t)) for t in {4, 5}, K5-K13 exceptions
};

std::string_view family_name(ExceptionFamily family);

/// A matched exception family together with its parameters. `n` is always
/// set; i/j/k/t only where the family has them. `odd_branch` distinguishes
/// the two S1 branches (n-i-j odd).
struct FamilyMatch {
  ExceptionFamily family = ExceptionFamily::listed;
  int n = 0;
  std::optional<int> i;
  std::optional<int> j;
  std::optional<int> k;
  std::optional<int> t;
  bool odd_branch = false;

  friend bool operator==(const FamilyMatch&, const FamilyMatch&) = default;
};

/// Rebuilds the sequence described by a match. For `listed` there are no
/// parameters, so the caller's sequence is the only possible expansion and
/// this throws std::invalid_argument.
DegreeSequence expand_family(const FamilyMatch& match);

enum class VerdictSource { characterization, oracle };

struct Verdict {
  PatternId pattern = PatternId::K5_P3;
  DegreeSequence sequence;
  bool decision = false;
  /// Violated clauses in clause order, e.g. "k5-p3(1):d3<3".
  std::vector<std::string> failed_conditions;
  std::optional<FamilyMatch> exception;
  VerdictSource source = VerdictSource::characterization;
};

/// Precondition for every check_* below: graphic, no zero terms, n >= 5
/// (n >= 4 for check_c4). Violations throw PreconditionError.
Verdict check_k5_p3(const DegreeSequence& seq);
Verdict check_k5_a3(const DegreeSequence& seq);
Verdict check_k5_k3(const DegreeSequence& seq);
Verdict check_k5_k13(const DegreeSequence& seq);
Verdict check_k5_2k2(const DegreeSequence& seq);
Verdict check_c4(const DegreeSequence& seq);

/// (n-1, 3^3, 2^(n-k), 1^(k-4)) with n >= 6, 4 <= k <= n-2 and n, k of equal
/// parity. k is recovered as 4 + (number of 1-terms).
std::optional<FamilyMatch> matches_family_a3(const DegreeSequence& seq);

/// i = n - d_1, j = n - d_2 with 1 <= i <= j <= n-5, k in
/// [0, floor((n-i-j-4)/2)]; even branch (n-i-j even) has 3^(n-i-j-2k), 2^(2k),
/// odd branch 3^(n-i-j-2k-1), 2^(2k+1); both end in 1^(i+j-2).
std::optional<FamilyMatch> matches_family_s1(const DegreeSequence& seq);

/// (n-1, 3^5, 1^(n-6)) or (n-1, 3^6, 1^(n-7)).
std::optional<FamilyMatch> matches_family_s2(const DegreeSequence& seq);

/// True for patterns with a closed-form check (the five K5 patterns, their
/// tripartite aliases, and C4).
bool has_characterization(PatternId pattern);

/// Dispatches to the check for `pattern`; K122 uses the K5-2K2 rule and K311
/// the K5-K3 rule. Throws PreconditionError(unsupported_pattern) otherwise.
Verdict characterize(PatternId pattern, const DegreeSequence& seq);

/// The fixed exception sequences of a characterization, in the order they
/// are listed (parametric families excluded).
std::vector<DegreeSequence> listed_exceptions(PatternId pattern);

}  // namespace degseq
