#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "degseq/graph.hpp"
#include "degseq/patterns.hpp"
#include "degseq/sequence.hpp"

namespace degseq {

struct SearchBudget {
  std::uint64_t max_nodes = 50'000'000;
  std::optional<std::chrono::milliseconds> time_limit;
};

enum class Visit { proceed, stop };

enum class SearchStatus {
  completed,         ///< every realization was visited
  stopped,           ///< the visitor asked to stop
  budget_exhausted,  ///< node or time budget ran out first
};

/// Visits every labeled simple graph in which vertex i has degree seq[i],
/// each exactly once. Rows of the adjacency matrix are fixed one vertex at a
/// time; partial states whose residual demand fails Erdős–Gallai are pruned.
/// Requires a graphic sequence with n <= 12.
SearchStatus enumerate_realizations(const DegreeSequence& seq,
                                     const std::function<Visit(const SmallGraph&)>& visit,
                                     const SearchBudget& budget = {});

enum class OracleAnswer { potentially, not_potentially, budget_exhausted };

std::string_view answer_name(OracleAnswer answer);

struct Witness {
  SmallGraph graph;
  /// embedding[i] is the graph vertex hosting pattern vertex i.
  std::vector<int> embedding;
};

struct WitnessResult {
  OracleAnswer answer = OracleAnswer::not_potentially;
  std::optional<Witness> witness;
  std::uint64_t nodes = 0;
};

/// Placement-restricted search: every distinct labeled copy of the pattern
/// is laid on the highest-degree vertices (vertex order 0..|H|-1), then the
/// remaining demand is completed by backtracking. Placements are tried in
/// lexicographic permutation order and the first completion is returned.
/// Requires a graphic, positive sequence with n <= 12.
WitnessResult find_witness(const DegreeSequence& seq, PatternId pattern,
                           const SearchBudget& budget = {});

OracleAnswer potentially_oracle(const DegreeSequence& seq, PatternId pattern,
                                const SearchBudget& budget = {});

/// Unrestricted search: enumerate every realization and test containment at
/// the leaves. Slow; used to validate the placement restriction.
OracleAnswer exhaustive_oracle(const DegreeSequence& seq, PatternId pattern,
                               const SearchBudget& budget = {});

/// True when the placement-restricted and unrestricted searches agree.
/// Requires n <= 10; throws BudgetExhausted if either search runs out.
bool placement_agrees(const DegreeSequence& seq, PatternId pattern,
                      const SearchBudget& budget = {});

}  // namespace degseq
