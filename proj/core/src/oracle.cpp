#include "degseq/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "degseq/error.hpp"
#include "degseq/graphic.hpp"
#include "realization_search.hpp"

namespace degseq {

using detail::BudgetMeter;
using detail::RealizationSearch;

namespace {

using Kind = PreconditionError::Kind;

void require_searchable(const DegreeSequence& seq, std::size_t max_order) {
  if (seq.size() > max_order) {
    throw PreconditionError(Kind::too_large, "search limited to " + std::to_string(max_order) +
                                                 " vertices, got " + std::to_string(seq.size()));
  }
  if (!is_graphic_eg(seq)) {
    throw PreconditionError(Kind::not_graphic, "sequence " + seq.to_string() + " is not graphic");
  }
}

void require_positive(const DegreeSequence& seq) {
  if (!seq.all_positive()) {
    throw PreconditionError(Kind::zero_terms,
                            "sequence " + seq.to_string() + " has zero terms");
  }
}

struct Placement {
  std::array<VertexMask, RealizationSearch::kMaxOrder> rows{};
  std::vector<int> embedding;
};

/// Distinct labeled copies of `pattern` on graph vertices 0..|H|-1 whose
/// degrees fit under seq, first occurrence in permutation order.
std::vector<Placement> placements(const DegreeSequence& seq, const SmallGraph& pattern) {
  const int k = pattern.order();
  std::vector<Placement> out;
  if (static_cast<std::size_t>(k) > seq.size()) return out;
  std::set<std::array<VertexMask, RealizationSearch::kMaxOrder>> seen;
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  const std::vector<Edge> edges = pattern.edges();
  do {
    Placement p;
    for (const Edge& e : edges) {
      const int a = perm[e.u];
      const int b = perm[e.v];
      p.rows[a] = static_cast<VertexMask>(p.rows[a] | (1U << b));
      p.rows[b] = static_cast<VertexMask>(p.rows[b] | (1U << a));
    }
    bool fits = true;
    for (int v = 0; v < k && fits; ++v) {
      if (std::popcount(p.rows[v]) > seq[v]) fits = false;
    }
    if (!fits || !seen.insert(p.rows).second) continue;
    p.embedding = perm;
    out.push_back(std::move(p));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

std::string_view answer_name(OracleAnswer answer) {
  switch (answer) {
    case OracleAnswer::potentially: return "potentially";
    case OracleAnswer::not_potentially: return "not-potentially";
    case OracleAnswer::budget_exhausted: return "budget-exhausted";
  }
  return "unknown";
}

SearchStatus enumerate_realizations(const DegreeSequence& seq,
                                    const std::function<Visit(const SmallGraph&)>& visit,
                                    const SearchBudget& budget) {
  require_searchable(seq, RealizationSearch::kMaxOrder);
  BudgetMeter meter(budget);
  RealizationSearch search(seq.terms(), {}, meter);
  return search.run(visit);
}

WitnessResult find_witness(const DegreeSequence& seq, PatternId pattern,
                           const SearchBudget& budget) {
  require_searchable(seq, RealizationSearch::kMaxOrder);
  require_positive(seq);
  const SmallGraph& target = pattern_graph(pattern);
  BudgetMeter meter(budget);
  WitnessResult result;
  for (const Placement& p : placements(seq, target)) {
    RealizationSearch search(seq.terms(), std::span<const VertexMask>(p.rows.data(), seq.size()),
                             meter);
    std::optional<SmallGraph> found;
    const SearchStatus status = search.run([&](const SmallGraph& g) {
      found = g;
      return Visit::stop;
    });
    if (status == SearchStatus::stopped) {
      result.answer = OracleAnswer::potentially;
      result.witness = Witness{*found, p.embedding};
      result.nodes = meter.nodes();
      return result;
    }
    if (status == SearchStatus::budget_exhausted) {
      result.answer = OracleAnswer::budget_exhausted;
      result.nodes = meter.nodes();
      return result;
    }
  }
  result.answer = OracleAnswer::not_potentially;
  result.nodes = meter.nodes();
  return result;
}

OracleAnswer potentially_oracle(const DegreeSequence& seq, PatternId pattern,
                                const SearchBudget& budget) {
  return find_witness(seq, pattern, budget).answer;
}

OracleAnswer exhaustive_oracle(const DegreeSequence& seq, PatternId pattern,
                               const SearchBudget& budget) {
  require_positive(seq);
  const SmallGraph& target = pattern_graph(pattern);
  const SearchStatus status = enumerate_realizations(
      seq,
      [&](const SmallGraph& g) { return contains_subgraph(g, target) ? Visit::stop : Visit::proceed; },
      budget);
  switch (status) {
    case SearchStatus::stopped: return OracleAnswer::potentially;
    case SearchStatus::completed: return OracleAnswer::not_potentially;
    case SearchStatus::budget_exhausted: return OracleAnswer::budget_exhausted;
  }
  return OracleAnswer::budget_exhausted;
}

bool placement_agrees(const DegreeSequence& seq, PatternId pattern, const SearchBudget& budget) {
  require_searchable(seq, 10);
  const OracleAnswer restricted = potentially_oracle(seq, pattern, budget);
  const OracleAnswer unrestricted = exhaustive_oracle(seq, pattern, budget);
  if (restricted == OracleAnswer::budget_exhausted ||
      unrestricted == OracleAnswer::budget_exhausted) {
    throw BudgetExhausted("search budget exhausted for " + seq.to_string());
  }
  return restricted == unrestricted;
}

}  // namespace degseq
