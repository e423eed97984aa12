#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "degseq/graph.hpp"
#include "degseq/sequence.hpp"

namespace degseq {

/// Erdős–Gallai test. Zeros are allowed.
bool is_graphic_eg(const DegreeSequence& seq);

/// Same test over a raw non-increasing span; used by the search code on
/// residual demands.
bool is_graphic_eg(std::span<const int> non_increasing);

/// Why a sequence failed Erdős–Gallai: odd degree sum, or the first (1-based)
/// prefix length k whose inequality is violated.
struct GraphicViolation {
  bool odd_sum = false;
  std::size_t k = 0;
};
std::optional<GraphicViolation> erdos_gallai_violation(const DegreeSequence& seq);

/// Kleitman–Wang recursion: repeatedly lay off the last positive term.
bool is_graphic_kw(const DegreeSequence& seq);

/// Closed-form sufficient conditions. Returns true when either
///   - 1 <= m <= 2, h = 1 and the sum is even, or
///   - all terms positive, sum even, n >= 4, d_1 <= 3 and the sequence is
///     neither (3^3,1) nor (3^2,1^2);
/// otherwise std::nullopt (no claim either way).
std::optional<bool> graphic_fast_path(const DegreeSequence& seq);

/// Deterministic Havel–Hakimi construction. Vertex i of the result has
/// degree seq[i]. The highest remaining demand (lowest label on ties) is
/// joined to the next-highest remaining demands (lowest labels on ties).
SmallGraph havel_hakimi_realize(const DegreeSequence& seq);

}  // namespace degseq
