#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "degseq/graph.hpp"

namespace degseq {

/// Target graphs. K5_X is K5 with the edges of X removed; A3 is a 2-edge
/// path plus a disjoint edge; K122 and K311 are complete tripartite graphs
/// (isomorphic to K5_2K2 and K5_K3 respectively).
enum class PatternId {
  K5_P3,
  K5_A3,
  K5_K3,
  K5_K13,
  K5_2K2,
  C4,
  C5,
  K5_C4,
  K5_E,
  K122,
  K311,
};

inline constexpr std::array<PatternId, 11> kAllPatterns = {
    PatternId::K5_P3, PatternId::K5_A3, PatternId::K5_K3, PatternId::K5_K13,
    PatternId::K5_2K2, PatternId::C4, PatternId::C5, PatternId::K5_C4,
    PatternId::K5_E, PatternId::K122, PatternId::K311,
};

/// Patterns with a closed-form characterization in characterize.hpp.
inline constexpr std::array<PatternId, 5> kCharacterizedK5Patterns = {
    PatternId::K5_P3, PatternId::K5_A3, PatternId::K5_K3, PatternId::K5_K13, PatternId::K5_2K2,
};

/// Kebab-case token used on the command line and in reports ("k5-p3").
std::string_view pattern_name(PatternId id);
/// Accepts every token pattern_name produces, case-insensitively.
std::optional<PatternId> parse_pattern(std::string_view name);

/// Canonical labeled graph. Removed edges: K5_P3 {01,12,23}, K5_A3
/// {01,12,34}, K5_K3 {01,02,12}, K5_K13 {01,02,03}, K5_2K2 {01,23},
/// K5_C4 {01,12,23,03}, K5_E {01}. K122 has parts {0},{1,2},{3,4}; K311 has
/// parts {0,1,2},{3},{4}.
const SmallGraph& pattern_graph(PatternId id);

/// Checks the isomorphic pairs K122 ~ K5_2K2 and K311 ~ K5_K3. Throws
/// std::logic_error if the built-in tables disagree.
void verify_pattern_identities();

}  // namespace degseq
