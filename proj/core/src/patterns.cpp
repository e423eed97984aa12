#include "degseq/patterns.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

namespace degseq {

namespace {

SmallGraph k5_minus(std::initializer_list<Edge> removed) {
  SmallGraph g = complete_graph(5);
  for (const Edge& e : removed) g.remove_edge(e.u, e.v);
  return g;
}

SmallGraph build(PatternId id) {
  switch (id) {
    case PatternId::K5_P3: return k5_minus({{0, 1}, {1, 2}, {2, 3}});
    case PatternId::K5_A3: return k5_minus({{0, 1}, {1, 2}, {3, 4}});
    case PatternId::K5_K3: return k5_minus({{0, 1}, {0, 2}, {1, 2}});
    case PatternId::K5_K13: return k5_minus({{0, 1}, {0, 2}, {0, 3}});
    case PatternId::K5_2K2: return k5_minus({{0, 1}, {2, 3}});
    case PatternId::C4: return cycle_graph(4);
    case PatternId::C5: return cycle_graph(5);
    case PatternId::K5_C4: return k5_minus({{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    case PatternId::K5_E: return k5_minus({{0, 1}});
    case PatternId::K122: return k5_minus({{1, 2}, {3, 4}});
    case PatternId::K311: return k5_minus({{0, 1}, {0, 2}, {1, 2}});
  }
  throw std::logic_error("unknown pattern");
}

}  // namespace

std::string_view pattern_name(PatternId id) {
  switch (id) {
    case PatternId::K5_P3: return "k5-p3";
    case PatternId::K5_A3: return "k5-a3";
    case PatternId::K5_K3: return "k5-k3";
    case PatternId::K5_K13: return "k5-k13";
    case PatternId::K5_2K2: return "k5-2k2";
    case PatternId::C4: return "c4";
    case PatternId::C5: return "c5";
    case PatternId::K5_C4: return "k5-c4";
    case PatternId::K5_E: return "k5-e";
    case PatternId::K122: return "k122";
    case PatternId::K311: return "k311";
  }
  throw std::logic_error("unknown pattern");
}

std::optional<PatternId> parse_pattern(std::string_view name) {
  std::string lowered(name);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (PatternId id : kAllPatterns) {
    if (pattern_name(id) == lowered) return id;
  }
  return std::nullopt;
}

const SmallGraph& pattern_graph(PatternId id) {
  static const auto table = [] {
    std::array<SmallGraph, kAllPatterns.size()> t;
    for (PatternId p : kAllPatterns) t[static_cast<std::size_t>(p)] = build(p);
    return t;
  }();
  return table[static_cast<std::size_t>(id)];
}

void verify_pattern_identities() {
  if (!is_isomorphic(pattern_graph(PatternId::K122), pattern_graph(PatternId::K5_2K2))) {
    throw std::logic_error("K122 is not isomorphic to K5-2K2");
  }
  if (!is_isomorphic(pattern_graph(PatternId::K311), pattern_graph(PatternId::K5_K3))) {
    throw std::logic_error("K311 is not isomorphic to K5-K3");
  }
}

}  // namespace degseq
