#include "doctest.h"

#include "brute_force.hpp"
#include "degseq/patterns.hpp"

using namespace degseq;
using namespace degseq::testing;

TEST_CASE("edge counts and degree sequences") {
  CHECK(pattern_graph(PatternId::K5_P3).edge_count() == 7);
  CHECK(pattern_graph(PatternId::K5_A3).edge_count() == 7);
  CHECK(pattern_graph(PatternId::K5_K3).edge_count() == 7);
  CHECK(pattern_graph(PatternId::K5_K13).edge_count() == 7);
  CHECK(pattern_graph(PatternId::K5_2K2).edge_count() == 8);
  CHECK(pattern_graph(PatternId::K5_C4).edge_count() == 6);
  CHECK(pattern_graph(PatternId::K5_E).edge_count() == 9);
  CHECK(pattern_graph(PatternId::C4).edge_count() == 4);
  CHECK(pattern_graph(PatternId::C5).edge_count() == 5);

  CHECK(pattern_graph(PatternId::K5_K3).degree_sequence() == DegreeSequence{4, 4, 2, 2, 2});
  CHECK(pattern_graph(PatternId::K5_P3).degree_sequence() == DegreeSequence{4, 3, 3, 2, 2});
  CHECK(pattern_graph(PatternId::K5_A3).degree_sequence() == DegreeSequence{3, 3, 3, 3, 2});
  CHECK(pattern_graph(PatternId::K5_K13).degree_sequence() == DegreeSequence{4, 3, 3, 3, 1});
  CHECK(pattern_graph(PatternId::K5_2K2).degree_sequence() == DegreeSequence{4, 3, 3, 3, 3});
  CHECK(pattern_graph(PatternId::K5_C4).degree_sequence() == DegreeSequence{4, 2, 2, 2, 2});
}

TEST_CASE("tripartite aliases") {
  CHECK(is_isomorphic(pattern_graph(PatternId::K122), pattern_graph(PatternId::K5_2K2)));
  CHECK(is_isomorphic(pattern_graph(PatternId::K311), pattern_graph(PatternId::K5_K3)));
  CHECK_FALSE(is_isomorphic(pattern_graph(PatternId::K5_P3), pattern_graph(PatternId::K5_A3)));
  CHECK_NOTHROW(verify_pattern_identities());
}

TEST_CASE("containment chain among the K5 family") {
  const SmallGraph& k5e = pattern_graph(PatternId::K5_E);
  for (PatternId p : kCharacterizedK5Patterns) CHECK(naive_contains(k5e, pattern_graph(p)));
  // H1 sits inside H2 exactly when the removed edges of H2 embed in those of H1.
  CHECK(naive_contains(pattern_graph(PatternId::K5_2K2), pattern_graph(PatternId::K5_P3)));
  CHECK(naive_contains(pattern_graph(PatternId::K5_P3), pattern_graph(PatternId::K5_C4)));
  CHECK_FALSE(naive_contains(pattern_graph(PatternId::K5_A3), pattern_graph(PatternId::K5_C4)));
  CHECK_FALSE(naive_contains(pattern_graph(PatternId::K5_C4), pattern_graph(PatternId::C5)));
  CHECK(naive_contains(pattern_graph(PatternId::K5_E), cycle_graph(5)));
  CHECK_FALSE(naive_contains(pattern_graph(PatternId::K5_K3), pattern_graph(PatternId::K5_P3)));
}

TEST_CASE("names round trip") {
  for (PatternId p : kAllPatterns) {
    CHECK(parse_pattern(pattern_name(p)) == p);
  }
  CHECK(parse_pattern("K5-P3") == PatternId::K5_P3);
  CHECK(pattern_name(PatternId::K5_2K2) == "k5-2k2");
  CHECK_FALSE(parse_pattern("k6"));
  CHECK_FALSE(parse_pattern(""));
}
