#include "doctest.h"

#include <random>
#include <set>

#include "brute_force.hpp"
#include "degseq/error.hpp"
#include "degseq/graphic.hpp"

using namespace degseq;
using namespace degseq::testing;

TEST_CASE("hand-checked sequences") {
  CHECK(is_graphic_eg(DegreeSequence{3, 3, 3, 3}));
  CHECK(is_graphic_eg(DegreeSequence{}));
  CHECK(is_graphic_eg(DegreeSequence{0, 0}));
  CHECK_FALSE(is_graphic_eg(DegreeSequence{3, 3, 1, 1}));
  CHECK_FALSE(is_graphic_eg(DegreeSequence{3, 3, 3, 1}));
  CHECK_FALSE(is_graphic_eg(DegreeSequence{2, 1}));
  CHECK_FALSE(is_graphic_eg(DegreeSequence{4, 1, 1, 1}));

  const auto odd = erdos_gallai_violation(DegreeSequence{2, 1});
  REQUIRE(odd);
  CHECK(odd->odd_sum);
  const auto ineq = erdos_gallai_violation(DegreeSequence{3, 3, 1, 1});
  REQUIRE(ineq);
  CHECK_FALSE(ineq->odd_sum);
  CHECK(ineq->k == 2);
  CHECK_FALSE(erdos_gallai_violation(DegreeSequence{2, 2, 2}));
}

TEST_CASE("Erdos-Gallai matches the set of realized degree sequences, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    const std::set<DegreeSequence> realized = realized_sequences(n);
    for (const DegreeSequence& s : all_sequences(n, 0, n)) {
      INFO(s.to_string());
      CHECK(is_graphic_eg(s) == (realized.count(s) == 1));
    }
  }
}

TEST_CASE("Erdos-Gallai and Kleitman-Wang agree on every sequence with n <= 8, terms <= 7") {
  std::size_t graphic = 0;
  for (int n = 1; n <= 8; ++n) {
    for (const DegreeSequence& s : all_sequences(n, 0, 7)) {
      const bool eg = is_graphic_eg(s);
      graphic += eg ? 1 : 0;
      if (eg != is_graphic_kw(s)) FAIL_CHECK(s.to_string());
    }
  }
  CHECK(graphic > 0);
}

TEST_CASE("fast path never contradicts Erdos-Gallai") {
  SUBCASE("small-maximum branch, m <= 2, n <= 12") {
    std::size_t claims = 0;
    for (int n = 1; n <= 12; ++n) {
      for (const DegreeSequence& s : all_sequences(n, 0, 2)) {
        const auto fast = graphic_fast_path(s);
        if (!fast) continue;
        ++claims;
        if (*fast != is_graphic_eg(s)) FAIL_CHECK(s.to_string());
      }
    }
    CHECK(claims > 0);
  }
  SUBCASE("cubic-bounded branch, terms <= 3, n <= 10") {
    std::size_t claims = 0;
    for (int n = 1; n <= 10; ++n) {
      for (const DegreeSequence& s : all_sequences(n, 0, 3)) {
        const auto fast = graphic_fast_path(s);
        if (!fast) continue;
        ++claims;
        if (*fast != is_graphic_eg(s)) FAIL_CHECK(s.to_string());
      }
    }
    CHECK(claims > 0);
  }
  CHECK_FALSE(graphic_fast_path(DegreeSequence{3, 3, 3, 1}));
  CHECK_FALSE(graphic_fast_path(DegreeSequence{3, 3, 1, 1}));
  CHECK(graphic_fast_path(DegreeSequence{3, 3, 2, 2}) == std::optional<bool>(true));
  CHECK_FALSE(graphic_fast_path(DegreeSequence{5, 5, 5, 5, 5, 5}));
}

TEST_CASE("Havel-Hakimi realizes every graphic sequence with n <= 9") {
  for (int n = 1; n <= 9; ++n) {
    for (const DegreeSequence& s : all_sequences(n, 0, n - 1)) {
      if (!is_graphic_eg(s)) {
        CHECK_THROWS_AS(havel_hakimi_realize(s), PreconditionError);
        continue;
      }
      const SmallGraph g = havel_hakimi_realize(s);
      for (int v = 0; v < n; ++v) {
        if (g.degree(v) != s[static_cast<std::size_t>(v)]) {
          FAIL_CHECK(s.to_string());
          break;
        }
      }
    }
  }
}

TEST_CASE("Havel-Hakimi is deterministic") {
  const DegreeSequence s = parse_sequence("4,3^2,2^3");
  CHECK(havel_hakimi_realize(s) == havel_hakimi_realize(s));
  CHECK(to_edge_list(havel_hakimi_realize(s)) == "0-1\n0-2\n0-3\n0-4\n1-2\n1-5\n2-3\n4-5\n");
}

// Laying off any positive term of a graphic sequence leaves a graphic
// sequence, and the converse holds too.
TEST_CASE("lay-off preserves graphicality in both directions") {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 4000; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 11)(rng);
    std::vector<int> terms(static_cast<std::size_t>(n));
    for (int& t : terms) t = std::uniform_int_distribution<int>(0, n - 1)(rng);
    const DegreeSequence s(terms);
    if (s.sigma() % 2 != 0) continue;
    const bool graphic = is_graphic_eg(s);
    for (std::size_t k = 1; k <= s.size(); ++k) {
      if (s.d(k) == 0) continue;
      DegreeSequence residual;
      try {
        residual = lay_off(s, LayOffIndex(s, k));
      } catch (const PreconditionError&) {
        CHECK_FALSE(graphic);
        continue;
      }
      if (is_graphic_eg(residual) != graphic) FAIL_CHECK(s.to_string() << " k=" << k);
    }
  }
}
