#include "doctest.h"

#include <algorithm>

#include "degseq/characterize.hpp"
#include "degseq/error.hpp"
#include "degseq/extremal.hpp"
#include "degseq/graphic.hpp"

using namespace degseq;

namespace {

Verdict check(PatternId p, const char* text) { return characterize(p, parse_sequence(text)); }

bool has_condition(const Verdict& v, const std::string& id) {
  return std::find(v.failed_conditions.begin(), v.failed_conditions.end(), id) !=
         v.failed_conditions.end();
}

}  // namespace

TEST_CASE("k5-p3") {
  CHECK(check(PatternId::K5_P3, "4^5").decision);
  const Verdict listed = check(PatternId::K5_P3, "4,3^2,2^3");
  CHECK_FALSE(listed.decision);
  REQUIRE(listed.exception);
  CHECK(listed.exception->family == ExceptionFamily::listed);
  CHECK(listed.failed_conditions == std::vector<std::string>{"k5-p3(2):pi=4,3^2,2^3"});
  const Verdict low = check(PatternId::K5_P3, "6^2,2^5");
  CHECK_FALSE(low.decision);
  CHECK(has_condition(low, "k5-p3(1):d3<3"));
  CHECK_FALSE(low.exception);
}

TEST_CASE("k5-a3") {
  const Verdict fam = check(PatternId::K5_A3, "5,3^3,2^2");
  CHECK_FALSE(fam.decision);
  REQUIRE(fam.exception);
  CHECK(fam.exception->family == ExceptionFamily::a3_family);
  CHECK(fam.exception->n == 6);
  CHECK(fam.exception->k == 4);
  const Verdict s2 = check(PatternId::K5_A3, "6,3^5,1");
  CHECK_FALSE(s2.decision);
  REQUIRE(s2.exception);
  CHECK(s2.exception->family == ExceptionFamily::s2);
  CHECK(s2.exception->t == 5);
  CHECK(check(PatternId::K5_A3, "3^4,2").decision);
}

TEST_CASE("k5-k3") {
  const Verdict v = check(PatternId::K5_K3, "4^2,2^4");
  CHECK_FALSE(v.decision);
  REQUIRE(v.exception);
  CHECK(v.exception->family == ExceptionFamily::listed);
  CHECK(check(PatternId::K5_K3, "5^4,4^3").decision);
  const Verdict low = check(PatternId::K5_K3, "4,3^4");
  CHECK_FALSE(low.decision);
  CHECK(has_condition(low, "k5-k3(1):d2<4"));
}

TEST_CASE("k5-k13") {
  const Verdict listed = check(PatternId::K5_K13, "4,3^4,2");
  CHECK_FALSE(listed.decision);
  REQUIRE(listed.exception);
  CHECK(listed.exception->family == ExceptionFamily::listed);
  CHECK(check(PatternId::K5_K13, "4,3^3,1").decision);
  const Verdict hub = check(PatternId::K5_K13, "5,3^4,1");
  CHECK_FALSE(hub.decision);
  REQUIRE(hub.exception);
  CHECK(hub.exception->family == ExceptionFamily::hub);
  CHECK(hub.exception->n == 6);
  CHECK(hub.exception->t == 4);
}

TEST_CASE("k5-2k2") {
  const Verdict s1 = check(PatternId::K5_2K2, "6^2,3^4,2");
  CHECK_FALSE(s1.decision);
  REQUIRE(s1.exception);
  CHECK(*s1.exception == FamilyMatch{ExceptionFamily::s1, 7, 1, 1, 0, std::nullopt, true});
  CHECK(has_condition(s1, "k5-2k2(2):S1"));
  const Verdict listed = check(PatternId::K5_2K2, "4^2,3^4");
  CHECK_FALSE(listed.decision);
  REQUIRE(listed.exception);
  CHECK(listed.exception->family == ExceptionFamily::listed);
  CHECK(check(PatternId::K5_2K2, "4^6").decision);
}

TEST_CASE("every violated clause is reported, in clause order") {
  // d1 < 4, d3 < 3 and d5 < 2 all fail.
  const Verdict v = check(PatternId::K5_P3, "3,2^3,1");
  CHECK(v.failed_conditions ==
        std::vector<std::string>{"k5-p3(1):d1<4", "k5-p3(1):d3<3", "k5-p3(1):d5<2"});
  const Verdict c = check(PatternId::C4, "5,2^2,1^3");
  CHECK(c.failed_conditions == std::vector<std::string>{"c4(1):d4<2", "c4(2):d1=n-1,d2<3"});
}

TEST_CASE("c4") {
  CHECK_FALSE(check(PatternId::C4, "2^5").decision);
  CHECK_FALSE(check(PatternId::C4, "2^6").decision);
  CHECK(check(PatternId::C4, "2^7").decision);
  CHECK(check(PatternId::C4, "2^4").decision);
  const Verdict v = check(PatternId::C4, "6,2^6");
  CHECK_FALSE(v.decision);
  CHECK(has_condition(v, "c4(2):d1=n-1,d2<3"));
}

TEST_CASE("aliases route to the isomorphic rule") {
  const Verdict a = check(PatternId::K311, "4^2,2^4");
  CHECK(a.pattern == PatternId::K311);
  CHECK_FALSE(a.decision);
  CHECK(check(PatternId::K122, "4,3^4").decision);
  CHECK_THROWS_AS(check(PatternId::C5, "2^5"), PreconditionError);
  CHECK_FALSE(has_characterization(PatternId::K5_C4));
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(check(PatternId::K5_P3, "4^4"), PreconditionError);
  CHECK_THROWS_AS(check(PatternId::K5_P3, "3^5"), PreconditionError);
  CHECK_THROWS_AS(check(PatternId::K5_P3, "2^4,0"), PreconditionError);
  CHECK_THROWS_AS(check(PatternId::C4, "2^3"), PreconditionError);
  try {
    check(PatternId::K5_A3, "4^2,1^4");
    FAIL("expected PreconditionError");
  } catch (const PreconditionError& e) {
    CHECK(e.kind() == PreconditionError::Kind::not_graphic);
  }
}

TEST_CASE("family matcher examples") {
  const auto a = matches_family_a3(parse_sequence("7,3^3,2^4"));
  REQUIRE(a);
  CHECK(a->n == 8);
  CHECK(a->k == 4);
  CHECK(matches_family_a3(parse_sequence("5,3^3,2^2")));
  CHECK_FALSE(matches_family_a3(parse_sequence("6,3^3,2^3")));

  const auto even = matches_family_s1(parse_sequence("6,5,3^4,1"));
  REQUIRE(even);
  CHECK(*even == FamilyMatch{ExceptionFamily::s1, 7, 1, 2, 0, std::nullopt, false});
  CHECK(matches_family_s1(parse_sequence("6^2,3^4,2")));
  CHECK_FALSE(matches_family_s1(parse_sequence("6,3^5,1")));
  const auto s2 = matches_family_s2(parse_sequence("6,3^5,1"));
  REQUIRE(s2);
  CHECK(s2->t == 5);
  CHECK(matches_family_s2(parse_sequence("7,3^6,1")));
  CHECK_FALSE(matches_family_s2(parse_sequence("6,3^4,1^2")));
}

TEST_CASE("every reported exception re-expands to the input") {
  for (int n = 5; n <= 9; ++n) {
    for (const DegreeSequence& s : enumerate_graphic_sequences(n)) {
      for (PatternId p : kCharacterizedK5Patterns) {
        const Verdict v = characterize(p, s);
        CHECK(v.decision == (v.failed_conditions.empty() && !v.exception));
        if (v.exception && v.exception->family != ExceptionFamily::listed) {
          if (expand_family(*v.exception) != s) FAIL_CHECK(s.to_string());
        }
      }
    }
  }
  CHECK_THROWS_AS(expand_family(FamilyMatch{}), std::invalid_argument);
}

TEST_CASE("listed exceptions are graphic and rejected") {
  for (PatternId p : kCharacterizedK5Patterns) {
    const auto table = listed_exceptions(p);
    CHECK_FALSE(table.empty());
    for (const DegreeSequence& s : table) {
      INFO(pattern_name(p), " ", s.to_string());
      CHECK(is_graphic_eg(s));
      CHECK_FALSE(characterize(p, s).decision);
    }
  }
  CHECK(listed_exceptions(PatternId::K5_2K2).size() == 19);
}

// If the residual after laying off d_n is accepted, so is the sequence.
TEST_CASE("verdicts are monotone under laying off the last term") {
  for (int n = 6; n <= 8; ++n) {
    for (const DegreeSequence& s : enumerate_graphic_sequences(n)) {
      const DegreeSequence residual = lay_off(s, LayOffIndex(s, s.size()));
      if (!residual.all_positive()) continue;
      for (PatternId p : kCharacterizedK5Patterns) {
        if (characterize(p, residual).decision && !characterize(p, s).decision) {
          FAIL_CHECK(pattern_name(p) << " " << s.to_string());
        }
      }
    }
  }
}
