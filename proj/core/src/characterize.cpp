#include "degseq/characterize.hpp"

#include <stdexcept>

#include "degseq/error.hpp"
#include "degseq/graphic.hpp"

namespace degseq {

namespace {

using Kind = PreconditionError::Kind;

void require_domain(const DegreeSequence& seq, std::size_t min_order) {
  if (!seq.all_positive()) {
    throw PreconditionError(Kind::zero_terms,
                            "sequence " + seq.to_string() + " has zero terms; only positive "
                            "sequences are characterized");
  }
  if (seq.size() < min_order) {
    throw PreconditionError(Kind::too_short, "sequence needs at least " +
                                                 std::to_string(min_order) + " terms");
  }
  if (!is_graphic_eg(seq)) {
    throw PreconditionError(Kind::not_graphic, "sequence " + seq.to_string() + " is not graphic");
  }
}

/// Collects violated clauses for one characterization.
class VerdictBuilder {
 public:
  VerdictBuilder(PatternId pattern, std::string_view rule, const DegreeSequence& seq)
      : rule_(rule) {
    verdict_.pattern = pattern;
    verdict_.sequence = seq;
  }

  /// Records "rule(clause):d<pos><<bound" when d_pos < bound.
  void at_least(int clause, std::size_t pos, int bound) {
    if (verdict_.sequence.d(pos) < bound) {
      fail(clause, "d" + std::to_string(pos) + "<" + std::to_string(bound));
    }
  }

  void fail(int clause, const std::string& detail) {
    verdict_.failed_conditions.push_back(std::string(rule_) + "(" + std::to_string(clause) +
                                         "):" + detail);
  }

  /// Records the first matching exception and the clause it violates.
  void exception(int clause, const FamilyMatch& match) {
    if (!verdict_.exception) verdict_.exception = match;
    if (match.family == ExceptionFamily::listed) {
      fail(clause, "pi=" + verdict_.sequence.to_string());
    } else {
      fail(clause, std::string(family_name(match.family)));
    }
  }

  void listed(int clause, const std::vector<DegreeSequence>& table) {
    for (const DegreeSequence& s : table) {
      if (s == verdict_.sequence) {
        FamilyMatch m;
        m.family = ExceptionFamily::listed;
        m.n = static_cast<int>(s.size());
        exception(clause, m);
        return;
      }
    }
  }

  void family(int clause, const std::optional<FamilyMatch>& match) {
    if (match) exception(clause, *match);
  }

  Verdict finish() {
    verdict_.decision = verdict_.failed_conditions.empty() && !verdict_.exception;
    return std::move(verdict_);
  }

 private:
  std::string_view rule_;
  Verdict verdict_;
};

std::optional<FamilyMatch> match_hub(const DegreeSequence& seq, int threes, ExceptionFamily fam) {
  const int n = static_cast<int>(seq.size());
  if (n < threes + 1) return std::nullopt;
  const DegreeSequence expected = DegreeSequence::from_runs({{n - 1, 1}, {3, threes}, {1, n - 1 - threes}});
  if (seq != expected) return std::nullopt;
  FamilyMatch m;
  m.family = fam;
  m.n = n;
  m.t = threes;
  return m;
}

const std::vector<DegreeSequence>& table_k5_p3() {
  static const std::vector<DegreeSequence> t = {
      DegreeSequence::from_runs({{4, 1}, {3, 2}, {2, 3}}),
      DegreeSequence::from_runs({{4, 1}, {3, 2}, {2, 4}}),
      DegreeSequence::from_runs({{4, 1}, {3, 6}}),
  };
  return t;
}

const std::vector<DegreeSequence>& table_k5_a3() {
  static const std::vector<DegreeSequence> t = {
      DegreeSequence::from_runs({{3, 4}, {2, 2}}),
      DegreeSequence::from_runs({{3, 6}}),
      DegreeSequence::from_runs({{3, 4}, {2, 3}}),
      DegreeSequence::from_runs({{3, 6}, {2, 1}}),
      DegreeSequence::from_runs({{4, 1}, {3, 6}}),
      DegreeSequence::from_runs({{3, 7}, {1, 1}}),
      DegreeSequence::from_runs({{3, 8}}),
  };
  return t;
}

const std::vector<DegreeSequence>& table_k5_k3() {
  static const std::vector<DegreeSequence> t = {
      DegreeSequence::from_runs({{4, 2}, {2, 4}}),
      DegreeSequence::from_runs({{4, 2}, {2, 5}}),
      DegreeSequence::from_runs({{4, 3}, {2, 3}}),
      DegreeSequence::from_runs({{4, 6}}),
  };
  return t;
}

const std::vector<DegreeSequence>& table_k5_k13() {
  static const std::vector<DegreeSequence> t = {
      DegreeSequence::from_runs({{4, 1}, {3, 4}, {2, 1}}),
      DegreeSequence::from_runs({{4, 6}}),
      DegreeSequence::from_runs({{4, 2}, {3, 4}}),
      DegreeSequence::from_runs({{4, 1}, {3, 6}}),
      DegreeSequence::from_runs({{4, 7}}),
      DegreeSequence::from_runs({{4, 1}, {3, 5}, {1, 1}}),
  };
  return t;
}

const std::vector<DegreeSequence>& table_k5_2k2() {
  static const std::vector<DegreeSequence> t = {
      DegreeSequence::from_runs({{4, 2}, {3, 4}}),
      DegreeSequence::from_runs({{4, 1}, {3, 4}, {2, 1}}),
      DegreeSequence::from_runs({{5, 1}, {4, 1}, {3, 5}}),
      DegreeSequence::from_runs({{5, 1}, {3, 5}, {2, 1}}),
      DegreeSequence::from_runs({{4, 7}}),
      DegreeSequence::from_runs({{4, 3}, {3, 4}}),
      DegreeSequence::from_runs({{4, 2}, {3, 4}, {2, 1}}),
      DegreeSequence::from_runs({{4, 1}, {3, 6}}),
      DegreeSequence::from_runs({{4, 1}, {3, 5}, {1, 1}}),
      DegreeSequence::from_runs({{4, 1}, {3, 4}, {2, 2}}),
      DegreeSequence::from_runs({{5, 1}, {3, 7}}),
      DegreeSequence::from_runs({{5, 1}, {3, 6}, {1, 1}}),
      DegreeSequence::from_runs({{4, 8}}),
      DegreeSequence::from_runs({{4, 2}, {3, 6}}),
      DegreeSequence::from_runs({{4, 2}, {3, 5}, {1, 1}}),
      DegreeSequence::from_runs({{4, 1}, {3, 6}, {2, 1}}),
      DegreeSequence::from_runs({{4, 1}, {3, 5}, {2, 1}, {1, 1}}),
      DegreeSequence::from_runs({{4, 1}, {3, 7}, {1, 1}}),
      DegreeSequence::from_runs({{4, 1}, {3, 6}, {1, 2}}),
  };
  return t;
}

}  // namespace

std::string_view family_name(ExceptionFamily family) {
  switch (family) {
    case ExceptionFamily::listed: return "listed";
    case ExceptionFamily::a3_family: return "A3_FAMILY";
    case ExceptionFamily::s1: return "S1";
    case ExceptionFamily::s2: return "S2";
    case ExceptionFamily::hub: return "HUB";
  }
  throw std::logic_error("unknown family");
}

DegreeSequence expand_family(const FamilyMatch& m) {
  const int n = m.n;
  switch (m.family) {
    case ExceptionFamily::listed:
      throw std::invalid_argument("listed exceptions carry no parameters");
    case ExceptionFamily::a3_family: {
      const int k = m.k.value();
      return DegreeSequence::from_runs({{n - 1, 1}, {3, 3}, {2, n - k}, {1, k - 4}});
    }
    case ExceptionFamily::s1: {
      const int i = m.i.value();
      const int j = m.j.value();
      const int k = m.k.value();
      const int free_terms = n - i - j;
      if (free_terms % 2 == 0) {
        return DegreeSequence::from_runs(
            {{n - i, 1}, {n - j, 1}, {3, free_terms - 2 * k}, {2, 2 * k}, {1, i + j - 2}});
      }
      return DegreeSequence::from_runs(
          {{n - i, 1}, {n - j, 1}, {3, free_terms - 2 * k - 1}, {2, 2 * k + 1}, {1, i + j - 2}});
    }
    case ExceptionFamily::s2:
    case ExceptionFamily::hub: {
      const int t = m.t.value();
      return DegreeSequence::from_runs({{n - 1, 1}, {3, t}, {1, n - 1 - t}});
    }
  }
  throw std::logic_error("unknown family");
}

std::optional<FamilyMatch> matches_family_a3(const DegreeSequence& seq) {
  const int n = static_cast<int>(seq.size());
  if (n < 6) return std::nullopt;
  const int k = 4 + static_cast<int>(seq.count_of(1));
  if (k > n - 2 || (n - k) % 2 != 0) return std::nullopt;
  FamilyMatch m;
  m.family = ExceptionFamily::a3_family;
  m.n = n;
  m.k = k;
  if (expand_family(m) != seq) return std::nullopt;
  return m;
}

std::optional<FamilyMatch> matches_family_s1(const DegreeSequence& seq) {
  const int n = static_cast<int>(seq.size());
  if (n < 6) return std::nullopt;
  const int i = n - seq.d(1);
  const int j = n - seq.d(2);
  if (i < 1 || i > j || j > n - 5) return std::nullopt;
  const int free_terms = n - i - j;
  if (free_terms < 4) return std::nullopt;
  // d_1, d_2 >= 5 here, so every 2-term belongs to the middle block.
  const int twos = static_cast<int>(seq.count_of(2));
  const bool odd = free_terms % 2 != 0;
  if (twos % 2 != (odd ? 1 : 0)) return std::nullopt;
  const int k = odd ? (twos - 1) / 2 : twos / 2;
  if (k < 0 || k > (free_terms - 4) / 2) return std::nullopt;
  FamilyMatch m;
  m.family = ExceptionFamily::s1;
  m.n = n;
  m.i = i;
  m.j = j;
  m.k = k;
  m.odd_branch = odd;
  if (expand_family(m) != seq) return std::nullopt;
  return m;
}

std::optional<FamilyMatch> matches_family_s2(const DegreeSequence& seq) {
  if (auto m = match_hub(seq, 5, ExceptionFamily::s2)) return m;
  return match_hub(seq, 6, ExceptionFamily::s2);
}

Verdict check_k5_p3(const DegreeSequence& seq) {
  require_domain(seq, 5);
  VerdictBuilder b(PatternId::K5_P3, "k5-p3", seq);
  b.at_least(1, 1, 4);
  b.at_least(1, 3, 3);
  b.at_least(1, 5, 2);
  b.listed(2, table_k5_p3());
  return b.finish();
}

Verdict check_k5_a3(const DegreeSequence& seq) {
  require_domain(seq, 5);
  VerdictBuilder b(PatternId::K5_A3, "k5-a3", seq);
  b.at_least(1, 4, 3);
  b.at_least(1, 5, 2);
  b.family(2, matches_family_a3(seq));
  b.listed(3, table_k5_a3());
  b.family(3, matches_family_s2(seq));
  return b.finish();
}

Verdict check_k5_k3(const DegreeSequence& seq) {
  require_domain(seq, 5);
  VerdictBuilder b(PatternId::K5_K3, "k5-k3", seq);
  b.at_least(1, 2, 4);
  b.at_least(1, 5, 2);
  b.listed(2, table_k5_k3());
  return b.finish();
}

Verdict check_k5_k13(const DegreeSequence& seq) {
  require_domain(seq, 5);
  VerdictBuilder b(PatternId::K5_K13, "k5-k13", seq);
  b.at_least(1, 1, 4);
  b.at_least(1, 4, 3);
  b.listed(2, table_k5_k13());
  b.family(2, match_hub(seq, 4, ExceptionFamily::hub));
  b.family(2, match_hub(seq, 5, ExceptionFamily::hub));
  return b.finish();
}

Verdict check_k5_2k2(const DegreeSequence& seq) {
  require_domain(seq, 5);
  VerdictBuilder b(PatternId::K5_2K2, "k5-2k2", seq);
  b.at_least(1, 1, 4);
  b.at_least(1, 5, 3);
  b.family(2, matches_family_s1(seq));
  b.listed(3, table_k5_2k2());
  b.family(3, matches_family_s2(seq));
  return b.finish();
}

Verdict check_c4(const DegreeSequence& seq) {
  require_domain(seq, 4);
  VerdictBuilder b(PatternId::C4, "c4", seq);
  const int n = static_cast<int>(seq.size());
  b.at_least(1, 4, 2);
  if (seq.d(1) == n - 1 && seq.d(2) < 3) b.fail(2, "d1=n-1,d2<3");
  if ((n == 5 || n == 6) && seq == DegreeSequence::from_runs({{2, n}})) {
    FamilyMatch m;
    m.family = ExceptionFamily::listed;
    m.n = n;
    b.exception(3, m);
  }
  return b.finish();
}

bool has_characterization(PatternId pattern) {
  switch (pattern) {
    case PatternId::K5_P3:
    case PatternId::K5_A3:
    case PatternId::K5_K3:
    case PatternId::K5_K13:
    case PatternId::K5_2K2:
    case PatternId::K122:
    case PatternId::K311:
    case PatternId::C4:
      return true;
    default:
      return false;
  }
}

Verdict characterize(PatternId pattern, const DegreeSequence& seq) {
  Verdict v;
  switch (pattern) {
    case PatternId::K5_P3: return check_k5_p3(seq);
    case PatternId::K5_A3: return check_k5_a3(seq);
    case PatternId::K5_K3: return check_k5_k3(seq);
    case PatternId::K5_K13: return check_k5_k13(seq);
    case PatternId::K5_2K2: return check_k5_2k2(seq);
    case PatternId::C4: return check_c4(seq);
    case PatternId::K311:
      v = check_k5_k3(seq);
      break;
    case PatternId::K122:
      v = check_k5_2k2(seq);
      break;
    default:
      throw PreconditionError(Kind::unsupported_pattern,
                              "no closed-form characterization for " +
                                  std::string(pattern_name(pattern)));
  }
  v.pattern = pattern;
  return v;
}

std::vector<DegreeSequence> listed_exceptions(PatternId pattern) {
  switch (pattern) {
    case PatternId::K5_P3: return table_k5_p3();
    case PatternId::K5_A3: return table_k5_a3();
    case PatternId::K5_K3:
    case PatternId::K311: return table_k5_k3();
    case PatternId::K5_K13: return table_k5_k13();
    case PatternId::K5_2K2:
    case PatternId::K122: return table_k5_2k2();
    case PatternId::C4:
      return {DegreeSequence::from_runs({{2, 5}}), DegreeSequence::from_runs({{2, 6}})};
    default:
      return {};
  }
}

}  // namespace degseq
