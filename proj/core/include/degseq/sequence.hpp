#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace degseq {

/// A run `value^count` in power notation.
struct Run {
  int value = 0;
  int count = 0;
};

/// Non-increasing list of nonnegative integers. Construction sorts, so two
/// sequences holding the same multiset always compare equal. Graphicality is
/// not required; see graphic.hpp.
class DegreeSequence {
 public:
  DegreeSequence() = default;
  explicit DegreeSequence(std::vector<int> terms);
  DegreeSequence(std::initializer_list<int> terms);

  /// Expands runs such as {{4,2},{3,4}} into (4,4,3,3,3,3). Runs with a zero
  /// count contribute nothing.
  static DegreeSequence from_runs(std::span<const Run> runs);
  static DegreeSequence from_runs(std::initializer_list<Run> runs);

  std::span<const int> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  /// 0-based access.
  int operator[](std::size_t i) const { return terms_[i]; }
  /// 1-based access matching the usual d_1 >= d_2 >= ... labelling.
  int d(std::size_t k) const { return terms_.at(k - 1); }

  long sigma() const noexcept { return sigma_; }

  bool all_positive() const noexcept { return terms_.empty() || terms_.back() > 0; }
  std::size_t count_of(int value) const noexcept;

  /// Power notation, exponents only when > 1: "4^2,3^4". Empty renders "".
  std::string to_string() const;

  friend bool operator==(const DegreeSequence& a, const DegreeSequence& b) {
    return a.terms_ == b.terms_;
  }
  friend std::strong_ordering operator<=>(const DegreeSequence& a, const DegreeSequence& b) {
    return a.terms_ <=> b.terms_;
  }

 private:
  std::vector<int> terms_;
  long sigma_ = 0;
};

/// Parses `item ("," item)*` with `item := INT | INT "^" INT`. Whitespace is
/// ignored. Throws ParseError on bad syntax, negative values or a zero
/// exponent.
DegreeSequence parse_sequence(std::string_view text);

long sigma(const DegreeSequence& seq) noexcept;

struct Extremes {
  int largest = 0;   ///< m(pi): largest positive term
  int smallest = 0;  ///< h(pi): smallest positive term
};

/// Largest and smallest positive terms. Throws PreconditionError when the
/// sequence has no positive term.
Extremes m_h(const DegreeSequence& seq);

/// 1-based position of the term being laid off. Rejects k outside [1, n] and
/// positions holding a zero.
class LayOffIndex {
 public:
  LayOffIndex(const DegreeSequence& seq, std::size_t k);
  std::size_t value() const noexcept { return k_; }

 private:
  std::size_t k_;
};

/// Residual sequence obtained by laying off d_k: when d_k >= k, positions
/// 1..d_k+1 except k are decremented, otherwise positions 1..d_k are;
/// position k is then removed and the rest re-sorted. Throws
/// PreconditionError when a decremented term would go negative or there are
/// too few terms to decrement.
DegreeSequence lay_off(const DegreeSequence& seq, LayOffIndex k);

}  // namespace degseq
