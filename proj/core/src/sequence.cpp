#include "degseq/sequence.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "degseq/error.hpp"

namespace degseq {

namespace {

constexpr long kMaxValue = 1'000'000;
constexpr long kMaxTerms = 1'000'000;

class SequenceParser {
 public:
  explicit SequenceParser(std::string_view text) : text_(text) {}

  std::vector<int> parse() {
    std::vector<int> out;
    skip_space();
    if (at_end()) throw ParseError("empty sequence", pos_);
    while (true) {
      const long value = parse_int("term");
      long count = 1;
      skip_space();
      if (peek() == '^') {
        ++pos_;
        const std::size_t exp_pos = position_after_space();
        count = parse_int("exponent");
        if (count == 0) throw ParseError("exponent must be at least 1", exp_pos);
      }
      if (static_cast<long>(out.size()) + count > kMaxTerms) {
        throw ParseError("sequence too long", pos_);
      }
      out.insert(out.end(), static_cast<std::size_t>(count), static_cast<int>(value));
      skip_space();
      if (at_end()) break;
      if (peek() != ',') throw ParseError("expected ',' or '^'", pos_);
      ++pos_;
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::size_t position_after_space() {
    skip_space();
    return pos_;
  }

  long parse_int(const char* what) {
    skip_space();
    if (peek() == '-') throw ParseError(std::string("negative ") + what, pos_);
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ParseError(std::string("expected integer ") + what, pos_);
    }
    const std::size_t start = pos_;
    long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > kMaxValue) throw ParseError(std::string(what) + " too large", start);
      ++pos_;
    }
    return value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

DegreeSequence::DegreeSequence(std::vector<int> terms) : terms_(std::move(terms)) {
  for (int t : terms_) {
    if (t < 0) throw PreconditionError(PreconditionError::Kind::out_of_range, "negative term");
  }
  std::sort(terms_.begin(), terms_.end(), std::greater<>());
  sigma_ = std::accumulate(terms_.begin(), terms_.end(), 0L);
}

DegreeSequence::DegreeSequence(std::initializer_list<int> terms)
    : DegreeSequence(std::vector<int>(terms)) {}

DegreeSequence DegreeSequence::from_runs(std::span<const Run> runs) {
  std::vector<int> terms;
  for (const Run& run : runs) {
    if (run.count < 0) {
      throw PreconditionError(PreconditionError::Kind::out_of_range, "negative run length");
    }
    terms.insert(terms.end(), static_cast<std::size_t>(run.count), run.value);
  }
  return DegreeSequence(std::move(terms));
}

DegreeSequence DegreeSequence::from_runs(std::initializer_list<Run> runs) {
  return from_runs(std::span<const Run>(runs.begin(), runs.size()));
}

std::size_t DegreeSequence::count_of(int value) const noexcept {
  return static_cast<std::size_t>(std::count(terms_.begin(), terms_.end(), value));
}

std::string DegreeSequence::to_string() const {
  std::string out;
  std::size_t i = 0;
  while (i < terms_.size()) {
    std::size_t j = i;
    while (j < terms_.size() && terms_[j] == terms_[i]) ++j;
    if (!out.empty()) out += ',';
    out += std::to_string(terms_[i]);
    if (j - i > 1) {
      out += '^';
      out += std::to_string(j - i);
    }
    i = j;
  }
  return out;
}

DegreeSequence parse_sequence(std::string_view text) {
  return DegreeSequence(SequenceParser(text).parse());
}

long sigma(const DegreeSequence& seq) noexcept { return seq.sigma(); }

Extremes m_h(const DegreeSequence& seq) {
  if (seq.empty() || seq[0] == 0) {
    throw PreconditionError(PreconditionError::Kind::zero_terms,
                            "sequence has no positive term");
  }
  Extremes e{seq[0], seq[0]};
  for (int t : seq.terms()) {
    if (t > 0) e.smallest = t;
  }
  return e;
}

LayOffIndex::LayOffIndex(const DegreeSequence& seq, std::size_t k) : k_(k) {
  if (k < 1 || k > seq.size()) {
    throw PreconditionError(PreconditionError::Kind::out_of_range,
                            "lay-off index " + std::to_string(k) + " outside [1, " +
                                std::to_string(seq.size()) + "]");
  }
  if (seq.d(k) == 0) {
    throw PreconditionError(PreconditionError::Kind::zero_terms, "cannot lay off a zero term");
  }
}

DegreeSequence lay_off(const DegreeSequence& seq, LayOffIndex index) {
  const std::size_t k = index.value();
  const std::size_t dk = static_cast<std::size_t>(seq.d(k));
  std::vector<int> rest;
  rest.reserve(seq.size() - 1);
  for (std::size_t pos = 1; pos <= seq.size(); ++pos) {
    if (pos != k) rest.push_back(seq.d(pos));
  }
  // In both branches the decremented terms are the first d_k entries of the
  // sequence with position k removed.
  if (dk > rest.size()) {
    throw PreconditionError(PreconditionError::Kind::not_graphic,
                            "d_k exceeds the number of remaining terms");
  }
  for (std::size_t i = 0; i < dk; ++i) {
    if (rest[i] == 0) {
      throw PreconditionError(PreconditionError::Kind::not_graphic,
                              "laying off would make a term negative");
    }
    --rest[i];
  }
  return DegreeSequence(std::move(rest));
}

}  // namespace degseq
