#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include "degseq/graph.hpp"
#include "degseq/oracle.hpp"

namespace degseq::detail {

/// Node/time accounting shared by every search launched for one query.
class BudgetMeter {
 public:
  explicit BudgetMeter(const SearchBudget& budget);

  /// Counts one node; false once the budget is gone.
  bool charge();
  bool exhausted() const noexcept { return exhausted_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::uint64_t max_nodes_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

/// Row-by-row backtracking over labeled realizations of a degree vector,
/// optionally forced to contain a fixed edge set.
class RealizationSearch {
 public:
  static constexpr int kMaxOrder = 12;

  RealizationSearch(std::span<const int> degrees, std::span<const VertexMask> required,
                    BudgetMeter& meter);

  SearchStatus run(const std::function<Visit(const SmallGraph&)>& visit);

 private:
  bool search_row(int v);
  bool choose(int v, std::size_t from, int remaining);
  bool feasible_after(int v) const;

  int n_;
  std::array<int, kMaxOrder> residual_{};
  std::array<VertexMask, kMaxOrder> required_{};
  std::array<VertexMask, kMaxOrder> rows_{};
  std::array<std::array<int, kMaxOrder>, kMaxOrder> candidates_{};
  std::array<std::size_t, kMaxOrder> candidate_count_{};
  BudgetMeter& meter_;
  const std::function<Visit(const SmallGraph&)>* visit_ = nullptr;
  bool stopped_ = false;
};

}  // namespace degseq::detail
