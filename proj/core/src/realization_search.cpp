#include "realization_search.hpp"

#include <algorithm>
#include <bit>

#include "degseq/error.hpp"
#include "degseq/graphic.hpp"

namespace degseq::detail {

BudgetMeter::BudgetMeter(const SearchBudget& budget) : max_nodes_(budget.max_nodes) {
  if (budget.time_limit) deadline_ = std::chrono::steady_clock::now() + *budget.time_limit;
}

bool BudgetMeter::charge() {
  if (exhausted_) return false;
  ++nodes_;
  if (nodes_ > max_nodes_) {
    exhausted_ = true;
    return false;
  }
  if (deadline_ && (nodes_ & 0xFFFU) == 0 && std::chrono::steady_clock::now() > *deadline_) {
    exhausted_ = true;
    return false;
  }
  return true;
}

namespace {

VertexMask vertices_after(int v, int n) {
  const unsigned all = (1U << n) - 1U;
  const unsigned upto = v < 0 ? 0U : (2U << v) - 1U;
  return static_cast<VertexMask>(all & ~upto);
}

}  // namespace

RealizationSearch::RealizationSearch(std::span<const int> degrees,
                                     std::span<const VertexMask> required, BudgetMeter& meter)
    : n_(static_cast<int>(degrees.size())), meter_(meter) {
  if (n_ > kMaxOrder) {
    throw PreconditionError(PreconditionError::Kind::too_large,
                            "realization search limited to 12 vertices");
  }
  for (int v = 0; v < n_; ++v) {
    residual_[v] = degrees[v];
    if (!required.empty()) required_[v] = required[v];
  }
}

SearchStatus RealizationSearch::run(const std::function<Visit(const SmallGraph&)>& visit) {
  visit_ = &visit;
  stopped_ = false;
  bool ok = true;
  for (int v = 0; v < n_ && ok; ++v) {
    if (residual_[v] < 0 || std::popcount(required_[v]) > residual_[v]) ok = false;
  }
  if (ok) ok = feasible_after(-1);
  if (ok) search_row(0);
  if (stopped_) return SearchStatus::stopped;
  if (meter_.exhausted()) return SearchStatus::budget_exhausted;
  return SearchStatus::completed;
}

bool RealizationSearch::search_row(int v) {
  if (v == n_) {
    const SmallGraph g = SmallGraph::from_rows(n_, std::span<const VertexMask>(rows_.data(), n_));
    if ((*visit_)(g) == Visit::stop) {
      stopped_ = true;
      return false;
    }
    return true;
  }
  if (!meter_.charge()) return false;

  const VertexMask later = vertices_after(v, n_);
  const auto forced = static_cast<VertexMask>(required_[v] & later);
  const int need = residual_[v];
  const int forced_count = std::popcount(forced);
  if (forced_count > need) return true;
  for (int u = v + 1; u < n_; ++u) {
    if (((forced >> u) & 1U) && residual_[u] == 0) return true;
  }

  std::size_t count = 0;
  for (int u = v + 1; u < n_; ++u) {
    if (!((forced >> u) & 1U) && residual_[u] > 0) candidates_[v][count++] = u;
  }
  candidate_count_[v] = count;
  const int extra = need - forced_count;
  if (static_cast<std::size_t>(extra) > count) return true;

  for (int u = v + 1; u < n_; ++u) {
    if ((forced >> u) & 1U) {
      rows_[v] = static_cast<VertexMask>(rows_[v] | (1U << u));
      rows_[u] = static_cast<VertexMask>(rows_[u] | (1U << v));
      --residual_[u];
    }
  }
  residual_[v] = extra;
  const bool keep_going = choose(v, 0, extra);
  residual_[v] = need;
  for (int u = v + 1; u < n_; ++u) {
    if ((forced >> u) & 1U) {
      rows_[v] = static_cast<VertexMask>(rows_[v] & ~(1U << u));
      rows_[u] = static_cast<VertexMask>(rows_[u] & ~(1U << v));
      ++residual_[u];
    }
  }
  return keep_going;
}

bool RealizationSearch::choose(int v, std::size_t from, int remaining) {
  if (remaining == 0) {
    if (!feasible_after(v)) return true;
    return search_row(v + 1);
  }
  const std::size_t count = candidate_count_[v];
  for (std::size_t idx = from; idx + static_cast<std::size_t>(remaining) <= count; ++idx) {
    const int u = candidates_[v][idx];
    rows_[v] = static_cast<VertexMask>(rows_[v] | (1U << u));
    rows_[u] = static_cast<VertexMask>(rows_[u] | (1U << v));
    --residual_[u];
    --residual_[v];
    const bool keep_going = choose(v, idx + 1, remaining - 1);
    ++residual_[v];
    ++residual_[u];
    rows_[v] = static_cast<VertexMask>(rows_[v] & ~(1U << u));
    rows_[u] = static_cast<VertexMask>(rows_[u] & ~(1U << v));
    if (!keep_going) return false;
  }
  return true;
}

// Necessary conditions on the demand left for vertices after v: each one
// must fit among the other open vertices, cover its still-unplaced required
// edges, and the residual multiset must pass Erdős–Gallai.
bool RealizationSearch::feasible_after(int v) const {
  const VertexMask open_set = vertices_after(v, n_);
  VertexMask active = 0;
  for (int w = v + 1; w < n_; ++w) {
    if (residual_[w] > 0) active = static_cast<VertexMask>(active | (1U << w));
  }
  std::array<int, kMaxOrder> demand{};
  std::size_t m = 0;
  for (int w = v + 1; w < n_; ++w) {
    const int r = residual_[w];
    const int partners = std::popcount(static_cast<VertexMask>(active & ~(1U << w)));
    if (r > partners) return false;
    if (std::popcount(static_cast<VertexMask>(required_[w] & open_set)) > r) return false;
    demand[m++] = r;
  }
  std::sort(demand.begin(), demand.begin() + static_cast<std::ptrdiff_t>(m), std::greater<>());
  return is_graphic_eg(std::span<const int>(demand.data(), m));
}

}  // namespace degseq::detail
