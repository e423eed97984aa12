#include "degseq/graphic.hpp"

#include <algorithm>

#include "degseq/error.hpp"

namespace degseq {

namespace {

std::optional<GraphicViolation> first_violation(std::span<const int> d) {
  long total = 0;
  for (int t : d) total += t;
  if (total % 2 != 0) return GraphicViolation{true, 0};

  const std::size_t n = d.size();
  long prefix = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    prefix += d[k - 1];
    long rhs = static_cast<long>(k) * static_cast<long>(k - 1);
    for (std::size_t i = k; i < n; ++i) rhs += std::min<long>(d[i], static_cast<long>(k));
    if (prefix > rhs) return GraphicViolation{false, k};
  }
  return std::nullopt;
}

}  // namespace

bool is_graphic_eg(std::span<const int> non_increasing) {
  return !first_violation(non_increasing).has_value();
}

bool is_graphic_eg(const DegreeSequence& seq) { return is_graphic_eg(seq.terms()); }

std::optional<GraphicViolation> erdos_gallai_violation(const DegreeSequence& seq) {
  return first_violation(seq.terms());
}

bool is_graphic_kw(const DegreeSequence& seq) {
  if (seq.sigma() % 2 != 0) return false;
  DegreeSequence current = seq;
  while (true) {
    std::size_t n = current.size();
    while (n > 0 && current[n - 1] == 0) --n;
    if (n == 0) return true;
    if (n < current.size()) {
      current = DegreeSequence(std::vector<int>(current.terms().begin(), current.terms().begin() + n));
    }
    try {
      current = lay_off(current, LayOffIndex(current, n));
    } catch (const PreconditionError&) {
      return false;
    }
  }
}

std::optional<bool> graphic_fast_path(const DegreeSequence& seq) {
  const bool even = seq.sigma() % 2 == 0;
  if (!seq.empty() && seq[0] > 0 && even) {
    const Extremes e = m_h(seq);
    if (e.largest <= 2 && e.smallest == 1) return true;
  }
  if (even && seq.all_positive() && seq.size() >= 4 && seq[0] <= 3) {
    if (seq != DegreeSequence{3, 3, 3, 1} && seq != DegreeSequence{3, 3, 1, 1}) return true;
  }
  return std::nullopt;
}

SmallGraph havel_hakimi_realize(const DegreeSequence& seq) {
  const int n = static_cast<int>(seq.size());
  if (n > SmallGraph::kMaxVertices) {
    throw PreconditionError(PreconditionError::Kind::too_large,
                            "realizations are limited to 16 vertices");
  }
  if (!is_graphic_eg(seq)) {
    throw PreconditionError(PreconditionError::Kind::not_graphic,
                            "sequence " + seq.to_string() + " is not graphic");
  }
  SmallGraph g(n);
  std::vector<int> residual(seq.terms().begin(), seq.terms().end());
  std::vector<int> order(static_cast<std::size_t>(n));
  while (true) {
    int hub = 0;
    for (int v = 1; v < n; ++v) {
      if (residual[v] > residual[hub]) hub = v;
    }
    if (n == 0 || residual[hub] == 0) break;

    order.clear();
    for (int v = 0; v < n; ++v) {
      if (v != hub && residual[v] > 0) order.push_back(v);
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return residual[a] > residual[b]; });
    const auto need = static_cast<std::size_t>(residual[hub]);
    if (order.size() < need) {
      throw PreconditionError(PreconditionError::Kind::not_graphic, "construction stalled");
    }
    for (std::size_t i = 0; i < need; ++i) {
      g.add_edge(hub, order[i]);
      --residual[order[i]];
    }
    residual[hub] = 0;
  }
  return g;
}

}  // namespace degseq
