#include "degseq/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>

#include "degseq/error.hpp"

namespace degseq {

SmallGraph::SmallGraph(int order) : order_(order) {
  if (order < 0 || order > kMaxVertices) {
    throw PreconditionError(PreconditionError::Kind::too_large,
                            "graph order must be in [0, 16], got " + std::to_string(order));
  }
}

SmallGraph::SmallGraph(int order, std::initializer_list<Edge> edges) : SmallGraph(order) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

SmallGraph SmallGraph::from_rows(int order, std::span<const VertexMask> rows) {
  SmallGraph g(order);
  if (rows.size() < static_cast<std::size_t>(order)) {
    throw PreconditionError(PreconditionError::Kind::out_of_range, "too few adjacency rows");
  }
  const auto valid = static_cast<VertexMask>((1U << order) - 1U);
  for (int v = 0; v < order; ++v) {
    const VertexMask row = rows[v];
    if ((row & ~valid) != 0 || ((row >> v) & 1U)) {
      throw PreconditionError(PreconditionError::Kind::out_of_range, "invalid adjacency row");
    }
    for (int u = 0; u < order; ++u) {
      if (((row >> u) & 1U) != ((rows[u] >> v) & 1U)) {
        throw PreconditionError(PreconditionError::Kind::out_of_range, "asymmetric adjacency");
      }
    }
    g.rows_[v] = row;
  }
  return g;
}

void SmallGraph::check_pair(int u, int v) const {
  if (u < 0 || v < 0 || u >= order_ || v >= order_) {
    throw PreconditionError(PreconditionError::Kind::out_of_range, "vertex out of range");
  }
  if (u == v) throw PreconditionError(PreconditionError::Kind::out_of_range, "self-loop");
}

void SmallGraph::add_edge(int u, int v) {
  check_pair(u, v);
  rows_[u] = static_cast<VertexMask>(rows_[u] | (1U << v));
  rows_[v] = static_cast<VertexMask>(rows_[v] | (1U << u));
}

void SmallGraph::remove_edge(int u, int v) {
  check_pair(u, v);
  rows_[u] = static_cast<VertexMask>(rows_[u] & ~(1U << v));
  rows_[v] = static_cast<VertexMask>(rows_[v] & ~(1U << u));
}

int SmallGraph::degree(int v) const noexcept { return std::popcount(rows_[v]); }

int SmallGraph::edge_count() const noexcept {
  int twice = 0;
  for (int v = 0; v < order_; ++v) twice += degree(v);
  return twice / 2;
}

std::vector<int> SmallGraph::degrees() const {
  std::vector<int> out(static_cast<std::size_t>(order_));
  for (int v = 0; v < order_; ++v) out[v] = degree(v);
  return out;
}

DegreeSequence SmallGraph::degree_sequence() const { return DegreeSequence(degrees()); }

std::vector<Edge> SmallGraph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order_; ++u) {
    for (int v = u + 1; v < order_; ++v) {
      if (has_edge(u, v)) out.push_back({u, v});
    }
  }
  return out;
}

SmallGraph complete_graph(int order) {
  SmallGraph g(order);
  for (int u = 0; u < order; ++u) {
    for (int v = u + 1; v < order; ++v) g.add_edge(u, v);
  }
  return g;
}

SmallGraph cycle_graph(int order) {
  SmallGraph g(order);
  if (order < 3) {
    throw PreconditionError(PreconditionError::Kind::too_short, "cycles need 3 vertices");
  }
  for (int v = 0; v < order; ++v) g.add_edge(v, (v + 1) % order);
  return g;
}

SmallGraph complement(const SmallGraph& g) {
  SmallGraph out(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!g.has_edge(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

std::string to_edge_list(const SmallGraph& g) {
  std::string out;
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += '-';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

SmallGraph parse_edge_list(int order, std::string_view text) {
  SmallGraph g(order);
  std::size_t line_start = 0;
  while (line_start < text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (!line.empty()) {
      const std::size_t dash = line.find('-');
      int u = -1;
      int v = -1;
      const bool ok =
          dash != std::string_view::npos &&
          std::from_chars(line.data(), line.data() + dash, u).ec == std::errc{} &&
          std::from_chars(line.data() + dash + 1, line.data() + line.size(), v).ec == std::errc{};
      if (!ok) throw ParseError("malformed edge line", line_start);
      g.add_edge(u, v);
    }
    line_start = line_end + 1;
  }
  return g;
}

namespace {

class EmbeddingSearch {
 public:
  EmbeddingSearch(const SmallGraph& host, const SmallGraph& pattern)
      : host_(host), pattern_(pattern) {
    order_.resize(static_cast<std::size_t>(pattern.order()));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });
    image_.assign(order_.size(), -1);
  }

  bool run() { return extend(0, 0); }
  std::vector<int> image() const { return image_; }

 private:
  bool extend(std::size_t depth, VertexMask used) {
    if (depth == order_.size()) return true;
    const int pv = order_[depth];
    const int need = pattern_.degree(pv);
    for (int hv = 0; hv < host_.order(); ++hv) {
      if ((used >> hv) & 1U) continue;
      if (host_.degree(hv) < need) continue;
      bool fits = true;
      for (std::size_t earlier = 0; earlier < depth && fits; ++earlier) {
        const int pu = order_[earlier];
        if (pattern_.has_edge(pv, pu) && !host_.has_edge(hv, image_[pu])) fits = false;
      }
      if (!fits) continue;
      image_[pv] = hv;
      if (extend(depth + 1, static_cast<VertexMask>(used | (1U << hv)))) return true;
      image_[pv] = -1;
    }
    return false;
  }

  const SmallGraph& host_;
  const SmallGraph& pattern_;
  std::vector<int> order_;
  std::vector<int> image_;
};

}  // namespace

std::optional<std::vector<int>> find_embedding(const SmallGraph& host, const SmallGraph& pattern) {
  if (pattern.order() > host.order()) return std::nullopt;
  if (pattern.edge_count() > host.edge_count()) return std::nullopt;
  EmbeddingSearch search(host, pattern);
  if (!search.run()) return std::nullopt;
  return search.image();
}

bool contains_subgraph(const SmallGraph& host, const SmallGraph& pattern) {
  return find_embedding(host, pattern).has_value();
}

namespace {

bool extend_isomorphism(const SmallGraph& g, const SmallGraph& h, std::vector<int>& map,
                        VertexMask used, int v) {
  const int n = g.order();
  if (v == n) return true;
  for (int w = 0; w < n; ++w) {
    if ((used >> w) & 1U) continue;
    if (g.degree(v) != h.degree(w)) continue;
    bool fits = true;
    for (int u = 0; u < v && fits; ++u) {
      if (g.has_edge(u, v) != h.has_edge(map[u], w)) fits = false;
    }
    if (!fits) continue;
    map[v] = w;
    if (extend_isomorphism(g, h, map, static_cast<VertexMask>(used | (1U << w)), v + 1)) return true;
  }
  return false;
}

}  // namespace

bool is_isomorphic(const SmallGraph& g, const SmallGraph& h) {
  if (g.order() != h.order()) {
    throw PreconditionError(PreconditionError::Kind::out_of_range,
                            "isomorphism test needs graphs of equal order");
  }
  if (g.order() > 10) {
    throw PreconditionError(PreconditionError::Kind::too_large,
                            "isomorphism test limited to 10 vertices");
  }
  if (g.degree_sequence() != h.degree_sequence()) return false;
  std::vector<int> map(static_cast<std::size_t>(g.order()), -1);
  return extend_isomorphism(g, h, map, 0, 0);
}

}  // namespace degseq
