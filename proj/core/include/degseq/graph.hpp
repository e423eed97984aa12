#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "degseq/sequence.hpp"

namespace degseq {

using VertexMask = std::uint16_t;

struct Edge {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Labeled simple graph on at most 16 vertices; one adjacency word per vertex.
class SmallGraph {
 public:
  static constexpr int kMaxVertices = 16;

  SmallGraph() = default;
  explicit SmallGraph(int order);
  SmallGraph(int order, std::initializer_list<Edge> edges);

  /// Builds a graph from adjacency rows; rows must be symmetric and loop-free.
  static SmallGraph from_rows(int order, std::span<const VertexMask> rows);

  int order() const noexcept { return order_; }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool has_edge(int u, int v) const noexcept { return (rows_[u] >> v) & 1U; }

  VertexMask neighbors(int v) const noexcept { return rows_[v]; }
  int degree(int v) const noexcept;
  int edge_count() const noexcept;

  /// Degrees by vertex label.
  std::vector<int> degrees() const;
  /// Sorted degree multiset.
  DegreeSequence degree_sequence() const;
  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const SmallGraph& a, const SmallGraph& b) {
    return a.order_ == b.order_ && a.rows_ == b.rows_;
  }

 private:
  void check_pair(int u, int v) const;

  int order_ = 0;
  std::array<VertexMask, kMaxVertices> rows_{};
};

SmallGraph complete_graph(int order);
SmallGraph cycle_graph(int order);

SmallGraph complement(const SmallGraph& g);

/// One `u-v` line per edge, u < v, lines in lexicographic (u, v) order.
std::string to_edge_list(const SmallGraph& g);
/// Inverse of to_edge_list; blank lines are skipped.
SmallGraph parse_edge_list(int order, std::string_view text);

/// Injective vertex map pattern -> host (result[i] is the image of pattern
/// vertex i) carrying every pattern edge onto a host edge. Not induced.
std::optional<std::vector<int>> find_embedding(const SmallGraph& host, const SmallGraph& pattern);

bool contains_subgraph(const SmallGraph& host, const SmallGraph& pattern);

/// Degree-refined permutation search; both graphs must have the same order,
/// at most 10.
bool is_isomorphic(const SmallGraph& g, const SmallGraph& h);

}  // namespace degseq
