#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ehs/bitset.hpp"

namespace ehs {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free set of vertex indices of some host graph.
class VertexSet {
 public:
  VertexSet() = default;

  /// Sorts `vertices`; throws invalid_input on negatives or duplicates.
  static VertexSet from_unsorted(std::vector<Vertex> vertices);
  static VertexSet range(Vertex n);
  static VertexSet from_bitset(const Bitset& bits);

  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  auto begin() const noexcept { return items_.begin(); }
  auto end() const noexcept { return items_.end(); }
  Vertex operator[](std::size_t i) const { return items_[i]; }
  Vertex front() const { return items_.front(); }
  Vertex back() const { return items_.back(); }
  const std::vector<Vertex>& vertices() const noexcept { return items_; }

  bool contains(Vertex v) const noexcept;
  Bitset to_bitset(std::size_t universe) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> items_;
};

bool disjoint(const VertexSet& a, const VertexSet& b) noexcept;
VertexSet set_union(const VertexSet& a, const VertexSet& b);

/// Immutable simple undirected graph on vertices 0..n-1 with one adjacency
/// bitset row per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  /// Throws invalid_input on out-of-range endpoints or self-loops. Duplicate
  /// pairs (in either orientation) collapse to one edge.
  static Graph from_edges(int n, std::span<const Edge> edges);
  /// Takes ownership of adjacency rows; throws invalid_input unless the rows
  /// describe a symmetric irreflexive relation.
  static Graph from_rows(std::vector<Bitset> rows);

  int n() const noexcept { return static_cast<int>(rows_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  bool adjacent(Vertex u, Vertex v) const noexcept { return rows_[u].test(static_cast<std::size_t>(v)); }
  const Bitset& row(Vertex v) const noexcept { return rows_[v]; }
  int degree(Vertex v) const noexcept { return static_cast<int>(rows_[v].count()); }
  int max_degree() const noexcept;
  std::vector<Vertex> neighbors(Vertex v) const { return rows_[v].to_vector(); }
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

 private:
  std::vector<Bitset> rows_;
  std::size_t edge_count_ = 0;
};

/// Spelled-out alias of Graph::from_edges.
inline Graph build_graph(int n, std::span<const Edge> edges) { return Graph::from_edges(n, edges); }

Graph complement(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_host;  // local index -> host index
};

/// Throws invalid_input if `s` is not a subset of V(g).
void check_vertex_set(const Graph& g, const VertexSet& s);

InducedSubgraph induced(const Graph& g, const VertexSet& s);

enum class CrossingStatus { Complete, Empty, Mixed };

/// Requires non-empty disjoint `a`, `b`; throws invalid_input otherwise.
CrossingStatus crossing_status(const Graph& g, const VertexSet& a, const VertexSet& b);

int degree_into(const Graph& g, Vertex v, const VertexSet& s);
int degree_into(const Graph& g, Vertex v, const Bitset& s);

/// True iff `s` induces a complete (resp. edgeless) subgraph.
bool is_clique(const Graph& g, const VertexSet& s);
bool is_independent(const Graph& g, const VertexSet& s);

}  // namespace ehs
