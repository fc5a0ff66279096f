#include "ehs/graph.hpp"

#include <algorithm>
#include <string>

#include "ehs/errors.hpp"

namespace ehs {

VertexSet VertexSet::from_unsorted(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  if (!vertices.empty() && vertices.front() < 0)
    throw invalid_input("vertex set contains negative index " + std::to_string(vertices.front()));
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw invalid_input("vertex set contains duplicate vertices");
  VertexSet s;
  s.items_ = std::move(vertices);
  return s;
}

VertexSet VertexSet::range(Vertex n) {
  VertexSet s;
  s.items_.resize(static_cast<std::size_t>(std::max(n, 0)));
  for (Vertex v = 0; v < n; ++v) s.items_[static_cast<std::size_t>(v)] = v;
  return s;
}

VertexSet VertexSet::from_bitset(const Bitset& bits) {
  VertexSet s;
  s.items_ = bits.to_vector();
  return s;
}

bool VertexSet::contains(Vertex v) const noexcept {
  return std::binary_search(items_.begin(), items_.end(), v);
}

Bitset VertexSet::to_bitset(std::size_t universe) const {
  Bitset b(universe);
  for (Vertex v : items_) b.set(static_cast<std::size_t>(v));
  return b;
}

bool disjoint(const VertexSet& a, const VertexSet& b) noexcept {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j)
      ++i;
    else
      ++j;
  }
  return true;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet::from_unsorted(std::move(out));
}

Graph::Graph(int n) {
  if (n < 0) throw invalid_input("negative vertex count");
  rows_.assign(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw invalid_input("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" +
                          std::to_string(n));
    if (u == v) throw invalid_input("self-loop at vertex " + std::to_string(u));
    if (!g.rows_[u].test(static_cast<std::size_t>(v))) {
      g.rows_[u].set(static_cast<std::size_t>(v));
      g.rows_[v].set(static_cast<std::size_t>(u));
      ++g.edge_count_;
    }
  }
  return g;
}

Graph Graph::from_rows(std::vector<Bitset> rows) {
  const std::size_t n = rows.size();
  std::size_t degree_sum = 0;
  for (std::size_t u = 0; u < n; ++u) {
    if (rows[u].size() != n) throw invalid_input("adjacency row has wrong length");
    if (rows[u].test(u)) throw invalid_input("self-loop at vertex " + std::to_string(u));
    degree_sum += rows[u].count();
  }
  for (std::size_t u = 0; u < n; ++u) {
    bool symmetric = true;
    rows[u].for_each([&](int v) { symmetric = symmetric && rows[static_cast<std::size_t>(v)].test(u); });
    if (!symmetric) throw invalid_input("adjacency rows are not symmetric");
  }
  Graph g;
  g.rows_ = std::move(rows);
  g.edge_count_ = degree_sum / 2;
  return g;
}

int Graph::max_degree() const noexcept {
  int best = 0;
  for (Vertex v = 0; v < n(); ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n(); ++u)
    rows_[u].for_each([&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

Graph complement(const Graph& g) {
  std::vector<Bitset> rows;
  rows.reserve(static_cast<std::size_t>(g.n()));
  for (Vertex v = 0; v < g.n(); ++v) {
    Bitset r = g.row(v);
    r.flip();
    r.reset(static_cast<std::size_t>(v));
    rows.push_back(std::move(r));
  }
  return Graph::from_rows(std::move(rows));
}

void check_vertex_set(const Graph& g, const VertexSet& s) {
  if (!s.empty() && s.back() >= g.n())
    throw invalid_input("vertex " + std::to_string(s.back()) + " outside graph of order " + std::to_string(g.n()));
}

InducedSubgraph induced(const Graph& g, const VertexSet& s) {
  check_vertex_set(g, s);
  const std::size_t k = s.size();
  std::vector<Bitset> rows(k, Bitset(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (g.adjacent(s[i], s[j])) {
        rows[i].set(j);
        rows[j].set(i);
      }
  return {Graph::from_rows(std::move(rows)), s.vertices()};
}

CrossingStatus crossing_status(const Graph& g, const VertexSet& a, const VertexSet& b) {
  check_vertex_set(g, a);
  check_vertex_set(g, b);
  if (a.empty() || b.empty()) throw invalid_input("crossing_status needs non-empty sets");
  if (!disjoint(a, b)) throw invalid_input("crossing_status needs disjoint sets");
  const Bitset mask = b.to_bitset(static_cast<std::size_t>(g.n()));
  std::size_t hits = 0;
  for (Vertex v : a) hits += intersection_count(g.row(v), mask);
  if (hits == 0) return CrossingStatus::Empty;
  if (hits == a.size() * b.size()) return CrossingStatus::Complete;
  return CrossingStatus::Mixed;
}

int degree_into(const Graph& g, Vertex v, const VertexSet& s) {
  int d = 0;
  for (Vertex w : s) d += g.adjacent(v, w) ? 1 : 0;
  return d;
}

int degree_into(const Graph& g, Vertex v, const Bitset& s) {
  return static_cast<int>(intersection_count(g.row(v), s));
}

bool is_clique(const Graph& g, const VertexSet& s) {
  check_vertex_set(g, s);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.adjacent(s[i], s[j])) return false;
  return true;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  check_vertex_set(g, s);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) return false;
  return true;
}

}  // namespace ehs
