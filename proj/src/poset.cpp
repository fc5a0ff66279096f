#include "ehs/poset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <string>

#include "ehs/rng.hpp"

namespace ehs {

namespace {

std::vector<Bitset> transpose(const std::vector<Bitset>& rows) {
  const std::size_t n = rows.size();
  std::vector<Bitset> out(n, Bitset(n));
  for (std::size_t x = 0; x < n; ++x) rows[x].for_each([&](int y) { out[static_cast<std::size_t>(y)].set(x); });
  return out;
}

void check_permutation(std::span<const Vertex> order, std::size_t n, const char* what) {
  if (order.size() != n) throw invalid_input(std::string(what) + ": length mismatch");
  std::vector<char> seen(n, 0);
  for (Vertex v : order) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)])
      throw invalid_input(std::string(what) + ": not a permutation");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

}  // namespace

Poset Poset::trusted(std::vector<Bitset> successors) {
  Poset p;
  p.pred_ = transpose(successors);
  p.succ_ = std::move(successors);
  return p;
}

Poset Poset::from_relations(int n, std::span<const Edge> pairs) {
  if (n < 0) throw invalid_input("negative element count");
  const auto un = static_cast<std::size_t>(n);
  std::vector<std::vector<Vertex>> out(un);
  for (const auto& [x, y] : pairs) {
    if (x < 0 || y < 0 || x >= n || y >= n)
      throw invalid_input("relation (" + std::to_string(x) + "," + std::to_string(y) + ") out of range");
    if (x == y) throw cycle_error("relation " + std::to_string(x) + " < " + std::to_string(x) + " is reflexive", {x});
    out[static_cast<std::size_t>(x)].push_back(y);
  }

  // Iterative DFS: colour 0 = new, 1 = on stack, 2 = done. Post-order gives a
  // reverse topological order for the closure pass.
  std::vector<char> colour(un, 0);
  std::vector<Vertex> parent(un, -1);
  std::vector<Vertex> post;
  post.reserve(un);
  for (Vertex root = 0; root < n; ++root) {
    if (colour[static_cast<std::size_t>(root)] != 0) continue;
    std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
    colour[static_cast<std::size_t>(root)] = 1;
    while (!stack.empty()) {
      auto& [x, next] = stack.back();
      const auto& succ = out[static_cast<std::size_t>(x)];
      if (next < succ.size()) {
        const Vertex y = succ[next++];
        if (colour[static_cast<std::size_t>(y)] == 0) {
          colour[static_cast<std::size_t>(y)] = 1;
          parent[static_cast<std::size_t>(y)] = x;
          stack.emplace_back(y, 0);
        } else if (colour[static_cast<std::size_t>(y)] == 1) {
          std::vector<Vertex> cycle{y};
          for (Vertex z = x; z != y; z = parent[static_cast<std::size_t>(z)]) cycle.push_back(z);
          std::reverse(cycle.begin() + 1, cycle.end());
          std::string msg = "relations contain a cycle:";
          for (Vertex z : cycle) msg += " " + std::to_string(z);
          msg += " " + std::to_string(y);
          throw cycle_error(msg, std::move(cycle));
        }
      } else {
        colour[static_cast<std::size_t>(x)] = 2;
        post.push_back(x);
        stack.pop_back();
      }
    }
  }

  std::vector<Bitset> succ(un, Bitset(un));
  for (Vertex x : post) {
    auto& row = succ[static_cast<std::size_t>(x)];
    for (Vertex y : out[static_cast<std::size_t>(x)]) {
      row.set(static_cast<std::size_t>(y));
      row |= succ[static_cast<std::size_t>(y)];
    }
  }
  return trusted(std::move(succ));
}

Poset Poset::from_linear_orders(int n, std::span<const std::vector<Vertex>> orders) {
  if (n < 0) throw invalid_input("negative element count");
  const auto un = static_cast<std::size_t>(n);
  if (orders.empty()) throw invalid_input("need at least one linear order");
  std::vector<std::vector<int>> ranks;
  for (const auto& order : orders) {
    check_permutation(order, un, "linear order");
    std::vector<int> r(un);
    for (std::size_t i = 0; i < un; ++i) r[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    ranks.push_back(std::move(r));
  }
  // Start from the first order's up-set and intersect with the others.
  std::vector<Bitset> succ(un, Bitset(un));
  const auto& first = orders.front();
  Bitset above(un);
  for (std::size_t i = un; i-- > 0;) {
    const auto x = static_cast<std::size_t>(first[i]);
    succ[x] = above;
    above.set(x);
  }
  for (std::size_t o = 1; o < orders.size(); ++o) {
    Bitset up(un);
    for (std::size_t i = un; i-- > 0;) {
      const auto x = static_cast<std::size_t>(orders[o][i]);
      succ[x] &= up;
      up.set(x);
    }
  }
  return trusted(std::move(succ));
}

Poset Poset::from_closure(std::vector<Bitset> successors) {
  const std::size_t n = successors.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (successors[x].size() != n) throw invalid_input("closure row has wrong length");
    if (successors[x].test(x)) throw invalid_input("relation is not irreflexive at " + std::to_string(x));
  }
  for (std::size_t x = 0; x < n; ++x) {
    std::string problem;
    successors[x].for_each([&](int y) {
      if (!problem.empty()) return;
      const auto& row_y = successors[static_cast<std::size_t>(y)];
      if (row_y.test(x))
        problem = "relation is not antisymmetric at (" + std::to_string(x) + "," + std::to_string(y) + ")";
      else if (!row_y.is_subset_of(successors[x]))
        problem = "relation is not transitive through " + std::to_string(y);
    });
    if (!problem.empty()) throw invalid_input(problem);
  }
  return trusted(std::move(successors));
}

std::size_t Poset::relation_count() const noexcept {
  std::size_t total = 0;
  for (const auto& row : succ_) total += row.count();
  return total;
}

std::vector<Edge> Poset::relations() const {
  std::vector<Edge> out;
  out.reserve(relation_count());
  for (Vertex x = 0; x < size(); ++x) succ_[x].for_each([&](int y) { out.emplace_back(x, y); });
  return out;
}

Poset Poset::restrict(std::span<const Vertex> elements) const {
  const std::size_t k = elements.size();
  std::vector<int> local(succ_.size(), -1);
  for (std::size_t i = 0; i < k; ++i) {
    const Vertex v = elements[i];
    if (v < 0 || v >= size() || local[static_cast<std::size_t>(v)] != -1)
      throw invalid_input("restrict: invalid or repeated element");
    local[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  std::vector<Bitset> rows(k, Bitset(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (succ_[elements[i]].test(static_cast<std::size_t>(elements[j]))) rows[i].set(j);
  return trusted(std::move(rows));
}

LinearExtension::LinearExtension(std::vector<Vertex> order) : order_(std::move(order)), rank_(order_.size()) {
  check_permutation(order_, order_.size(), "linear extension");
  for (std::size_t i = 0; i < order_.size(); ++i) rank_[static_cast<std::size_t>(order_[i])] = static_cast<int>(i);
}

LinearExtension linear_extension(const Poset& p) {
  const int n = p.size();
  std::vector<std::size_t> indegree(static_cast<std::size_t>(n));
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex v = 0; v < n; ++v) {
    indegree[static_cast<std::size_t>(v)] = p.predecessors(v).count();
    if (indegree[static_cast<std::size_t>(v)] == 0) ready.push(v);
  }
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  while (!ready.empty()) {
    const Vertex x = ready.top();
    ready.pop();
    order.push_back(x);
    p.successors(x).for_each([&](int y) {
      if (--indegree[static_cast<std::size_t>(y)] == 0) ready.push(y);
    });
  }
  return LinearExtension(std::move(order));
}

bool check_linear_extension(const Poset& p, std::span<const Vertex> order) {
  const auto n = static_cast<std::size_t>(p.size());
  if (order.size() != n) return false;
  std::vector<int> rank(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = order[i];
    if (v < 0 || static_cast<std::size_t>(v) >= n || rank[static_cast<std::size_t>(v)] != -1) return false;
    rank[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  for (Vertex x = 0; x < p.size(); ++x) {
    bool ok = true;
    p.successors(x).for_each([&](int y) { ok = ok && rank[static_cast<std::size_t>(x)] < rank[static_cast<std::size_t>(y)]; });
    if (!ok) return false;
  }
  return true;
}

Graph comparability_graph(const Poset& p) {
  std::vector<Bitset> rows;
  rows.reserve(static_cast<std::size_t>(p.size()));
  for (Vertex v = 0; v < p.size(); ++v) {
    Bitset r = p.successors(v);
    r |= p.predecessors(v);
    rows.push_back(std::move(r));
  }
  return Graph::from_rows(std::move(rows));
}

Graph incomparability_graph(const Poset& p) { return complement(comparability_graph(p)); }

RealizedPoset random_realized_poset(int n, int k, std::uint64_t seed) {
  if (n < 0) throw invalid_input("negative element count");
  if (k < 1) throw invalid_input("poset dimension must be at least 1");
  std::vector<std::vector<Vertex>> orders;
  for (int i = 0; i < k; ++i) {
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    rng.shuffle(std::span<Vertex>(order));
    orders.push_back(std::move(order));
  }
  Poset p = Poset::from_linear_orders(n, orders);
  return {std::move(p), std::move(orders)};
}

Poset random_poset_dimension_k(int n, int k, std::uint64_t seed) { return random_realized_poset(n, k, seed).poset; }

}  // namespace ehs
