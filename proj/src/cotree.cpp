#include <algorithm>
#include <string>

#include "ehs/cograph.hpp"
#include "ehs/errors.hpp"

namespace ehs {

const char* to_string(CotreeKind kind) noexcept {
  switch (kind) {
    case CotreeKind::Leaf: return "leaf";
    case CotreeKind::Join: return "join";
    case CotreeKind::Union: return "union";
  }
  return "unknown";
}

Cotree::Cotree(VertexSet vertices) { nodes_.push_back({CotreeKind::Leaf, std::move(vertices), {}}); }

std::vector<int> Cotree::refine(int node, CotreeKind kind, const std::vector<VertexSet>& parts) {
  if (kind == CotreeKind::Leaf) throw invalid_input("refine needs an internal kind");
  if (nodes_.at(static_cast<std::size_t>(node)).kind != CotreeKind::Leaf) throw invalid_input("refine needs a leaf");
  std::vector<int> ids;
  for (const auto& part : parts) {
    ids.push_back(static_cast<int>(nodes_.size()));
    nodes_.push_back({CotreeKind::Leaf, part, {}});
  }
  auto& target = nodes_[static_cast<std::size_t>(node)];
  target.kind = kind;
  target.vertices = VertexSet{};
  target.children = ids;
  return ids;
}

int Cotree::add_leaf(VertexSet vertices) {
  nodes_.push_back({CotreeKind::Leaf, std::move(vertices), {}});
  return static_cast<int>(nodes_.size()) - 1;
}

int Cotree::add_internal(CotreeKind kind, std::vector<int> children) {
  if (kind == CotreeKind::Leaf) throw invalid_input("add_internal needs an internal kind");
  nodes_.push_back({kind, VertexSet{}, std::move(children)});
  root_ = static_cast<int>(nodes_.size()) - 1;
  return root_;
}

std::vector<int> Cotree::leaves() const {
  std::vector<int> out;
  std::vector<int> stack{root_};
  while (!stack.empty()) {
    const int id = stack.back();
    stack.pop_back();
    const auto& nd = nodes_[static_cast<std::size_t>(id)];
    if (nd.kind == CotreeKind::Leaf) {
      out.push_back(id);
    } else {
      for (auto it = nd.children.rbegin(); it != nd.children.rend(); ++it) stack.push_back(*it);
    }
  }
  return out;
}

bool Cotree::singleton_leaves() const {
  for (int id : leaves())
    if (node(id).vertices.size() != 1) return false;
  return true;
}

VertexSet Cotree::vertices() const {
  std::vector<Vertex> all;
  for (int id : leaves()) all.insert(all.end(), node(id).vertices.begin(), node(id).vertices.end());
  return VertexSet::from_unsorted(std::move(all));
}

namespace {

// Post-order (children before parents) over the reachable nodes.
std::vector<int> post_order(const Cotree& tree) {
  std::vector<int> order;
  std::vector<std::pair<int, bool>> stack{{tree.root(), false}};
  while (!stack.empty()) {
    auto [id, expanded] = stack.back();
    stack.pop_back();
    if (expanded) {
      order.push_back(id);
      continue;
    }
    stack.emplace_back(id, true);
    const auto& children = tree.node(id).children;
    for (auto it = children.rbegin(); it != children.rend(); ++it) stack.emplace_back(*it, false);
  }
  return order;
}

// Join nodes sum cliques and take the best independent set; Union nodes dually.
VertexSet best_set(const Cotree& tree, bool clique) {
  if (!tree.singleton_leaves()) throw invalid_input("cotree DP needs singleton leaves");
  std::vector<std::vector<Vertex>> best(tree.node_count());
  for (int id : post_order(tree)) {
    const auto& nd = tree.node(id);
    auto& out = best[static_cast<std::size_t>(id)];
    if (nd.kind == CotreeKind::Leaf) {
      out = nd.vertices.vertices();
      continue;
    }
    const bool sums = (nd.kind == CotreeKind::Join) == clique;
    if (sums) {
      for (int child : nd.children) {
        const auto& part = best[static_cast<std::size_t>(child)];
        out.insert(out.end(), part.begin(), part.end());
      }
    } else {
      int pick = -1;
      for (int child : nd.children)
        if (pick < 0 || best[static_cast<std::size_t>(child)].size() > best[static_cast<std::size_t>(pick)].size())
          pick = child;
      if (pick >= 0) out = best[static_cast<std::size_t>(pick)];
    }
  }
  return VertexSet::from_unsorted(best[static_cast<std::size_t>(tree.root())]);
}

}  // namespace

VertexSet cotree_max_clique(const Cotree& tree) { return best_set(tree, true); }
VertexSet cotree_max_independent(const Cotree& tree) { return best_set(tree, false); }

Graph realize(const Cotree& tree, int n) {
  std::vector<Bitset> rows(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
  std::vector<VertexSet> below(tree.node_count());
  for (int id : post_order(tree)) {
    const auto& nd = tree.node(id);
    if (nd.kind == CotreeKind::Leaf) {
      below[static_cast<std::size_t>(id)] = nd.vertices;
      if (nd.vertices.size() > 1) throw invalid_input("realize needs singleton leaves");
      continue;
    }
    if (nd.kind == CotreeKind::Join)
      for (std::size_t x = 0; x < nd.children.size(); ++x)
        for (std::size_t y = x + 1; y < nd.children.size(); ++y)
          for (Vertex u : below[static_cast<std::size_t>(nd.children[x])])
            for (Vertex v : below[static_cast<std::size_t>(nd.children[y])]) {
              rows[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
              rows[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
            }
    VertexSet all;
    for (int child : nd.children) all = set_union(all, below[static_cast<std::size_t>(child)]);
    below[static_cast<std::size_t>(id)] = std::move(all);
  }
  return Graph::from_rows(std::move(rows));
}

Cotree random_cotree(int n, Rng& rng) {
  if (n < 1) throw invalid_input("random_cotree needs n >= 1");
  // Build bottom-up: repeatedly merge 2..4 random subtrees under a node whose
  // label differs from its children's where possible.
  Cotree tree(VertexSet::from_unsorted({0}));
  std::vector<std::pair<int, CotreeKind>> pool{{0, CotreeKind::Leaf}};
  for (Vertex v = 1; v < n; ++v) pool.emplace_back(tree.add_leaf(VertexSet::from_unsorted({v})), CotreeKind::Leaf);
  if (n == 1) return tree;
  while (pool.size() > 1) {
    const std::size_t arity = std::min<std::size_t>(pool.size(), 2 + rng.below(3));
    std::vector<int> children;
    bool has_join = false;
    bool has_union = false;
    for (std::size_t i = 0; i < arity; ++i) {
      const std::size_t pick = rng.below(pool.size());
      children.push_back(pool[pick].first);
      has_join = has_join || pool[pick].second == CotreeKind::Join;
      has_union = has_union || pool[pick].second == CotreeKind::Union;
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    CotreeKind kind = rng.below(2) == 0 ? CotreeKind::Join : CotreeKind::Union;
    if (has_join && !has_union) kind = CotreeKind::Union;
    if (has_union && !has_join) kind = CotreeKind::Join;
    pool.emplace_back(tree.add_internal(kind, std::move(children)), kind);
  }
  return tree;
}

}  // namespace ehs
