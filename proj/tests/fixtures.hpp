#pragma once

#include <algorithm>
#include <vector>

#include "ehs/poset.hpp"
#include "ehs/rng.hpp"

namespace fixture {

using namespace ehs;

// Height-two poset: elements 0..n-1 form A, n..2n-1 form B, and a < n + b for
// every b listed in b_neighbours[...] of a. The identity order is a linear
// extension with A below B.
struct Bipartite {
  Poset poset;
  VertexSet a;
  VertexSet b;
  LinearExtension le;
};

inline Bipartite bipartite(int n, const std::vector<std::vector<int>>& a_to_b) {
  std::vector<Edge> pairs;
  for (int x = 0; x < n; ++x)
    for (int y : a_to_b[static_cast<std::size_t>(x)]) pairs.emplace_back(x, n + y);
  std::vector<Vertex> order(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < 2 * n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::vector<Vertex> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    a[static_cast<std::size_t>(i)] = i;
    b[static_cast<std::size_t>(i)] = n + i;
  }
  return {Poset::from_relations(2 * n, pairs), VertexSet::from_unsorted(a), VertexSet::from_unsorted(b),
          LinearExtension(order)};
}

// Each B vertex gets a random degree in [1, max_deg]; A degrees stay <= cap.
inline Bipartite random_bipartite(int n, int max_deg, int cap, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::vector<int>> a_to_b(static_cast<std::size_t>(n));
  for (int y = 0; y < n; ++y) {
    const int d = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_deg)));
    for (int tries = 0, placed = 0; placed < d && tries < 50 * d; ++tries) {
      const auto x = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(n)));
      auto& row = a_to_b[x];
      if (static_cast<int>(row.size()) >= cap || std::find(row.begin(), row.end(), y) != row.end()) continue;
      row.push_back(y);
      ++placed;
    }
  }
  return bipartite(n, a_to_b);
}

}  // namespace fixture
