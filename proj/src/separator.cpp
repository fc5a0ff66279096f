#include "ehs/separator.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>

#include "ehs/errors.hpp"

namespace ehs {

const char* to_string(SeparatorStrategy strategy) noexcept {
  return strategy == SeparatorStrategy::Exact ? "exact" : "greedy";
}

std::size_t SeparatorResult::largest_component() const noexcept {
  std::size_t best = 0;
  for (const auto& c : components) best = std::max(best, c.size());
  return best;
}

bool is_balanced(int n, const std::vector<VertexSet>& components) {
  return std::all_of(components.begin(), components.end(),
                     [n](const VertexSet& c) { return 3 * static_cast<long long>(c.size()) <= 2LL * n; });
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& removed) {
  Bitset unseen = Bitset::full(static_cast<std::size_t>(g.n()));
  for (Vertex v : removed) unseen.reset(static_cast<std::size_t>(v));
  std::vector<VertexSet> out;
  for (Vertex start = 0; start < g.n(); ++start) {
    if (!unseen.test(static_cast<std::size_t>(start))) continue;
    Bitset reached(static_cast<std::size_t>(g.n()));
    Bitset frontier(static_cast<std::size_t>(g.n()));
    frontier.set(static_cast<std::size_t>(start));
    unseen.reset(static_cast<std::size_t>(start));
    while (frontier.any()) {
      reached |= frontier;
      Bitset next(static_cast<std::size_t>(g.n()));
      frontier.for_each([&](std::size_t v) { next |= g.row(static_cast<Vertex>(v)); });
      next &= unseen;
      unseen.subtract(next);
      frontier = std::move(next);
    }
    out.push_back(VertexSet::from_bitset(reached));
  }
  return out;
}

namespace {

using Mask = std::uint32_t;

// Subset of `sizes` whose sum is closest to half the total from below:
// returns (that sum, membership flags). Exact subset-sum over the totals.
std::pair<int, std::vector<bool>> most_even_side(const std::vector<int>& sizes) {
  const int total = std::accumulate(sizes.begin(), sizes.end(), 0);
  // reach[i][s]: some subset of the first i sizes sums to s.
  std::vector<std::vector<char>> reach(sizes.size() + 1, std::vector<char>(static_cast<std::size_t>(total) + 1, 0));
  reach[0][0] = 1;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    for (int sum = 0; sum <= total; ++sum) {
      if (!reach[i][static_cast<std::size_t>(sum)]) continue;
      reach[i + 1][static_cast<std::size_t>(sum)] = 1;
      reach[i + 1][static_cast<std::size_t>(sum + sizes[i])] = 1;
    }
  int best = total / 2;
  while (!reach[sizes.size()][static_cast<std::size_t>(best)]) --best;
  std::vector<bool> take(sizes.size(), false);
  for (std::size_t i = sizes.size(), sum = static_cast<std::size_t>(best); i > 0; --i)
    if (!reach[i - 1][sum]) {
      take[i - 1] = true;
      sum -= static_cast<std::size_t>(sizes[i - 1]);
    }
  return {best, take};
}

// Component sizes of the vertices in `alive`, in order of smallest member.
std::vector<int> component_sizes(const std::vector<Mask>& adj, Mask alive) {
  std::vector<int> sizes;
  while (alive) {
    Mask comp = alive & (~alive + 1);
    Mask frontier = comp;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
      next &= alive & ~comp;
      comp |= next;
      frontier = next;
    }
    sizes.push_back(std::popcount(comp));
    alive &= ~comp;
  }
  return sizes;
}

VertexSet mask_to_set(Mask m) {
  std::vector<Vertex> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return VertexSet::from_unsorted(std::move(out));
}

VertexSet exact_separator(const Graph& g) {
  const int n = g.n();
  if (n > kExactSeparatorLimit)
    throw precondition_violation("exact separator limited to n <= " + std::to_string(kExactSeparatorLimit));
  std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : g.neighbors(v)) adj[static_cast<std::size_t>(v)] |= Mask{1} << u;
  const Mask all = n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1);
  for (int k = 0; k <= n; ++k) {
    // Among minimum separators prefer one whose components split evenly
    // enough, then the smallest largest component, then enumeration order.
    bool found = false;
    Mask best = 0;
    bool best_splits = false;
    int best_largest = n + 1;
    // Gosper's hack enumerates k-subsets in increasing numeric order.
    for (Mask s = k == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << k) - 1); s <= all;) {
      const auto sizes = component_sizes(adj, all & ~s);
      const int largest = sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
      if (3 * largest <= 2 * n) {
        const int rest = n - k;
        const bool splits = rest >= 2 && 3 * most_even_side(sizes).first >= rest;
        if (!found || (splits && !best_splits) || (splits == best_splits && largest < best_largest)) {
          found = true;
          best = s;
          best_splits = splits;
          best_largest = largest;
        }
      }
      if (k == 0) break;
      const Mask low = s & (~s + 1);
      const std::uint64_t ripple = std::uint64_t{s} + low;
      if (ripple > all) break;
      s = static_cast<Mask>(ripple | (((s ^ ripple) >> 2) / low));
    }
    if (found) return mask_to_set(best);
  }
  throw invariant_violation("no balanced separator found by enumeration");
}

VertexSet greedy_separator(const Graph& g) {
  const int n = g.n();
  const int budget = (n + 2) / 3;
  std::vector<Vertex> removed;
  for (;;) {
    const auto removed_set = VertexSet::from_unsorted(removed);
    const auto comps = connected_components(g, removed_set);
    if (is_balanced(n, comps)) return removed_set;
    if (static_cast<int>(removed.size()) >= budget)
      throw separator_failure("greedy separator exceeded its budget of " + std::to_string(budget) + " vertices");
    const auto largest = std::max_element(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
      return a.size() < b.size();
    });
    const Bitset mask = largest->to_bitset(static_cast<std::size_t>(n));
    Vertex pick = -1;
    std::size_t pick_degree = 0;
    for (Vertex v : *largest) {
      const auto d = intersection_count(g.row(v), mask);
      if (pick < 0 || d > pick_degree) {
        pick = v;
        pick_degree = d;
      }
    }
    removed.push_back(pick);
  }
}

}  // namespace

SeparatorResult find_balanced_separator(const Graph& g, SeparatorStrategy strategy) {
  SeparatorResult out;
  out.separator = strategy == SeparatorStrategy::Exact ? exact_separator(g) : greedy_separator(g);
  out.components = connected_components(g, out.separator);
  check_separator(g, out);
  return out;
}

void check_separator(const Graph& g, const SeparatorResult& sep) {
  const auto n = static_cast<std::size_t>(g.n());
  check_vertex_set(g, sep.separator);
  Bitset seen = sep.separator.to_bitset(n);
  for (const auto& comp : sep.components) {
    check_vertex_set(g, comp);
    if (comp.empty()) throw invariant_violation("empty separator component");
    for (Vertex v : comp) {
      if (seen.test(static_cast<std::size_t>(v)))
        throw invariant_violation("vertex " + std::to_string(v) + " appears twice in the separator result");
      seen.set(static_cast<std::size_t>(v));
    }
    if (connected_components(g, VertexSet::from_bitset([&] {
          Bitset outside = Bitset::full(n);
          outside.subtract(comp.to_bitset(n));
          return outside;
        }())).size() != 1)
      throw invariant_violation("separator component is not connected");
  }
  if (seen.count() != n) throw invariant_violation("separator components do not cover V - S");
  for (std::size_t i = 0; i < sep.components.size(); ++i)
    for (std::size_t j = i + 1; j < sep.components.size(); ++j)
      if (crossing_status(g, sep.components[i], sep.components[j]) != CrossingStatus::Empty)
        throw invariant_violation("separator components are adjacent");
  if (!is_balanced(g.n(), sep.components)) throw invariant_violation("separator component exceeds 2n/3");
}

AnticompleteSplit split_from_separator(const Graph& g, const SeparatorResult& sep) {
  const std::size_t rest = static_cast<std::size_t>(g.n()) - sep.separator.size();
  if (rest < 2) throw separator_failure("fewer than two vertices outside the separator");

  std::vector<int> sizes;
  for (const auto& c : sep.components) sizes.push_back(static_cast<int>(c.size()));
  const auto take = most_even_side(sizes).second;
  std::vector<Vertex> side[2];
  for (std::size_t i = 0; i < sep.components.size(); ++i) {
    auto& target = side[take[i] ? 1 : 0];
    target.insert(target.end(), sep.components[i].begin(), sep.components[i].end());
  }
  const std::size_t m = std::min(side[0].size(), side[1].size());
  if (m == 0 || 3 * m < rest)
    throw separator_failure("unbalanced split: smaller side " + std::to_string(m) + " of " + std::to_string(rest) +
                            " vertices outside the separator");
  AnticompleteSplit out;
  for (int s = 0; s < 2; ++s) {
    std::sort(side[s].begin(), side[s].end());
    side[s].resize(m);
  }
  out.x1 = VertexSet::from_unsorted(std::move(side[0]));
  out.x2 = VertexSet::from_unsorted(std::move(side[1]));
  if (out.x1.front() > out.x2.front()) std::swap(out.x1, out.x2);
  if (crossing_status(g, out.x1, out.x2) != CrossingStatus::Empty)
    throw invariant_violation("split sides are not anticomplete");
  return out;
}

}  // namespace ehs
