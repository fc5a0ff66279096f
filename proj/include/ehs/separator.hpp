#pragma once

#include <vector>

#include "ehs/graph.hpp"

namespace ehs {

enum class SeparatorStrategy { Exact, Greedy };

const char* to_string(SeparatorStrategy strategy) noexcept;

/// Largest n accepted by the Exact strategy.
inline constexpr int kExactSeparatorLimit = 22;

/// S together with the connected components of g - S, each of size <= 2n/3.
struct SeparatorResult {
  VertexSet separator;
  std::vector<VertexSet> components;  // ordered by smallest vertex

  std::size_t largest_component() const noexcept;
};

/// Components of g restricted to the vertices not in `removed`.
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& removed);

/// True iff 3|C| <= 2n for every component.
bool is_balanced(int n, const std::vector<VertexSet>& components);

/// Exact: minimum |S| by subset enumeration (n <= kExactSeparatorLimit), ties
/// broken in favour of a separator whose components split into two sides of
/// at least (n - |S|)/3, then the smallest largest component, then
/// enumeration order.
/// Greedy: repeatedly removes a highest-degree vertex of the largest
/// component; throws separator_failure past a budget of ceil(n/3) removals.
SeparatorResult find_balanced_separator(const Graph& g, SeparatorStrategy strategy);

/// Checks that the components partition V - S, are connected, pairwise
/// non-adjacent and balanced. Throws invariant_violation otherwise.
void check_separator(const Graph& g, const SeparatorResult& sep);

struct AnticompleteSplit {
  VertexSet x1;
  VertexSet x2;
};

/// Partitions the components into two sides as evenly as possible (exact
/// subset sum) and trims both sides to the smaller size. Throws separator_failure when fewer than two vertices
/// remain or a side ends below (n - |S|)/3.
AnticompleteSplit split_from_separator(const Graph& g, const SeparatorResult& sep);

}  // namespace ehs
