#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ehs/bitset.hpp"
#include "ehs/errors.hpp"
#include "ehs/graph.hpp"

namespace ehs {

/// Thrown by Poset::from_relations when the generating pairs contain a cycle.
class cycle_error : public invalid_input {
 public:
  cycle_error(const std::string& what, std::vector<Vertex> cycle) : invalid_input(what), cycle_(std::move(cycle)) {}
  const std::vector<Vertex>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<Vertex> cycle_;
};

/// Strict partial order on 0..n-1 stored as its full transitive closure:
/// one successor row and one predecessor row per element.
class Poset {
 public:
  Poset() = default;

  /// Closure of the DAG given by pairs (x, y) meaning x ≺ y.
  static Poset from_relations(int n, std::span<const Edge> pairs);
  /// x ≺ y iff x precedes y in every order (each a permutation of 0..n-1).
  static Poset from_linear_orders(int n, std::span<const std::vector<Vertex>> orders);
  /// Validates irreflexivity, antisymmetry and transitivity.
  static Poset from_closure(std::vector<Bitset> successors);

  int size() const noexcept { return static_cast<int>(succ_.size()); }
  bool less(Vertex x, Vertex y) const noexcept { return succ_[x].test(static_cast<std::size_t>(y)); }
  bool comparable(Vertex x, Vertex y) const noexcept { return less(x, y) || less(y, x); }
  const Bitset& successors(Vertex x) const noexcept { return succ_[x]; }
  const Bitset& predecessors(Vertex x) const noexcept { return pred_[x]; }
  std::size_t relation_count() const noexcept;
  /// Every related pair (x, y) with x ≺ y, ordered by x then y.
  std::vector<Edge> relations() const;

  /// Sub-order on `elements`; local index i stands for elements[i].
  Poset restrict(std::span<const Vertex> elements) const;

  friend bool operator==(const Poset& a, const Poset& b) { return a.succ_ == b.succ_; }

 private:
  static Poset trusted(std::vector<Bitset> successors);

  std::vector<Bitset> succ_;
  std::vector<Bitset> pred_;
};

/// Permutation of the elements in increasing <_l order, with rank lookup.
class LinearExtension {
 public:
  LinearExtension() = default;
  /// Throws invalid_input unless `order` is a permutation of 0..n-1.
  explicit LinearExtension(std::vector<Vertex> order);

  std::size_t size() const noexcept { return order_.size(); }
  const std::vector<Vertex>& order() const noexcept { return order_; }
  int rank(Vertex v) const noexcept { return rank_[v]; }
  bool before(Vertex x, Vertex y) const noexcept { return rank_[x] < rank_[y]; }

 private:
  std::vector<Vertex> order_;
  std::vector<int> rank_;
};

/// Kahn's procedure; among available elements the smallest index goes first.
LinearExtension linear_extension(const Poset& p);
bool check_linear_extension(const Poset& p, std::span<const Vertex> order);

Graph comparability_graph(const Poset& p);
Graph incomparability_graph(const Poset& p);

struct RealizedPoset {
  Poset poset;
  std::vector<std::vector<Vertex>> realizer;  // the k linear orders
};

/// Intersection of k uniformly random linear orders, deterministic per seed.
RealizedPoset random_realized_poset(int n, int k, std::uint64_t seed);
Poset random_poset_dimension_k(int n, int k, std::uint64_t seed);

}  // namespace ehs
