#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ehs/certificate.hpp"
#include "ehs/graph.hpp"
#include "ehs/poset.hpp"
#include "ehs/rng.hpp"

namespace ehs {

enum class CotreeKind { Leaf, Join, Union };

const char* to_string(CotreeKind kind) noexcept;

/// Rooted tree whose leaves carry disjoint host vertex sets. Two host vertices
/// in different leaves are adjacent in the cograph iff their lowest common
/// ancestor is a Join node.
class Cotree {
 public:
  struct Node {
    CotreeKind kind = CotreeKind::Leaf;
    VertexSet vertices;         // leaves only
    std::vector<int> children;  // internal nodes only
  };

  /// A single leaf holding `vertices`.
  explicit Cotree(VertexSet vertices);
  Cotree() : Cotree(VertexSet{}) {}

  /// Turns leaf `node` into an internal node of `kind` with one leaf child per
  /// part. Returns the ids of the new leaves.
  std::vector<int> refine(int node, CotreeKind kind, const std::vector<VertexSet>& parts);

  /// Builds an internal node over existing subtrees; used when assembling a
  /// tree bottom-up. Returns the new node id and makes it the root.
  int add_internal(CotreeKind kind, std::vector<int> children);
  int add_leaf(VertexSet vertices);

  int root() const noexcept { return root_; }
  const Node& node(int id) const { return nodes_[static_cast<std::size_t>(id)]; }
  std::size_t node_count() const noexcept { return nodes_.size(); }

  std::vector<int> leaves() const;
  std::size_t leaf_count() const { return leaves().size(); }
  bool singleton_leaves() const;
  /// Union of all leaf sets.
  VertexSet vertices() const;

 private:
  std::vector<Node> nodes_;
  int root_ = 0;
};

/// Cograph on vertices 0..n-1 described by a cotree with singleton leaves;
/// vertices outside the tree stay isolated.
Graph realize(const Cotree& tree, int n);

/// Random cotree over 0..n-1 with singleton leaves and alternating labels.
Cotree random_cotree(int n, Rng& rng);

/// Exact maximum clique / independent set of the cograph by tree DP. Leaves
/// must be singletons (throws invalid_input otherwise).
VertexSet cotree_max_clique(const Cotree& tree);
VertexSet cotree_max_independent(const Cotree& tree);

struct RamseyResult {
  VertexSet clique;
  VertexSet independent;

  bool clique_is_larger() const noexcept { return clique.size() >= independent.size(); }
  const VertexSet& best() const noexcept { return clique_is_larger() ? clique : independent; }
};

/// Exact maximum clique and independent set by branch and bound with a greedy
/// colouring bound. Throws precondition_violation when n > cap (cap <= 64).
RamseyResult brute_force_ramsey(const Graph& g, int cap = 24);

/// What a block oracle sees: an induced sub-instance, its poset witness when
/// the host carried one, and a call counter for seed splitting.
struct OracleInput {
  const Graph& graph;
  const Poset* witness = nullptr;
  std::uint64_t call_index = 0;
};

using BlockOracle = std::function<BlockCertificate(const OracleInput&)>;

struct RecursionTrace {
  double exponent = 0;
  std::vector<double> potentials;  // sum over the current family of |Y|^c, per step
  int refinements = 0;
  std::size_t discarded = 0;       // vertices left outside every block
  int potential_checks = 0;
};

struct RecursionResult {
  Cotree tree;
  RecursionTrace trace;
};

/// Refines {V(g)} with oracle certificates until every set is a singleton,
/// largest set first. Throws oracle_contract_violation on an invalid or too
/// weak certificate and invariant_violation if the potential ever decreases.
RecursionResult qeh_recursion(const Graph& g, const Poset* witness, const BlockOracle& oracle, double c);

struct HomogeneousResult {
  RamseyResult ramsey;  // both sets verified in g
  Cotree tree;
  RecursionTrace trace;
  double bound = 0;     // n^(c/2)
};

/// Recursion + cotree DP; the larger of the two sets is guaranteed to reach
/// n^(c/2) and is verified homogeneous in g before returning.
HomogeneousResult homogeneous_from_certificates(const Graph& g, const Poset* witness, const BlockOracle& oracle,
                                                double c);

}  // namespace ehs
