#include <algorithm>
#include <limits>
#include <string>

#include "detail.hpp"
#include "ehs/eh_core.hpp"
#include "ehs/errors.hpp"

namespace ehs {

namespace {

// Min segment tree over per-vertex complement degrees; removed vertices hold
// +infinity. Supports "leftmost index with value < threshold".
class MinTree {
 public:
  explicit MinTree(const std::vector<int>& values) {
    while (width_ < values.size()) width_ *= 2;
    tree_.assign(2 * width_, kInf);
    for (std::size_t i = 0; i < values.size(); ++i) tree_[width_ + i] = values[i];
    for (std::size_t i = width_; i-- > 1;) tree_[i] = std::min(tree_[2 * i], tree_[2 * i + 1]);
  }

  void assign(std::size_t i, int value) {
    std::size_t pos = width_ + i;
    tree_[pos] = value;
    for (pos /= 2; pos >= 1; pos /= 2) tree_[pos] = std::min(tree_[2 * pos], tree_[2 * pos + 1]);
  }

  int get(std::size_t i) const { return tree_[width_ + i]; }

  // Returns -1 when no entry is below `threshold`.
  long leftmost_below(double threshold) const {
    if (!(static_cast<double>(tree_[1]) < threshold)) return -1;
    std::size_t pos = 1;
    while (pos < width_) pos = static_cast<double>(tree_[2 * pos]) < threshold ? 2 * pos : 2 * pos + 1;
    return static_cast<long>(pos - width_);
  }

  static constexpr int kInf = std::numeric_limits<int>::max();

 private:
  std::size_t width_ = 1;
  std::vector<int> tree_;
};

}  // namespace

VertexSet peel_to_bounded_max_degree(const Graph& g, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw precondition_violation("peeling needs 0 < alpha <= 1");
  const int n = g.n();
  if (!detail::at_most_fraction_of_pairs(g.edge_count(), 1.0 - alpha, n))
    throw precondition_violation("peeling needs at most (1 - alpha) C(n,2) edges; graph has " +
                                 std::to_string(g.edge_count()));
  const double alpha1 = peel_fraction(alpha);

  std::vector<int> codegree(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) codegree[static_cast<std::size_t>(v)] = n - 1 - g.degree(v);
  MinTree tree(codegree);
  Bitset alive = Bitset::full(static_cast<std::size_t>(n));
  std::size_t size = static_cast<std::size_t>(n);

  while (size > 0) {
    const long u = tree.leftmost_below(alpha1 * static_cast<double>(size));
    if (u < 0) break;
    alive.reset(static_cast<std::size_t>(u));
    tree.assign(static_cast<std::size_t>(u), MinTree::kInf);
    --size;
    // Alive non-neighbours of u lose one complement neighbour.
    Bitset non_neighbours = alive;
    non_neighbours.subtract(g.row(static_cast<Vertex>(u)));
    non_neighbours.for_each([&](int w) { tree.assign(static_cast<std::size_t>(w), tree.get(static_cast<std::size_t>(w)) - 1); });
  }

  VertexSet kept = VertexSet::from_bitset(alive);
  const double k = static_cast<double>(kept.size());
  if (k < alpha1 * n)
    throw invariant_violation("peeling kept " + std::to_string(kept.size()) + " < alpha_1 n vertices");
  for (Vertex v : kept)
    if (static_cast<double>(degree_into(g, v, alive)) > (1.0 - alpha1) * k)
      throw invariant_violation("peeling left vertex " + std::to_string(v) + " above the degree bound");
  return kept;
}

}  // namespace ehs
