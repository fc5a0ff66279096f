#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "ehs/cograph.hpp"
#include "ehs/errors.hpp"

namespace ehs {

namespace {

using Mask = std::uint64_t;

class CliqueSearch {
 public:
  explicit CliqueSearch(std::vector<Mask> adj) : adj_(std::move(adj)) {}

  Mask run() {
    const int n = static_cast<int>(adj_.size());
    const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    expand(0, all);
    return best_;
  }

 private:
  // Greedy sequential colouring of `cand`; colour classes bound the clique
  // that can still be added.
  int colour_bound(Mask cand) const {
    int colours = 0;
    while (cand) {
      Mask available = cand;
      while (available) {
        const int v = std::countr_zero(available);
        const Mask bit = Mask{1} << v;
        available &= ~bit & ~adj_[static_cast<std::size_t>(v)];
        cand &= ~bit;
      }
      ++colours;
    }
    return colours;
  }

  void expand(Mask current, Mask cand) {
    const int size = std::popcount(current);
    if (cand == 0) {
      if (size > std::popcount(best_)) best_ = current;
      return;
    }
    if (size + colour_bound(cand) <= std::popcount(best_)) return;
    while (cand) {
      if (size + std::popcount(cand) <= std::popcount(best_)) return;
      const int v = std::countr_zero(cand);
      const Mask bit = Mask{1} << v;
      expand(current | bit, cand & adj_[static_cast<std::size_t>(v)]);
      cand &= ~bit;
    }
  }

  std::vector<Mask> adj_;
  Mask best_ = 0;
};

VertexSet max_clique(const Graph& g) {
  std::vector<Mask> adj(static_cast<std::size_t>(g.n()), 0);
  for (int v = 0; v < g.n(); ++v)
    for (Vertex u : g.neighbors(v)) adj[static_cast<std::size_t>(v)] |= Mask{1} << u;
  const Mask best = CliqueSearch(std::move(adj)).run();
  std::vector<Vertex> out;
  for (int v = 0; v < g.n(); ++v)
    if (best >> v & 1) out.push_back(v);
  return VertexSet::from_unsorted(std::move(out));
}

}  // namespace

RamseyResult brute_force_ramsey(const Graph& g, int cap) {
  if (cap > 64) throw precondition_violation("brute-force cap cannot exceed 64");
  if (g.n() > cap)
    throw precondition_violation("brute-force Ramsey oracle limited to n <= " + std::to_string(cap) + ", got " +
                                 std::to_string(g.n()));
  return {max_clique(g), max_clique(complement(g))};
}

}  // namespace ehs
