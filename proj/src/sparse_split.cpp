#include <algorithm>
#include <cmath>
#include <string>

#include "ehs/eh_core.hpp"
#include "ehs/errors.hpp"

namespace ehs {

double sparse_beta(double alpha, double epsilon) noexcept {
  const double alpha1 = peel_fraction(alpha);
  return alpha1 * alpha1 * epsilon / 24.0;
}

namespace {

void check_outcome(const Graph& comp, const LinearExtension& le, const SparseOrSplit& r, double beta, double epsilon) {
  const double floor_size = beta * comp.n();
  if (const auto* split = std::get_if<SplitCase>(&r.outcome)) {
    if (split->x1.empty() || split->x2.empty() || static_cast<double>(split->x1.size()) < floor_size ||
        static_cast<double>(split->x2.size()) < floor_size)
      throw invariant_violation("sparse_or_split: split blocks below beta n");
    if (crossing_status(comp, split->x1, split->x2) != CrossingStatus::Empty)
      throw invariant_violation("sparse_or_split: split blocks are not anticomplete");
    return;
  }
  const auto& sparse = std::get<SparseCase>(r.outcome);
  const auto& a = sparse.a;
  const auto& b = sparse.b;
  if (a.size() != b.size() || a.empty() || static_cast<double>(a.size()) < floor_size || !disjoint(a, b))
    throw invariant_violation("sparse_or_split: sparse sets have bad sizes");
  int max_a = -1;
  int min_b = comp.n();
  for (Vertex v : a) max_a = std::max(max_a, le.rank(v));
  for (Vertex w : b) min_b = std::min(min_b, le.rank(w));
  if (max_a >= min_b) throw invariant_violation("sparse_or_split: A is not below B in the linear extension");
  const Bitset a_bits = a.to_bitset(static_cast<std::size_t>(comp.n()));
  const Bitset b_bits = b.to_bitset(static_cast<std::size_t>(comp.n()));
  const double cap = epsilon * static_cast<double>(a.size());
  for (Vertex v : a)
    if (degree_into(comp, v, b_bits) > cap) throw invariant_violation("sparse_or_split: A vertex too heavy into B");
  for (Vertex w : b)
    if (degree_into(comp, w, a_bits) > cap) throw invariant_violation("sparse_or_split: B vertex too heavy into A");
}

}  // namespace

SparseOrSplit sparse_or_split(const Poset& p, const LinearExtension& le, double alpha, double epsilon) {
  return sparse_or_split(p, comparability_graph(p), le, alpha, epsilon);
}

SparseOrSplit sparse_or_split(const Poset& p, const Graph& comp, const LinearExtension& le, double alpha,
                              double epsilon) {
  const int n = p.size();
  if (n < 2) throw precondition_violation("sparse_or_split needs at least two elements");
  if (comp.n() != n || static_cast<int>(le.size()) != n)
    throw precondition_violation("sparse_or_split: poset, graph and linear extension sizes differ");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw precondition_violation("sparse_or_split needs 0 < epsilon < 1");

  SparseOrSplit result{SparseCase{}, peel_to_bounded_max_degree(comp, alpha)};
  const double alpha1 = peel_fraction(alpha);
  const double beta = sparse_beta(alpha, epsilon);
  const auto min_block = static_cast<std::size_t>(std::max(1.0, std::ceil(beta * n)));
  const auto un = static_cast<std::size_t>(n);

  std::vector<Vertex> by_rank = result.peeled.vertices();
  std::sort(by_rank.begin(), by_rank.end(), [&](Vertex x, Vertex y) { return le.rank(x) < le.rank(y); });
  const std::size_t n1 = by_rank.size();
  const auto m = static_cast<std::size_t>(std::max(1.0, std::floor(alpha1 * static_cast<double>(n1) / 12.0)));

  if (n1 >= 3 * m) {
    // T: the 2m largest elements of P' under <_l; U: the top of T.
    const std::size_t t_size = 2 * m;
    const std::size_t u_size =
        std::min(t_size, static_cast<std::size_t>(std::max(1.0, std::ceil(epsilon / 4.0 * static_cast<double>(t_size)))));
    Bitset t_bits(un);
    Bitset u_bits(un);
    for (std::size_t i = n1 - t_size; i < n1; ++i) t_bits.set(static_cast<std::size_t>(by_rank[i]));
    for (std::size_t i = n1 - u_size; i < n1; ++i) u_bits.set(static_cast<std::size_t>(by_rank[i]));
    Bitset t_minus_u = t_bits;
    t_minus_u.subtract(u_bits);

    std::vector<Vertex> s(by_rank.begin(), by_rank.begin() + static_cast<std::ptrdiff_t>(n1 - t_size));
    std::sort(s.begin(), s.end());
    const double heavy_at = epsilon / 2.0 * static_cast<double>(t_size);
    std::vector<Vertex> light;
    for (Vertex v : s) {
      const auto& row = comp.row(v);
      if (static_cast<double>(intersection_count(row, t_bits)) < heavy_at) {
        light.push_back(v);
        continue;
      }
      // v precedes all of T, so its T-neighbours are successors; nothing in
      // N(v) ∩ (T \ U) can be below anything in U \ N(v).
      Bitset x1 = row;
      x1 &= t_minus_u;
      Bitset x2 = u_bits;
      x2.subtract(row);
      if (x1.count() >= min_block && x2.count() >= min_block) {
        result.outcome = SplitCase{VertexSet::from_bitset(x1), VertexSet::from_bitset(x2), false};
        check_outcome(comp, le, result, beta, epsilon);
        return result;
      }
    }

    if (light.size() >= m) {
      light.resize(m);
      VertexSet a = VertexSet::from_unsorted(light);
      const Bitset a_bits = a.to_bitset(un);
      const double drop_at = epsilon * static_cast<double>(m);
      std::vector<Vertex> b;
      t_bits.for_each([&](int w) {
        if (b.size() < m && static_cast<double>(degree_into(comp, w, a_bits)) < drop_at) b.push_back(w);
      });
      if (b.size() == m) {
        result.outcome = SparseCase{std::move(a), VertexSet::from_unsorted(std::move(b))};
        check_outcome(comp, le, result, beta, epsilon);
        return result;
      }
    }
  }

  // Below the rounding regime any single incomparable pair meets |X_i| >= beta n.
  if (beta * n <= 1.0) {
    for (Vertex x = 0; x < n; ++x) {
      Bitset free = comp.row(x);
      free.flip();
      free.reset(static_cast<std::size_t>(x));
      Vertex found = -1;
      free.for_each([&](int y) {
        if (found < 0 && y > x) found = y;
      });
      if (found >= 0) {
        result.outcome = SplitCase{VertexSet::from_unsorted({x}), VertexSet::from_unsorted({found}), true};
        check_outcome(comp, le, result, beta, epsilon);
        return result;
      }
    }
  }
  throw invariant_violation("sparse_or_split: neither branch materialized (n = " + std::to_string(n) +
                            ", |P'| = " + std::to_string(n1) + ")");
}

}  // namespace ehs
