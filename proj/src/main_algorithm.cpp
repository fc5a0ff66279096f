#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

#include "ehs/eh_core.hpp"
#include "ehs/errors.hpp"

namespace ehs {

int bucket_levels(int n, double epsilon) noexcept {
  const double x = epsilon * static_cast<double>(n);
  // Largest j with 2^j <= x, robust to x landing a hair off a power of two.
  const double tol = 1.0 + 1e-12;
  int j = static_cast<int>(std::floor(std::log2(x)));
  while (std::ldexp(1.0, j + 1) <= x * tol) ++j;
  while (std::ldexp(1.0, j) > x * tol) --j;
  return j + 1;
}

double bucket_bound(int n, int j) noexcept { return std::sqrt(static_cast<double>(n)) * std::exp2(0.5 * j); }

double bucket_bound_sum(int n, int from, int to) noexcept {
  double sum = 0.0;
  for (int i = std::max(from, 1); i <= to; ++i) sum += bucket_bound(n, i);
  return sum;
}

double main_exponent(double delta) noexcept { return std::log(2.0) / (2.0 * std::log(2.0 * std::sqrt(2.0) / delta)); }

double good_probability(int degree, int k) noexcept {
  const double p = std::ldexp(1.0, -k);
  return degree * p * std::pow(1.0 - p, degree - 1);
}

CaseOneDraw draw_case_one(std::span<const std::vector<int>> neighbours_in_a, std::size_t a_size, int k, Rng& rng) {
  CaseOneDraw draw;
  const double p = std::ldexp(1.0, -k);
  draw.selected.resize(a_size);
  for (auto& s : draw.selected) s = rng.bernoulli(p) ? 1 : 0;
  draw.owner.assign(neighbours_in_a.size(), -1);
  for (std::size_t i = 0; i < neighbours_in_a.size(); ++i) {
    int hits = 0;
    int last = -1;
    for (int a : neighbours_in_a[i])
      if (draw.selected[static_cast<std::size_t>(a)]) {
        ++hits;
        last = a;
      }
    if (hits == 1) {
      draw.owner[i] = last;
      ++draw.good;
    }
  }
  return draw;
}

std::vector<std::vector<std::size_t>> group_cells(std::span<const std::size_t> cell_sizes, double target) {
  std::vector<std::size_t> order(cell_sizes.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return cell_sizes[x] > cell_sizes[y]; });
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> current;
  std::size_t current_size = 0;
  for (std::size_t idx : order) {
    current.push_back(idx);
    current_size += cell_sizes[idx];
    if (static_cast<double>(current_size) >= target) {
      groups.push_back(std::move(current));
      current.clear();
      current_size = 0;
    }
  }
  if (!current.empty()) {
    if (groups.empty())
      groups.push_back(std::move(current));
    else
      groups.back().insert(groups.back().end(), current.begin(), current.end());
  }
  return groups;
}

namespace {

// Working state of one run. A and B are addressed by local indices 0..n-1
// (sorted host order), adjacency holds only the A-B comparabilities.
class MainRun {
 public:
  MainRun(const Poset& p, const VertexSet& a, const VertexSet& b, const LinearExtension& le, const AlgoConfig& config)
      : config_(config), a_host_(a.vertices()), b_host_(b.vertices()), rng_(derive_seed(config.seed, 0x6d61696eULL)) {
    n_ = static_cast<int>(a.size());
    if (n_ == 0 || b.size() != a.size()) throw precondition_violation("main_algorithm needs |A| = |B| >= 1");
    const int universe = p.size();
    if (a.back() >= universe || b.back() >= universe) throw precondition_violation("main_algorithm: sets outside poset");
    if (!disjoint(a, b)) throw precondition_violation("main_algorithm: A and B intersect");
    if (static_cast<int>(le.size()) != universe) throw precondition_violation("main_algorithm: linear extension size");
    int max_a = -1;
    int min_b = universe;
    for (Vertex v : a) max_a = std::max(max_a, le.rank(v));
    for (Vertex v : b) min_b = std::min(min_b, le.rank(v));
    if (max_a >= min_b) throw precondition_violation("main_algorithm: A is not below B in the linear extension");

    std::vector<int> b_local(static_cast<std::size_t>(universe), -1);
    Bitset b_mask(static_cast<std::size_t>(universe));
    for (std::size_t j = 0; j < b_host_.size(); ++j) {
      b_local[static_cast<std::size_t>(b_host_[j])] = static_cast<int>(j);
      b_mask.set(static_cast<std::size_t>(b_host_[j]));
    }
    adj_a_.resize(a_host_.size());
    adj_b_.resize(b_host_.size());
    for (std::size_t i = 0; i < a_host_.size(); ++i) {
      if (intersection_count(p.predecessors(a_host_[i]), b_mask) != 0)
        throw precondition_violation("main_algorithm: some element of B precedes an element of A");
      Bitset row = p.successors(a_host_[i]);
      row &= b_mask;
      row.for_each([&](int host) {
        const int j = b_local[static_cast<std::size_t>(host)];
        adj_a_[i].push_back(j);
        adj_b_[static_cast<std::size_t>(j)].push_back(static_cast<int>(i));
      });
    }
    const double cap = config.epsilon * n_;
    for (std::size_t i = 0; i < adj_a_.size(); ++i)
      if (static_cast<double>(adj_a_[i].size()) > cap || static_cast<double>(adj_b_[i].size()) > cap)
        throw precondition_violation("main_algorithm: crossing degree exceeds epsilon n");

    alive_a_.assign(a_host_.size(), 1);
    alive_b_.assign(b_host_.size(), 1);
    deg_.resize(b_host_.size());
    for (std::size_t j = 0; j < adj_b_.size(); ++j) deg_[j] = static_cast<int>(adj_b_[j].size());
    a_count_ = b_count_ = a_host_.size();
    levels_ = bucket_levels(n_, config.epsilon);
    j_ = levels_;
    stats_.n = n_;
    stats_.levels = levels_;
  }

  MainAlgoResult run() {
    const double eq1 = bucket_bound_sum(n_, 1, levels_);
    if (!(eq1 < n_ / 4.0)) {
      std::ostringstream os;
      os << "bucket bounds sum to " << eq1 << " >= n/4 = " << n_ / 4.0 << " (epsilon too large)";
      throw invariant_violation(os.str());
    }

    std::vector<VertexSet> blocks;
    for (;;) {
      check_invariants();
      if (j_ <= 0) {
        blocks = {alive_set(alive_a_, a_host_), alive_set(alive_b_, b_host_)};
        stats_.outcome = MainOutcome::LevelsExhausted;
        break;
      }

      std::vector<std::vector<int>> buckets(static_cast<std::size_t>(j_) + 1);
      for (std::size_t j = 0; j < alive_b_.size(); ++j) {
        if (!alive_b_[j]) continue;
        const int level = static_cast<int>(std::bit_width(static_cast<unsigned>(deg_[j])));
        if (level > j_) throw invariant_violation("vertex of B above the current degree level");
        buckets[static_cast<std::size_t>(level)].push_back(static_cast<int>(j));
      }
      int k = 0;
      for (int i = j_; i >= 1; --i)
        if (bucket_bound(n_, i) < static_cast<double>(buckets[static_cast<std::size_t>(i)].size())) {
          k = i;
          break;
        }
      if (k == 0) {
        if (2 * buckets[0].size() < static_cast<std::size_t>(n_))
          throw invariant_violation("no heavy bucket but |V_0| < n/2");
        blocks = {local_set(buckets[0], b_host_), alive_set(alive_a_, a_host_)};
        stats_.outcome = MainOutcome::NoHeavyBucket;
        break;
      }
      for (int i = k + 1; i <= j_; ++i)
        for (int j : buckets[static_cast<std::size_t>(i)]) remove_b(j);
      j_ = k;

      if (auto found = sub_algorithm(k, std::move(buckets[static_cast<std::size_t>(k)]))) {
        blocks = std::move(*found);
        stats_.outcome = MainOutcome::CaseOne;
        break;
      }
      ++stats_.main_steps;
    }

    const double t = static_cast<double>(blocks.size());
    for (const auto& block : blocks)
      if (!(config_.delta * std::sqrt(static_cast<double>(n_) / static_cast<double>(block.size())) < t))
        throw invariant_violation("main algorithm output violates delta (n/|X|)^(1/2) < t");

    MainAlgoResult result;
    result.certificate.kind = BlockKind::Empty;
    result.certificate.blocks = std::move(blocks);
    result.certificate.exponent = main_exponent(config_.delta);
    result.certificate.host_n = 2 * n_;
    result.stats = std::move(stats_);
    return result;
  }

 private:
  // Returns the Case-1 blocks, or nullopt after moving W_r to B' and lowering J.
  std::optional<std::vector<VertexSet>> sub_algorithm(int k, std::vector<int> w) {
    const double tk = bucket_bound(n_, k);
    const int half = 1 << (k - 1);
    std::size_t heavy_total = 0;
    std::vector<char> in_w(alive_b_.size(), 0);
    for (;;) {
      ++stats_.sub_steps;
      if (static_cast<double>(w.size()) < 2.0 * tk) {
        for (int j : w) remove_b(j);
        j_ = k - 1;
        break;
      }
      const double wsize = static_cast<double>(w.size());
      const double heavy_at = wsize * wsize / n_;
      for (int j : w) in_w[static_cast<std::size_t>(j)] = 1;
      std::vector<int> heavy;
      for (std::size_t i = 0; i < alive_a_.size(); ++i) {
        if (!alive_a_[i]) continue;
        int into_w = 0;
        for (int j : adj_a_[i]) into_w += in_w[static_cast<std::size_t>(j)];
        if (static_cast<double>(into_w) >= heavy_at) heavy.push_back(static_cast<int>(i));
      }
      for (int j : w) in_w[static_cast<std::size_t>(j)] = 0;
      // |H_l| < t_k / x_l with x_l = |W_l| / t_k.
      if (!(static_cast<double>(heavy.size()) * wsize < tk * tk))
        throw invariant_violation("heavy set of size " + std::to_string(heavy.size()) + " exceeds t_k / x_l");
      heavy_total += heavy.size();
      for (int i : heavy) remove_a(i);

      std::vector<int> t;
      for (int j : w)
        if (deg_[static_cast<std::size_t>(j)] >= half) t.push_back(j);
      if (2 * t.size() >= w.size()) return case_one(k, w.size(), heavy_at, t);

      // Case 2: recompute over all of B; monotone degrees make this equal T.
      std::vector<int> next;
      for (std::size_t j = 0; j < alive_b_.size(); ++j)
        if (alive_b_[j] && deg_[j] >= half) next.push_back(static_cast<int>(j));
      if (next != t) throw invariant_violation("degree monotonicity: W_{l+1} is not contained in W_l");
      w = std::move(next);
    }
    if (!(static_cast<double>(heavy_total) < tk))
      throw invariant_violation("heavy vertices of one activation reach t_k");
    return std::nullopt;
  }

  std::vector<VertexSet> case_one(int k, std::size_t w_size, double heavy_at, const std::vector<int>& t) {
    const double cell_cap = std::min(config_.epsilon * n_, heavy_at);
    std::vector<std::vector<int>> neighbours(t.size());
    for (std::size_t x = 0; x < t.size(); ++x)
      for (int i : adj_b_[static_cast<std::size_t>(t[x])])
        if (alive_a_[static_cast<std::size_t>(i)]) neighbours[x].push_back(i);

    std::optional<CaseOneDraw> accepted;
    for (int attempt = 0; attempt < config_.retry_cap; ++attempt) {
      ++stats_.case_one_draws;
      CaseOneDraw draw = draw_case_one(neighbours, a_host_.size(), k, rng_);
      if (12 * draw.good >= w_size) {
        accepted = std::move(draw);
        break;
      }
    }
    if (!accepted)
      throw retry_cap_exhausted("Case-1 sampling found no S with |Y| >= |W|/12 in " +
                                std::to_string(config_.retry_cap) + " draws (k = " + std::to_string(k) +
                                ", |W| = " + std::to_string(w_size) + ", |T| = " + std::to_string(t.size()) + ")");

    std::vector<std::vector<Vertex>> by_owner(a_host_.size());
    for (std::size_t x = 0; x < t.size(); ++x)
      if (accepted->owner[x] >= 0)
        by_owner[static_cast<std::size_t>(accepted->owner[x])].push_back(b_host_[static_cast<std::size_t>(t[x])]);
    std::vector<std::vector<Vertex>> cells;
    std::vector<std::size_t> sizes;
    for (auto& cell : by_owner) {
      if (cell.empty()) continue;
      if (static_cast<double>(cell.size()) > cell_cap) throw invariant_violation("cell Y_v larger than Delta'_l");
      sizes.push_back(cell.size());
      cells.push_back(std::move(cell));
    }

    const auto groups = group_cells(sizes, cell_cap);
    if (groups.size() < 2) {
      std::ostringstream os;
      os << "Case-1 grouping gave t = " << groups.size() << " (|Y| = " << accepted->good << ", Delta' = " << cell_cap
         << ", epsilon = " << config_.epsilon << ")";
      throw case1_underflow(os.str());
    }
    std::vector<VertexSet> blocks;
    for (const auto& group : groups) {
      std::vector<Vertex> members;
      for (std::size_t c : group) members.insert(members.end(), cells[c].begin(), cells[c].end());
      if (static_cast<double>(members.size()) < cell_cap) throw invariant_violation("Case-1 block below Delta'_l");
      blocks.push_back(VertexSet::from_unsorted(std::move(members)));
    }
    return blocks;
  }

  void remove_a(int i) {
    alive_a_[static_cast<std::size_t>(i)] = 0;
    --a_count_;
    ++a_left_;
    for (int j : adj_a_[static_cast<std::size_t>(i)])
      if (--deg_[static_cast<std::size_t>(j)] < 0) throw invariant_violation("negative degree into A");
  }

  void remove_b(int j) {
    alive_b_[static_cast<std::size_t>(j)] = 0;
    --b_count_;
    ++b_left_;
  }

  void check_invariants() {
    ++stats_.invariant_checks;
    const auto n = static_cast<std::size_t>(n_);
    if (a_count_ + a_left_ != n || b_count_ + b_left_ != n)
      throw invariant_violation("size bookkeeping: |A| + |A'| = |B| + |B'| = n fails");
    const double bound = 2.0 * bucket_bound_sum(n_, j_ + 1, levels_);
    if (static_cast<double>(a_left_) > bound || static_cast<double>(b_left_) > bound) {
      std::ostringstream os;
      os << "leftover bound: |A'| = " << a_left_ << ", |B'| = " << b_left_ << " exceed " << bound << " at J = " << j_;
      throw invariant_violation(os.str());
    }
    const double limit = std::ldexp(1.0, j_);
    for (std::size_t j = 0; j < alive_b_.size(); ++j)
      if (alive_b_[j] && !(deg_[j] < limit))
        throw invariant_violation("degree bound: a vertex of B has at least 2^J neighbours in A");
    stats_.states.push_back({j_, a_count_, a_left_, b_count_, b_left_, bound});
  }

  static VertexSet alive_set(const std::vector<char>& alive, const std::vector<Vertex>& host) {
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < alive.size(); ++i)
      if (alive[i]) out.push_back(host[i]);
    return VertexSet::from_unsorted(std::move(out));
  }

  static VertexSet local_set(const std::vector<int>& local, const std::vector<Vertex>& host) {
    std::vector<Vertex> out;
    out.reserve(local.size());
    for (int j : local) out.push_back(host[static_cast<std::size_t>(j)]);
    return VertexSet::from_unsorted(std::move(out));
  }

  const AlgoConfig& config_;
  std::vector<Vertex> a_host_;
  std::vector<Vertex> b_host_;
  Rng rng_;
  int n_ = 0;
  std::vector<std::vector<int>> adj_a_;
  std::vector<std::vector<int>> adj_b_;
  std::vector<char> alive_a_;
  std::vector<char> alive_b_;
  std::vector<int> deg_;
  std::size_t a_count_ = 0;
  std::size_t b_count_ = 0;
  std::size_t a_left_ = 0;
  std::size_t b_left_ = 0;
  int levels_ = 0;
  int j_ = 0;
  MainAlgoStats stats_;
};

}  // namespace

MainAlgoResult main_algorithm(const Poset& p, const VertexSet& a, const VertexSet& b, const LinearExtension& le,
                              const AlgoConfig& config) {
  config.validate();
  return MainRun(p, a, b, le, config).run();
}

}  // namespace ehs
