#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "ehs/certificate.hpp"
#include "ehs/graph.hpp"
#include "ehs/poset.hpp"
#include "ehs/rng.hpp"

namespace ehs {

struct AlgoConfig {
  double epsilon = 1.0 / 500;       // crossing-density threshold of the main algorithm
  double delta = 1.0 / 100;         // exponent constant of the main algorithm
  double epsilon_safe = 1.0 / 5184;  // 1/(12 sqrt(eps)) >= 6 at this value
  int retry_cap = 1000;             // Case-1 resampling budget
  std::uint64_t seed = 0;
  bool start_with_safe_epsilon = false;
  bool allow_safe_fallback = true;  // restart with epsilon_safe on Case-1 underflow

  /// Throws precondition_violation on out-of-range fields.
  void validate() const;
};

// ---------------------------------------------------------------------------
// Degree peeling

/// alpha_1 = alpha / 4.
constexpr double peel_fraction(double alpha) noexcept { return alpha / 4.0; }

/// Requires edge_count(g) <= (1 - alpha) * C(n, 2). Repeatedly deletes the
/// smallest-index vertex whose complement degree is below alpha_1 * |current|;
/// the survivors U satisfy |U| >= alpha_1 n and Delta(g[U]) <= (1 - alpha_1)|U|.
VertexSet peel_to_bounded_max_degree(const Graph& g, double alpha);

// ---------------------------------------------------------------------------
// Sparse-or-split

/// beta = alpha_1^2 * epsilon / 24.
double sparse_beta(double alpha, double epsilon) noexcept;

struct SparseCase {
  VertexSet a;  // a <_l b, |a| = |b|
  VertexSet b;
};

struct SplitCase {
  VertexSet x1;  // no comparabilities between x1 and x2
  VertexSet x2;
  // Set when the instance is below the rounding regime of the construction and
  // a single incomparable pair was emitted instead.
  bool small_instance = false;
};

struct SparseOrSplit {
  std::variant<SparseCase, SplitCase> outcome;
  VertexSet peeled;  // the bounded-degree sub-order P'

  bool is_split() const noexcept { return std::holds_alternative<SplitCase>(outcome); }
};

SparseOrSplit sparse_or_split(const Poset& p, const LinearExtension& le, double alpha, double epsilon);
/// Same, reusing a precomputed comparability graph of `p`.
SparseOrSplit sparse_or_split(const Poset& p, const Graph& comparability, const LinearExtension& le, double alpha,
                              double epsilon);

// ---------------------------------------------------------------------------
// Main algorithm

/// J_0 = floor(log2(epsilon * n)) + 1 (non-positive when epsilon * n < 1).
int bucket_levels(int n, double epsilon) noexcept;
/// t_j = sqrt(n) * 2^(j/2).
double bucket_bound(int n, int j) noexcept;
/// sum_{i=from}^{to} t_i, zero for an empty range.
double bucket_bound_sum(int n, int from, int to) noexcept;

/// Exponent carried by main_algorithm certificates over the 2n-vertex host:
/// delta * sqrt(n/|X|) < t together with t >= 2 imply t >= (2n/|X|)^c for
/// c = ln 2 / (2 ln(2 sqrt 2 / delta)).
double main_exponent(double delta) noexcept;

enum class MainOutcome {
  NoHeavyBucket,  // no k with t_k < |V_k|: blocks V_0 and A
  CaseOne,        // sampled cells grouped into t blocks
  LevelsExhausted  // J reached 0: blocks A and B
};

/// Sizes tracked by the invariant checks, recorded after every main step.
struct MainAlgoState {
  int j = 0;
  std::size_t a = 0;
  std::size_t a_left = 0;  // |A'|
  std::size_t b = 0;
  std::size_t b_left = 0;  // |B'|
  double left_bound = 0;   // 2 * sum_{i=J+1}^{J0} t_i
};

struct MainAlgoStats {
  int n = 0;
  int levels = 0;  // J0
  int main_steps = 0;
  int sub_steps = 0;
  int invariant_checks = 0;
  int case_one_draws = 0;
  std::vector<MainAlgoState> states;
  MainOutcome outcome = MainOutcome::LevelsExhausted;
};

struct MainAlgoResult {
  BlockCertificate certificate;  // kind Empty, host_n = |a| + |b|, host indices
  MainAlgoStats stats;
};

/// Requires |a| = |b| = n, a <_l b, and every vertex of a (resp. b) comparable
/// to at most epsilon * n vertices of b (resp. a), with epsilon = config.epsilon.
/// Every invariant violation throws invariant_violation. Throws
/// case1_underflow when Case-1 grouping yields fewer than two blocks and
/// retry_cap_exhausted when no good sample is found within config.retry_cap.
MainAlgoResult main_algorithm(const Poset& p, const VertexSet& a, const VertexSet& b, const LinearExtension& le,
                              const AlgoConfig& config);

/// One Case-1 draw: keep each of the `a_size` vertices with probability 2^-k
/// and report, per T vertex, its unique selected neighbour (or -1).
struct CaseOneDraw {
  std::vector<char> selected;  // indexed by A vertex
  std::vector<int> owner;      // indexed by T vertex
  std::size_t good = 0;
};

CaseOneDraw draw_case_one(std::span<const std::vector<int>> neighbours_in_a, std::size_t a_size, int k, Rng& rng);

/// Probability that a vertex with `degree` neighbours in A is good when each
/// is selected with probability 2^-k: d p (1 - p)^(d - 1).
double good_probability(int degree, int k) noexcept;

/// Greedy grouping of cells: decreasing size (ties by position), close a group
/// once it reaches `target`, merge a trailing partial group into the last
/// closed one. Returns groups of cell positions.
std::vector<std::vector<std::size_t>> group_cells(std::span<const std::size_t> cell_sizes, double target);

// ---------------------------------------------------------------------------
// Top-level extraction

/// min{ ln2 / (2 ln(2 / (delta sqrt(beta)))), ln2 / ln(1/beta) }.
double comparability_exponent(double alpha, double epsilon, double delta) noexcept;
/// Exponent an extraction with `config` always meets, fallback included.
double guaranteed_exponent(double alpha, const AlgoConfig& config) noexcept;

enum class ExtractionRoute { Antichain, SmallInstanceSplit, HeavySplit, MainAlgorithm };

const char* to_string(ExtractionRoute route) noexcept;

struct ExtractionResult {
  BlockCertificate certificate;
  ExtractionRoute route = ExtractionRoute::MainAlgorithm;
  double epsilon_used = 0;
  bool safe_fallback = false;
  std::optional<MainAlgoStats> main_stats;
};

/// Requires n >= 2 and edge_count(comparability_graph(p)) <= (1 - alpha) C(n,2).
/// Returns a validated certificate with kind Empty in the comparability graph.
ExtractionResult extract_blocks_comparability(const Poset& p, double alpha, const AlgoConfig& config);

/// Requires g == incomparability_graph(witness) and edge_count(g) >= alpha C(n,2).
/// Returns a validated certificate with kind Complete in g.
ExtractionResult extract_blocks_incomparability(const Graph& g, const Poset& witness, double alpha,
                                                const AlgoConfig& config);

}  // namespace ehs
