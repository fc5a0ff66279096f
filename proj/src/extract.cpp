#include <algorithm>
#include <cmath>
#include <string>

#include "detail.hpp"
#include "ehs/eh_core.hpp"
#include "ehs/errors.hpp"

namespace ehs {

void AlgoConfig::validate() const {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw precondition_violation("epsilon must lie in (0, 1)");
  if (!(epsilon_safe > 0.0 && epsilon_safe < 1.0)) throw precondition_violation("epsilon_safe must lie in (0, 1)");
  if (!(delta > 0.0 && delta < 1.0)) throw precondition_violation("delta must lie in (0, 1)");
  if (retry_cap < 1) throw precondition_violation("retry_cap must be at least 1");
}

double comparability_exponent(double alpha, double epsilon, double delta) noexcept {
  const double beta = sparse_beta(alpha, epsilon);
  const double ln2 = std::log(2.0);
  const double main_branch = ln2 / (2.0 * std::log(2.0 / (delta * std::sqrt(beta))));
  const double split_branch = ln2 / std::log(1.0 / beta);
  return std::min(main_branch, split_branch);
}

double guaranteed_exponent(double alpha, const AlgoConfig& config) noexcept {
  const double safe = comparability_exponent(alpha, config.epsilon_safe, config.delta);
  if (config.start_with_safe_epsilon) return safe;
  const double nominal = comparability_exponent(alpha, config.epsilon, config.delta);
  return config.allow_safe_fallback ? std::min(nominal, safe) : nominal;
}

const char* to_string(ExtractionRoute route) noexcept {
  switch (route) {
    case ExtractionRoute::Antichain: return "antichain";
    case ExtractionRoute::SmallInstanceSplit: return "small-instance-split";
    case ExtractionRoute::HeavySplit: return "heavy-split";
    case ExtractionRoute::MainAlgorithm: return "main-algorithm";
  }
  return "unknown";
}

namespace {

ExtractionResult extract_with(const Poset& p, const Graph& comp, const LinearExtension& le, double alpha,
                              const AlgoConfig& config, double epsilon) {
  ExtractionResult out;
  out.epsilon_used = epsilon;
  out.certificate.kind = BlockKind::Empty;
  out.certificate.host_n = p.size();
  out.certificate.exponent = comparability_exponent(alpha, epsilon, config.delta);

  const SparseOrSplit split = sparse_or_split(p, comp, le, alpha, epsilon);
  if (const auto* s = std::get_if<SplitCase>(&split.outcome)) {
    out.route = s->small_instance ? ExtractionRoute::SmallInstanceSplit : ExtractionRoute::HeavySplit;
    out.certificate.blocks = {s->x1, s->x2};
    return out;
  }
  const auto& sparse = std::get<SparseCase>(split.outcome);
  AlgoConfig main_config = config;
  main_config.epsilon = epsilon;
  MainAlgoResult main = main_algorithm(p, sparse.a, sparse.b, le, main_config);
  out.route = ExtractionRoute::MainAlgorithm;
  out.certificate.blocks = std::move(main.certificate.blocks);
  out.main_stats = std::move(main.stats);
  return out;
}

}  // namespace

ExtractionResult extract_blocks_comparability(const Poset& p, double alpha, const AlgoConfig& config) {
  config.validate();
  const int n = p.size();
  if (n < 2) throw precondition_violation("block extraction needs at least two elements");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw precondition_violation("alpha must lie in (0, 1]");
  const Graph comp = comparability_graph(p);
  if (!detail::at_most_fraction_of_pairs(comp.edge_count(), 1.0 - alpha, n))
    throw precondition_violation("comparability graph has " + std::to_string(comp.edge_count()) +
                                 " edges, more than (1 - alpha) C(n,2) for alpha = " + std::to_string(alpha));

  ExtractionResult out;
  if (comp.edge_count() == 0) {
    // An antichain is its own certificate: n singletons, t = n >= n^c.
    out.route = ExtractionRoute::Antichain;
    out.epsilon_used = config.start_with_safe_epsilon ? config.epsilon_safe : config.epsilon;
    out.certificate.kind = BlockKind::Empty;
    out.certificate.host_n = n;
    out.certificate.exponent = comparability_exponent(alpha, out.epsilon_used, config.delta);
    for (Vertex v = 0; v < n; ++v) out.certificate.blocks.push_back(VertexSet::from_unsorted({v}));
  } else {
    const LinearExtension le = linear_extension(p);
    if (config.start_with_safe_epsilon) {
      out = extract_with(p, comp, le, alpha, config, config.epsilon_safe);
    } else {
      try {
        out = extract_with(p, comp, le, alpha, config, config.epsilon);
      } catch (const case1_underflow&) {
        if (!config.allow_safe_fallback) throw;
        out = extract_with(p, comp, le, alpha, config, config.epsilon_safe);
        out.safe_fallback = true;
      }
    }
  }

  if (const auto report = validate_certificate(comp, out.certificate); !report)
    throw invariant_violation("extracted certificate failed validation: " + report.violation);
  return out;
}

ExtractionResult extract_blocks_incomparability(const Graph& g, const Poset& witness, double alpha,
                                                const AlgoConfig& config) {
  if (g.n() != witness.size()) throw precondition_violation("witness poset has a different number of elements");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw precondition_violation("alpha must lie in (0, 1]");
  if (!detail::at_least_fraction_of_pairs(g.edge_count(), alpha, g.n()))
    throw precondition_violation("incomparability graph has " + std::to_string(g.edge_count()) +
                                 " edges, fewer than alpha C(n,2) for alpha = " + std::to_string(alpha));
  if (!(g == incomparability_graph(witness)))
    throw precondition_violation("witness mismatch: graph is not the incomparability graph of the poset");

  ExtractionResult out = extract_blocks_comparability(witness, alpha, config);
  out.certificate.kind = BlockKind::Complete;
  if (const auto report = validate_certificate(g, out.certificate); !report)
    throw invariant_violation("relabelled certificate failed validation: " + report.violation);
  return out;
}

}  // namespace ehs
