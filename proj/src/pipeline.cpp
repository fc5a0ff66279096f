#include "ehs/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>

#include "ehs/errors.hpp"

namespace ehs {

const char* to_string(WitnessMode mode) noexcept {
  switch (mode) {
    case WitnessMode::Provided: return "provided";
    case WitnessMode::DimensionTwo: return "dimension-two";
    case WitnessMode::Fail: return "fail";
  }
  return "unknown";
}

const char* to_string(PipelineBranch branch) noexcept {
  switch (branch) {
    case PipelineBranch::Separator: return "separator";
    case PipelineBranch::LowDegreeSplit: return "low-degree-split";
    case PipelineBranch::Dense: return "dense";
  }
  return "unknown";
}

void PipelineConfig::validate() const {
  if (!(lambda > 0.0 && lambda < 1.0)) throw precondition_violation("lambda must lie in (0, 1)");
  algo.validate();
}

double PipelineConfig::dense_alpha() const noexcept { return std::min(1.0, 2.0 * lambda); }

double pipeline_exponent(const PipelineConfig& config) noexcept {
  return std::min(guaranteed_exponent(config.dense_alpha(), config.algo), 1.0 / std::log2(1.0 / config.lambda));
}

namespace {

// Vertices sorted by (degree, index), the given direction on degree.
std::vector<Vertex> by_degree(const Graph& g, bool descending) {
  std::vector<Vertex> order(static_cast<std::size_t>(g.n()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return descending ? g.degree(a) > g.degree(b) : g.degree(a) < g.degree(b);
  });
  return order;
}

SeparatorResult separator_with_fallback(const Graph& g, SeparatorStrategy strategy) {
  if (strategy == SeparatorStrategy::Exact && g.n() > kExactSeparatorLimit) strategy = SeparatorStrategy::Greedy;
  try {
    return find_balanced_separator(g, strategy);
  } catch (const separator_failure&) {
    // Any ceil(n/3) vertices leave at most 2n/3 behind.
    auto order = by_degree(g, true);
    order.resize(static_cast<std::size_t>((g.n() + 2) / 3));
    SeparatorResult out;
    out.separator = VertexSet::from_unsorted(std::move(order));
    out.components = connected_components(g, out.separator);
    check_separator(g, out);
    return out;
  }
}

std::size_t min_block_size(const Graph& g, double lambda) {
  return static_cast<std::size_t>(std::max(1.0, std::ceil(lambda * g.n() - 1e-9)));
}

// X1 = the m lowest-degree vertices, X2 = the first m vertices of the same
// order outside X1 and its neighbourhood.
std::optional<AnticompleteSplit> low_degree_split(const Graph& g, std::size_t m) {
  const auto order = by_degree(g, false);
  if (order.size() < 2 * m) return std::nullopt;
  Bitset blocked(static_cast<std::size_t>(g.n()));
  std::vector<Vertex> x1(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(m));
  for (Vertex v : x1) {
    blocked.set(static_cast<std::size_t>(v));
    blocked |= g.row(v);
  }
  std::vector<Vertex> x2;
  for (Vertex v : order) {
    if (x2.size() == m) break;
    if (!blocked.test(static_cast<std::size_t>(v))) x2.push_back(v);
  }
  if (x2.size() < m) return std::nullopt;
  return AnticompleteSplit{VertexSet::from_unsorted(std::move(x1)), VertexSet::from_unsorted(std::move(x2))};
}

}  // namespace

QuasiResult string_quasi_eh(const Graph& g, const Poset* witness, const PipelineConfig& config) {
  config.validate();
  const int n = g.n();
  if (n < 2) throw precondition_violation("quasi-EH extraction needs at least two vertices");
  if (witness && witness->size() != n) throw precondition_violation("witness size differs from graph size");

  QuasiResult out;
  auto& cert = out.certificate;
  cert.host_n = n;
  cert.exponent = pipeline_exponent(config);

  const double sparse_limit = config.lambda * static_cast<double>(n) * static_cast<double>(n);
  if (static_cast<double>(g.edge_count()) <= sparse_limit) {
    cert.kind = BlockKind::Empty;
    const std::size_t need = min_block_size(g, config.lambda);
    std::optional<AnticompleteSplit> split;
    out.separator = separator_with_fallback(g, config.separator);
    try {
      split = split_from_separator(g, *out.separator);
      out.branch = PipelineBranch::Separator;
    } catch (const separator_failure&) {
    }
    if (!split || split->x1.size() < need) {
      split = low_degree_split(g, need);
      out.branch = PipelineBranch::LowDegreeSplit;
    }
    if (!split)
      throw separator_failure("no anticomplete pair of blocks of size " + std::to_string(need) + " found");
    cert.blocks = {split->x1, split->x2};
  } else {
    if (!witness)
      throw oracle_required(
          "dense instance without a poset witness: extracting blocks from a general dense string graph needs an "
          "external incomparability oracle");
    out.branch = PipelineBranch::Dense;
    out.extraction = extract_blocks_incomparability(g, *witness, config.dense_alpha(), config.algo);
    cert.kind = out.extraction->certificate.kind;
    cert.blocks = out.extraction->certificate.blocks;
  }

  if (const auto report = validate_certificate(g, cert); !report)
    throw invariant_violation(std::string("pipeline certificate failed validation on the ") + to_string(out.branch) +
                              " branch: " + report.violation);
  return out;
}

HomogeneousResult string_eh(const Graph& g, const Poset* witness, const PipelineConfig& config) {
  config.validate();
  const double c = pipeline_exponent(config);
  const BlockOracle oracle = [&config, c](const OracleInput& in) {
    const Graph& sub = in.graph;
    const std::size_t pairs = static_cast<std::size_t>(sub.n()) * static_cast<std::size_t>(sub.n() - 1) / 2;
    if (sub.edge_count() == 0 || sub.edge_count() == pairs) {
      // Homogeneous sub-instance: n singletons, t = n >= n^c.
      BlockCertificate cert{sub.edge_count() == 0 ? BlockKind::Empty : BlockKind::Complete, {}, c, sub.n()};
      for (Vertex v = 0; v < sub.n(); ++v) cert.blocks.push_back(VertexSet::from_unsorted({v}));
      return cert;
    }
    PipelineConfig local = config;
    local.algo.seed = derive_seed(config.algo.seed, in.call_index);
    return string_quasi_eh(sub, in.witness, local).certificate;
  };
  return homogeneous_from_certificates(g, witness, oracle, c);
}

std::optional<Poset> resolve_witness(const CurveFamily* curves, const Poset* provided, WitnessMode mode) {
  if (provided) return *provided;
  if (mode == WitnessMode::DimensionTwo && curves) return two_line_witness(*curves);
  return std::nullopt;
}

std::string input_digest(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t value) {
    for (int i = 0; i < 8; ++i) {
      h ^= (value >> (8 * i)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  mix(static_cast<std::uint64_t>(g.n()));
  for (const auto& [u, v] : g.edges()) {
    mix(static_cast<std::uint64_t>(u));
    mix(static_cast<std::uint64_t>(v));
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace ehs
