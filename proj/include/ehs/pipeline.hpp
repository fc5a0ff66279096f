#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ehs/certificate.hpp"
#include "ehs/cograph.hpp"
#include "ehs/eh_core.hpp"
#include "ehs/geometry.hpp"
#include "ehs/graph.hpp"
#include "ehs/poset.hpp"
#include "ehs/separator.hpp"

namespace ehs {

enum class WitnessMode {
  Provided,      // use only a witness supplied with the input
  DimensionTwo,  // otherwise rebuild one from a two-line segment family
  Fail           // never rebuild; a missing dense witness is an error
};

const char* to_string(WitnessMode mode) noexcept;

struct PipelineConfig {
  double lambda = 0.01;  // sparse/dense threshold: sparse iff edges <= lambda n^2
  AlgoConfig algo;
  SeparatorStrategy separator = SeparatorStrategy::Exact;  // Greedy above kExactSeparatorLimit
  WitnessMode witness_mode = WitnessMode::DimensionTwo;

  void validate() const;
  /// alpha handed to the dense branch: min(1, 2 lambda).
  double dense_alpha() const noexcept;
};

/// min{c0, 1/log2(1/lambda)} where c0 is the exponent extraction guarantees at
/// alpha = min(1, 2 lambda).
double pipeline_exponent(const PipelineConfig& config) noexcept;

enum class PipelineBranch { Separator, LowDegreeSplit, Dense };

const char* to_string(PipelineBranch branch) noexcept;

struct QuasiResult {
  BlockCertificate certificate;  // validated, exponent = pipeline_exponent
  PipelineBranch branch = PipelineBranch::Dense;
  std::optional<ExtractionResult> extraction;
  std::optional<SeparatorResult> separator;
};

/// Sparse graphs go through a balanced separator, dense ones through block
/// extraction on the incomparability witness. Throws oracle_required on the
/// dense branch without a witness.
QuasiResult string_quasi_eh(const Graph& g, const Poset* witness, const PipelineConfig& config);

/// Cotree recursion driven by string_quasi_eh; sub-instance seeds are
/// derive_seed(config.algo.seed, call index). Edgeless and complete
/// sub-instances are split into singletons directly.
HomogeneousResult string_eh(const Graph& g, const Poset* witness, const PipelineConfig& config);

/// Witness for the dense branch according to `mode`; nullopt when none.
std::optional<Poset> resolve_witness(const CurveFamily* curves, const Poset* provided, WitnessMode mode);

/// FNV-1a over n and the sorted edge list, as 16 hex digits.
std::string input_digest(const Graph& g);

struct RunRecord {
  std::string input_digest;
  std::uint64_t seed = 0;
  PipelineConfig config;
  std::vector<BlockCertificate> certificates;
  std::optional<RamseyResult> ramsey;
  double exponent = 0;
  double wall_ms = 0;
  std::vector<std::string> verdicts;  // "pass" or the first violation, per certificate
};

}  // namespace ehs
