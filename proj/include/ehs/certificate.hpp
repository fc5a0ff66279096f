#pragma once

#include <string>
#include <vector>

#include "ehs/graph.hpp"

namespace ehs {

enum class BlockKind { Complete, Empty };

const char* to_string(BlockKind kind) noexcept;

/// t >= 2 disjoint blocks that are pairwise complete or pairwise anticomplete
/// in a graph on `host_n` vertices, with t >= (host_n / |X_i|)^exponent.
struct BlockCertificate {
  BlockKind kind = BlockKind::Empty;
  std::vector<VertexSet> blocks;
  double exponent = 0.0;
  int host_n = 0;

  int t() const noexcept { return static_cast<int>(blocks.size()); }
  std::size_t min_block() const noexcept;
};

struct CertificateReport {
  bool pass = true;
  std::string violation;  // first violated condition, empty on pass

  explicit operator bool() const noexcept { return pass; }
};

/// Relative slack allowed in t >= (host_n/|X_i|)^c to absorb pow() rounding.
inline constexpr double kExponentSlack = 1e-12;

/// Report-only check of disjointness, pairwise crossing status and the
/// exponent inequality. Blocks index into `g`; host_n must not exceed g.n().
CertificateReport validate_certificate(const Graph& g, const BlockCertificate& cert);

}  // namespace ehs
