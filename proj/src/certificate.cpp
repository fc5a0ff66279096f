#include "ehs/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ehs {

const char* to_string(BlockKind kind) noexcept { return kind == BlockKind::Complete ? "complete" : "empty"; }

std::size_t BlockCertificate::min_block() const noexcept {
  std::size_t best = 0;
  for (const auto& b : blocks)
    if (best == 0 || b.size() < best) best = b.size();
  return best;
}

CertificateReport validate_certificate(const Graph& g, const BlockCertificate& cert) {
  auto fail = [](std::string msg) { return CertificateReport{false, std::move(msg)}; };
  const int t = cert.t();
  if (t < 2) return fail("t = " + std::to_string(t) + " < 2");
  if (cert.host_n < 1 || cert.host_n > g.n())
    return fail("host_n = " + std::to_string(cert.host_n) + " incompatible with graph of order " + std::to_string(g.n()));
  if (!(cert.exponent > 0.0)) return fail("exponent must be positive");

  std::vector<char> used(static_cast<std::size_t>(g.n()), 0);
  for (int i = 0; i < t; ++i) {
    const auto& block = cert.blocks[static_cast<std::size_t>(i)];
    if (block.empty()) return fail("block " + std::to_string(i) + " is empty");
    if (block.back() >= g.n()) return fail("block " + std::to_string(i) + " indexes outside the graph");
    for (Vertex v : block) {
      if (used[static_cast<std::size_t>(v)]) return fail("disjointness: vertex " + std::to_string(v) + " repeated");
      used[static_cast<std::size_t>(v)] = 1;
    }
  }

  const CrossingStatus want = cert.kind == BlockKind::Complete ? CrossingStatus::Complete : CrossingStatus::Empty;
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j)
      if (crossing_status(g, cert.blocks[static_cast<std::size_t>(i)], cert.blocks[static_cast<std::size_t>(j)]) != want)
        return fail("crossing status between blocks " + std::to_string(i) + " and " + std::to_string(j) + " is not " +
                    to_string(cert.kind));

  for (int i = 0; i < t; ++i) {
    const double size = static_cast<double>(cert.blocks[static_cast<std::size_t>(i)].size());
    const double rhs = std::pow(static_cast<double>(cert.host_n) / size, cert.exponent);
    if (static_cast<double>(t) < rhs * (1.0 - kExponentSlack)) {
      std::ostringstream os;
      os.precision(17);
      os << "exponent inequality at block " << i << ": t = " << t << " < (" << cert.host_n << "/" << size << ")^"
         << cert.exponent << " = " << rhs;
      return fail(os.str());
    }
  }
  return {};
}

}  // namespace ehs
