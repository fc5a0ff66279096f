#include <algorithm>
#include <cmath>
#include <string>

#include "ehs/cograph.hpp"
#include "ehs/errors.hpp"
#include "ehs/json_io.hpp"

namespace ehs {

namespace {

constexpr double kPotentialSlack = 1e-12;

std::string repro_json(const Graph& sub, const Poset* witness, const BlockCertificate* cert, double c) {
  nlohmann::json doc;
  doc["graph"] = to_json(sub);
  if (witness) doc["witness"] = to_json(*witness);
  if (cert) doc["certificate"] = to_json(*cert);
  doc["required_exponent"] = c;
  return doc.dump();
}

// Contract: valid in the sub-instance, host_n is the whole sub-instance and
// the exponent is at least the recursion's c.
void check_oracle_output(const Graph& sub, const Poset* witness, const BlockCertificate& cert, double c) {
  std::string why;
  if (cert.host_n != sub.n()) {
    why = "host_n " + std::to_string(cert.host_n) + " differs from sub-instance size " + std::to_string(sub.n());
  } else if (cert.exponent < c) {
    why = "certificate exponent " + std::to_string(cert.exponent) + " below required " + std::to_string(c);
  } else if (const auto report = validate_certificate(sub, cert); !report) {
    why = report.violation;
  }
  if (!why.empty())
    throw oracle_contract_violation("oracle contract violation: " + why, repro_json(sub, witness, &cert, c));
}

}  // namespace

RecursionResult qeh_recursion(const Graph& g, const Poset* witness, const BlockOracle& oracle, double c) {
  if (!(c > 0.0 && c <= 1.0)) throw precondition_violation("recursion exponent must lie in (0, 1]");
  if (g.n() < 1) throw precondition_violation("recursion needs a non-empty graph");
  if (witness && witness->size() != g.n()) throw precondition_violation("witness size differs from graph size");
  if (!oracle) throw precondition_violation("missing block oracle");

  RecursionResult result{Cotree(VertexSet::range(g.n())), {}};
  auto& tree = result.tree;
  auto& trace = result.trace;
  trace.exponent = c;

  double potential = std::pow(static_cast<double>(g.n()), c);
  trace.potentials.push_back(potential);
  std::uint64_t calls = 0;

  for (;;) {
    // Largest open leaf, ties to the smallest first vertex.
    int pick = -1;
    for (int id : tree.leaves()) {
      const auto& set = tree.node(id).vertices;
      if (set.size() < 2) continue;
      if (pick < 0) {
        pick = id;
        continue;
      }
      const auto& best = tree.node(pick).vertices;
      if (set.size() > best.size() || (set.size() == best.size() && set.front() < best.front())) pick = id;
    }
    if (pick < 0) break;

    const VertexSet x = tree.node(pick).vertices;
    const auto sub = induced(g, x);
    std::optional<Poset> sub_witness;
    if (witness) sub_witness = witness->restrict(std::span<const Vertex>(sub.to_host));
    const Poset* sub_witness_ptr = sub_witness ? &*sub_witness : nullptr;

    BlockCertificate cert = oracle(OracleInput{sub.graph, sub_witness_ptr, calls++});
    check_oracle_output(sub.graph, sub_witness_ptr, cert, c);

    std::vector<VertexSet> parts;
    std::size_t covered = 0;
    double gained = 0.0;
    for (const auto& block : cert.blocks) {
      std::vector<Vertex> host;
      host.reserve(block.size());
      for (Vertex v : block) host.push_back(sub.to_host[static_cast<std::size_t>(v)]);
      covered += block.size();
      gained += std::pow(static_cast<double>(block.size()), c);
      parts.push_back(VertexSet::from_unsorted(std::move(host)));
    }
    const double lost = std::pow(static_cast<double>(x.size()), c);
    ++trace.potential_checks;
    if (gained < lost * (1.0 - kPotentialSlack))
      throw invariant_violation("potential decreased when refining a set of size " + std::to_string(x.size()));
    potential += gained - lost;
    trace.potentials.push_back(potential);
    trace.discarded += x.size() - covered;
    ++trace.refinements;

    tree.refine(pick, cert.kind == BlockKind::Complete ? CotreeKind::Join : CotreeKind::Union, parts);
  }

  const auto leaves = static_cast<double>(tree.leaf_count());
  if (leaves < std::pow(static_cast<double>(g.n()), c) * (1.0 - kPotentialSlack))
    throw invariant_violation("final leaf count below n^c");
  return result;
}

namespace {

void verify_homogeneous(const Graph& g, const Cotree& tree, const RamseyResult& r) {
  if (!is_clique(g, r.clique)) throw invariant_violation("cotree clique is not a clique in the host graph");
  if (!is_independent(g, r.independent))
    throw invariant_violation("cotree independent set is not independent in the host graph");
  if (r.clique.size() * r.independent.size() < tree.leaf_count())
    throw invariant_violation("cograph product bound fails");
}

}  // namespace

HomogeneousResult homogeneous_from_certificates(const Graph& g, const Poset* witness, const BlockOracle& oracle,
                                                double c) {
  auto rec = qeh_recursion(g, witness, oracle, c);
  HomogeneousResult out{{cotree_max_clique(rec.tree), cotree_max_independent(rec.tree)},
                        std::move(rec.tree),
                        std::move(rec.trace),
                        std::pow(static_cast<double>(g.n()), c / 2.0)};
  verify_homogeneous(g, out.tree, out.ramsey);
  if (static_cast<double>(out.ramsey.best().size()) < out.bound * (1.0 - kPotentialSlack))
    throw invariant_violation("homogeneous set smaller than n^(c/2)");
  return out;
}

}  // namespace ehs
