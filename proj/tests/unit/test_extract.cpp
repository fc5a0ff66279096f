#include <doctest.h>

#include "ehs/eh_core.hpp"
#include "ehs/errors.hpp"

using namespace ehs;

namespace {

Poset chain(int n) {
  std::vector<Edge> pairs;
  for (int v = 0; v + 1 < n; ++v) pairs.emplace_back(v, v + 1);
  return Poset::from_relations(n, pairs);
}

double comparability_density(const Poset& p) {
  const double n = p.size();
  return static_cast<double>(p.relation_count()) / (n * (n - 1) / 2);
}

}  // namespace

TEST_CASE("config validation") {
  AlgoConfig c;
  CHECK_NOTHROW(c.validate());
  c.epsilon = 0;
  CHECK_THROWS_AS(c.validate(), precondition_violation);
  c = AlgoConfig{};
  c.retry_cap = 0;
  CHECK_THROWS_AS(c.validate(), precondition_violation);
  c = AlgoConfig{};
  c.delta = 1;
  CHECK_THROWS_AS(c.validate(), precondition_violation);
}

TEST_CASE("guaranteed exponent covers the fallback") {
  AlgoConfig c;
  CHECK(guaranteed_exponent(0.3, c) == doctest::Approx(0.02519751318179404).epsilon(1e-12));
  c.allow_safe_fallback = false;
  CHECK(guaranteed_exponent(0.3, c) == doctest::Approx(0.02753880948820773).epsilon(1e-12));
}

TEST_CASE("antichain n=10, alpha=1") {
  const Poset p = Poset::from_relations(10, std::vector<Edge>{});
  const auto r = extract_blocks_comparability(p, 1.0, AlgoConfig{});
  CHECK(r.route == ExtractionRoute::Antichain);
  CHECK(r.certificate.t() == 10);
  CHECK(validate_certificate(comparability_graph(p), r.certificate).pass);
}

TEST_CASE("two disjoint chains give blocks from different chains") {
  std::vector<Edge> pairs;
  for (int c = 0; c < 2; ++c)
    for (int i = 0; i + 1 < 50; ++i) pairs.emplace_back(c * 50 + i, c * 50 + i + 1);
  const Poset p = Poset::from_relations(100, pairs);
  const auto r = extract_blocks_comparability(p, 0.5, AlgoConfig{});
  REQUIRE(r.certificate.t() == 2);
  const auto& x = r.certificate.blocks;
  const bool first_low = x[0].back() < 50 && x[1].front() >= 50;
  const bool first_high = x[1].back() < 50 && x[0].front() >= 50;
  CHECK((first_low || first_high));
  CHECK(validate_certificate(comparability_graph(p), r.certificate).pass);
}

TEST_CASE("random dimension-3 posets with measured slack") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Poset p = random_poset_dimension_k(500, 3, seed);
    const double alpha = 0.99 * (1.0 - comparability_density(p));
    AlgoConfig config;
    config.seed = seed;
    const auto r = extract_blocks_comparability(p, alpha, config);
    CHECK(validate_certificate(comparability_graph(p), r.certificate).pass);
    CHECK(r.certificate.exponent == doctest::Approx(comparability_exponent(alpha, r.epsilon_used, 0.01)));
  }
}

TEST_CASE("incomparability extraction") {
  SUBCASE("chain has an empty incomparability graph") {
    const Poset p = chain(10);
    CHECK_THROWS_AS(extract_blocks_incomparability(incomparability_graph(p), p, 0.1, AlgoConfig{}),
                    precondition_violation);
  }
  SUBCASE("antichain gives K10 with complete blocks") {
    const Poset p = Poset::from_relations(10, std::vector<Edge>{});
    const Graph g = incomparability_graph(p);
    const auto r = extract_blocks_incomparability(g, p, 1.0, AlgoConfig{});
    CHECK(r.certificate.kind == BlockKind::Complete);
    CHECK(validate_certificate(g, r.certificate).pass);
  }
  SUBCASE("dimension-2, n=1000, alpha=0.3") {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const Poset p = random_poset_dimension_k(1000, 2, seed);
      const Graph g = incomparability_graph(p);
      const auto r = extract_blocks_incomparability(g, p, 0.3, AlgoConfig{});
      CHECK(r.certificate.kind == BlockKind::Complete);
      CHECK(validate_certificate(g, r.certificate).pass);
    }
  }
  SUBCASE("witness mismatch") {
    const Poset p = Poset::from_relations(4, std::vector<Edge>{});
    const Graph g = build_graph(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK_THROWS_AS(extract_blocks_incomparability(g, p, 0.5, AlgoConfig{}), precondition_violation);
  }
}

TEST_CASE("safe epsilon start") {
  AlgoConfig config;
  config.start_with_safe_epsilon = true;
  const Poset p = random_poset_dimension_k(800, 2, 4);
  const auto r = extract_blocks_comparability(p, 0.3, config);
  CHECK(r.epsilon_used == config.epsilon_safe);
  CHECK(validate_certificate(comparability_graph(p), r.certificate).pass);
}

TEST_CASE("extraction preconditions") {
  CHECK_THROWS_AS(extract_blocks_comparability(Poset::from_relations(1, std::vector<Edge>{}), 0.5, AlgoConfig{}),
                  precondition_violation);
  CHECK_THROWS_AS(extract_blocks_comparability(chain(10), 0.5, AlgoConfig{}), precondition_violation);
  CHECK_THROWS_AS(extract_blocks_comparability(chain(10), 0.0, AlgoConfig{}), precondition_violation);
}
