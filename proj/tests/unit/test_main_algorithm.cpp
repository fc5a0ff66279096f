#include <doctest.h>

#include <cmath>

#include "ehs/eh_core.hpp"
#include "ehs/errors.hpp"
#include "ehs/rng.hpp"
#include "fixtures.hpp"

using namespace ehs;

using fixture::bipartite;
using fixture::random_bipartite;

namespace {

void check_states(const MainAlgoStats& stats, double eps) {
  const int n = stats.n;
  const int j0 = bucket_levels(n, eps);
  for (const auto& s : stats.states) {
    CHECK(s.a + s.a_left == static_cast<std::size_t>(n));
    CHECK(s.b + s.b_left == static_cast<std::size_t>(n));
    double bound = 0;
    for (int i = s.j + 1; i <= j0; ++i) bound += std::sqrt(static_cast<double>(n)) * std::pow(2.0, i / 2.0);
    CHECK(static_cast<double>(s.a_left) <= 2 * bound + 1e-9);
    CHECK(static_cast<double>(s.b_left) <= 2 * bound + 1e-9);
  }
}

}  // namespace

TEST_CASE("bucket levels") {
  CHECK(bucket_levels(5000, 1.0 / 500) == 4);
  CHECK(bucket_levels(1000, 1.0 / 500) == 2);
  CHECK(bucket_levels(500, 1.0 / 500) == 1);
  CHECK(bucket_levels(4000, 1.0 / 500) == 4);
  CHECK(bucket_levels(100, 1.0 / 500) <= 0);
  CHECK(bucket_levels(1048576, 1.0 / 500) == 12);
}

TEST_CASE("bucket bounds") {
  CHECK(bucket_bound(5000, 2) == doctest::Approx(100.0 * std::sqrt(2.0)));
  CHECK(bucket_bound_sum(5000, 1, 4) == doctest::Approx(5000 * 0.1448528137423857));
  CHECK(bucket_bound_sum(5000, 5, 4) == 0.0);
}

TEST_CASE("exponents") {
  CHECK(main_exponent(0.01) == doctest::Approx(0.06139597610132049).epsilon(1e-12));
  CHECK(comparability_exponent(0.3, 1.0 / 500, 0.01) == doctest::Approx(0.02753880948820773).epsilon(1e-12));
  CHECK(comparability_exponent(1.0, 1.0 / 500, 0.01) == doctest::Approx(0.03045209871076634).epsilon(1e-12));
  CHECK(comparability_exponent(0.3, 1.0 / 5184, 0.01) == doctest::Approx(0.02519751318179404).epsilon(1e-12));
}

TEST_CASE("good probability") {
  CHECK(good_probability(1, 1) == 0.5);
  CHECK(good_probability(3, 2) == doctest::Approx(0.421875));
  for (int k = 1; k <= 10; ++k) CHECK(good_probability((1 << k) - 1, k) >= 1.0 / 6);
}

TEST_CASE("Case-1 draws match the good probability") {
  Rng rng(41);
  for (int k = 1; k <= 6; ++k) {
    const int d = (1 << k) - 1;
    const std::size_t a_size = 4000;
    std::vector<std::vector<int>> nbrs(200);
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      for (int j = 0; j < d; ++j) nbrs[i].push_back(static_cast<int>((i * 17 + static_cast<std::size_t>(j)) % a_size));
    double good = 0;
    const int trials = 400;
    for (int t = 0; t < trials; ++t) {
      const auto draw = draw_case_one(nbrs, a_size, k, rng);
      good += static_cast<double>(draw.good) / static_cast<double>(nbrs.size());
      for (std::size_t i = 0; i < nbrs.size(); ++i)
        if (draw.owner[i] >= 0) CHECK(draw.selected[static_cast<std::size_t>(draw.owner[i])]);
    }
    CHECK(good / trials == doctest::Approx(good_probability(d, k)).epsilon(0.05));
  }
}

TEST_CASE("group_cells") {
  const std::vector<std::size_t> sizes{3, 5, 2, 3, 1};
  const auto groups = group_cells(sizes, 5.0);
  // decreasing: 5 | 3 3 | 2 1 merged into the previous group
  REQUIRE(groups.size() == 2);
  CHECK(groups[0] == std::vector<std::size_t>{1});
  CHECK(groups[1] == std::vector<std::size_t>{0, 3, 2, 4});
  CHECK(group_cells(std::vector<std::size_t>{1, 1}, 5.0).size() == 1);
}

TEST_CASE("two antichains: no heavy bucket") {
  const auto inst = bipartite(5000, std::vector<std::vector<int>>(5000));
  const auto r = main_algorithm(inst.poset, inst.a, inst.b, inst.le, AlgoConfig{});
  CHECK(r.stats.outcome == MainOutcome::NoHeavyBucket);
  REQUIRE(r.certificate.t() == 2);
  CHECK(r.certificate.blocks[0] == inst.b);
  CHECK(r.certificate.blocks[1] == inst.a);
  CHECK(validate_certificate(comparability_graph(inst.poset), r.certificate).pass);
  for (const auto& x : r.certificate.blocks) CHECK(0.01 * std::sqrt(5000.0 / x.size()) < 2);
}

TEST_CASE("epsilon n below one: levels exhausted immediately") {
  const auto inst = bipartite(100, std::vector<std::vector<int>>(100));
  const auto r = main_algorithm(inst.poset, inst.a, inst.b, inst.le, AlgoConfig{});
  CHECK(r.stats.outcome == MainOutcome::LevelsExhausted);
  CHECK(r.certificate.blocks == std::vector<VertexSet>{inst.a, inst.b});
}

TEST_CASE("heavy A vertices force Case 2") {
  // 210 B vertices of degree one, attached to 21 A vertices of degree 10:
  // W = V_1 clears 2 t_1 = 200 and Delta = 210^2 / 5000 = 8.82 makes all 21
  // heavy; W then drops back to V_0 and stays in B.
  const int n = 5000;
  std::vector<std::vector<int>> a_to_b(n);
  for (int y = 0; y < 210; ++y) a_to_b[static_cast<std::size_t>(y / 10)].push_back(y);
  const auto inst = bipartite(n, a_to_b);
  const auto r = main_algorithm(inst.poset, inst.a, inst.b, inst.le, AlgoConfig{});
  CHECK(r.stats.outcome == MainOutcome::LevelsExhausted);
  CHECK(r.stats.sub_steps >= 1);
  CHECK(r.stats.case_one_draws == 0);
  REQUIRE(r.certificate.t() == 2);
  CHECK(r.certificate.blocks[0].size() == 4979);
  CHECK(r.certificate.blocks[1].size() == 5000);
  CHECK(validate_certificate(comparability_graph(inst.poset), r.certificate).pass);
  check_states(r.stats, 1.0 / 500);
}

TEST_CASE("dense top bucket runs Case 1") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto inst = random_bipartite(5000, 10, 10, seed);
    AlgoConfig config;
    config.seed = seed;
    const auto r = main_algorithm(inst.poset, inst.a, inst.b, inst.le, config);
    CHECK(r.stats.outcome == MainOutcome::CaseOne);
    CHECK(r.certificate.t() >= 2);
    CHECK(validate_certificate(comparability_graph(inst.poset), r.certificate).pass);
    for (const auto& x : r.certificate.blocks) CHECK(0.01 * std::sqrt(5000.0 / x.size()) < r.certificate.t());
    check_states(r.stats, 1.0 / 500);
    CHECK(r.stats.invariant_checks >= 1);
  }
}

TEST_CASE("main algorithm is deterministic per seed") {
  const auto inst = random_bipartite(5000, 10, 10, 7);
  AlgoConfig config;
  config.seed = 99;
  const auto r1 = main_algorithm(inst.poset, inst.a, inst.b, inst.le, config);
  const auto r2 = main_algorithm(inst.poset, inst.a, inst.b, inst.le, config);
  CHECK(r1.certificate.blocks == r2.certificate.blocks);
}

TEST_CASE("main algorithm preconditions") {
  const auto inst = random_bipartite(200, 3, 3, 1);
  AlgoConfig config;
  config.epsilon = 0.001;  // eps n = 0.2 < degrees present
  CHECK_THROWS_AS(main_algorithm(inst.poset, inst.a, inst.b, inst.le, config), precondition_violation);
  CHECK_THROWS_AS(main_algorithm(inst.poset, inst.a, inst.a, inst.le, AlgoConfig{}), precondition_violation);
  CHECK_THROWS_AS(main_algorithm(inst.poset, inst.b, inst.a, inst.le, AlgoConfig{}), precondition_violation);
}
