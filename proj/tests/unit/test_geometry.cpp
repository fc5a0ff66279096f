#include <doctest.h>

#include <numeric>

#include "ehs/errors.hpp"
#include "ehs/geometry.hpp"
#include "ehs/rng.hpp"
#include "oracles.hpp"

using namespace ehs;

namespace {

Segment seg(std::int64_t ax, std::int64_t ay, std::int64_t bx, std::int64_t by) { return {{ax, ay}, {bx, by}}; }

bool reference(const Segment& s, const Segment& t) {
  return oracle::segments_intersect_rational({s.a.x, s.a.y}, {s.b.x, s.b.y}, {t.a.x, t.a.y}, {t.b.x, t.b.y});
}

Point random_point(Rng& rng, std::int64_t range) {
  return {static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(2 * range + 1))) - range,
          static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(2 * range + 1))) - range};
}

}  // namespace

TEST_CASE("segment intersection examples") {
  CHECK(segments_intersect(seg(0, 0, 2, 2), seg(0, 2, 2, 0)));
  CHECK_FALSE(segments_intersect(seg(0, 0, 1, 0), seg(0, 1, 1, 1)));
  CHECK(segments_intersect(seg(0, 0, 2, 0), seg(2, 0, 3, 5)));
  CHECK(segments_intersect(seg(0, 0, 4, 0), seg(2, 0, 6, 0)));
  CHECK_FALSE(segments_intersect(seg(0, 0, 1, 0), seg(2, 0, 3, 0)));
  CHECK(segments_intersect(seg(0, 0, 4, 4), seg(2, 2, 2, 2)));
  CHECK(segments_intersect(seg(0, 0, 4, 0), seg(2, 0, 2, 3)));
}

TEST_CASE("coordinate bound is enforced") {
  const std::int64_t big = kCoordinateBound + 1;
  CHECK_THROWS_AS(segments_intersect(seg(0, 0, big, 0), seg(0, 1, 1, 1)), invalid_input);
  CHECK_THROWS_AS(CurveFamily({{{0, 0}, {0, -big}}}), invalid_input);
  CHECK_THROWS_AS(CurveFamily({{{0, 0}}}), invalid_input);
  CHECK_NOTHROW(segments_intersect(seg(-kCoordinateBound, -kCoordinateBound, kCoordinateBound, kCoordinateBound),
                                   seg(-kCoordinateBound, kCoordinateBound, kCoordinateBound, -kCoordinateBound)));
}

TEST_CASE("segment intersection agrees with the rational reference and is symmetric") {
  Rng rng(61);
  for (int i = 0; i < 100000; ++i) {
    // Small ranges make collinear and touching configurations common.
    const std::int64_t range = i % 2 == 0 ? 3 : kCoordinateBound;
    const Segment s{random_point(rng, range), random_point(rng, range)};
    const Segment t{random_point(rng, range), random_point(rng, range)};
    const bool got = segments_intersect(s, t);
    REQUIRE(got == reference(s, t));
    REQUIRE(got == segments_intersect(t, s));
  }
}

TEST_CASE("intersection graph examples") {
  const CurveFamily crossing({{{0, 0}, {4, 4}}, {{0, 4}, {4, 0}}, {{2, 0}, {2, 4}}});
  CHECK(intersection_graph(crossing).edge_count() == 3);
  const CurveFamily parallel({{{0, 0}, {4, 0}}, {{0, 1}, {4, 1}}, {{0, 2}, {4, 2}}});
  CHECK(intersection_graph(parallel).edge_count() == 0);
}

TEST_CASE("intersection graph of random polylines equals pairwise enumeration") {
  Rng rng(62);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Polyline> curves(5);
    for (auto& c : curves) {
      const int points = 2 + static_cast<int>(rng.below(4));
      for (int p = 0; p < points; ++p) c.push_back(random_point(rng, 6));
    }
    const CurveFamily family(curves);
    const Graph g = intersection_graph(family);
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) {
        bool hit = false;
        const auto& a = curves[static_cast<std::size_t>(i)];
        const auto& b = curves[static_cast<std::size_t>(j)];
        for (std::size_t x = 0; x + 1 < a.size(); ++x)
          for (std::size_t y = 0; y + 1 < b.size(); ++y) hit = hit || reference({a[x], a[x + 1]}, {b[y], b[y + 1]});
        CHECK(g.adjacent(i, j) == hit);
      }
  }
}

TEST_CASE("permutation realization examples") {
  const auto id = permutation_to_segments(std::vector<int>{0, 1, 2, 3});
  CHECK(intersection_graph(id.curves).edge_count() == 0);
  CHECK(comparability_graph(id.witness).edge_count() == 6);

  const auto rev = permutation_to_segments(std::vector<int>{3, 2, 1, 0});
  CHECK(intersection_graph(rev.curves).edge_count() == 6);
  CHECK(rev.witness.relation_count() == 0);

  const auto swaps = permutation_to_segments(std::vector<int>{1, 0, 3, 2});
  const Graph g = intersection_graph(swaps.curves);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {2, 3}});

  CHECK_THROWS_AS(permutation_to_segments(std::vector<int>{0, 0, 1}), invalid_input);
}

TEST_CASE("permutation realization equals the incomparability graph") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> pi(static_cast<std::size_t>(n));
    std::iota(pi.begin(), pi.end(), 0);
    do {
      const auto r = permutation_to_segments(pi);
      REQUIRE(intersection_graph(r.curves) == incomparability_graph(r.witness));
    } while (std::next_permutation(pi.begin(), pi.end()));
  }
  Rng rng(63);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> pi(1 + rng.below(200));
    std::iota(pi.begin(), pi.end(), 0);
    rng.shuffle(std::span<int>(pi));
    const auto r = permutation_to_segments(pi);
    const Graph g = intersection_graph(r.curves);
    CHECK(g == incomparability_graph(r.witness));
    // Inversion graph, by definition.
    for (std::size_t i = 0; i < pi.size(); ++i)
      for (std::size_t j = i + 1; j < pi.size(); ++j)
        CHECK(g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) == (pi[i] > pi[j]));
  }
}

TEST_CASE("two-line witness") {
  Rng rng(64);
  std::vector<int> pi(40);
  std::iota(pi.begin(), pi.end(), 0);
  rng.shuffle(std::span<int>(pi));
  const auto r = permutation_to_segments(pi);
  const auto w = two_line_witness(r.curves);
  REQUIRE(w);
  CHECK(incomparability_graph(*w) == intersection_graph(r.curves));

  // Endpoints given top-first are accepted.
  const CurveFamily flipped({{{0, 5}, {1, 0}}, {{1, 5}, {0, 0}}});
  const auto wf = two_line_witness(flipped);
  REQUIRE(wf);
  CHECK(wf->relation_count() == 0);

  CHECK_FALSE(two_line_witness(CurveFamily({{{0, 0}, {1, 1}, {2, 2}}})));
  CHECK_FALSE(two_line_witness(CurveFamily({{{0, 0}, {1, 2}}, {{3, 0}, {4, 3}}})));
  CHECK_FALSE(two_line_witness(CurveFamily({{{0, 0}, {1, 2}}, {{0, 0}, {4, 2}}})));
  CHECK_FALSE(two_line_witness(CurveFamily({{{0, 0}, {1, 0}}})));
}
