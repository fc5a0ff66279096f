#include "ehs/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ehs/errors.hpp"

namespace ehs {

void check_coordinates(const Point& p) {
  if (p.x > kCoordinateBound || p.x < -kCoordinateBound || p.y > kCoordinateBound || p.y < -kCoordinateBound)
    throw invalid_input("coordinate (" + std::to_string(p.x) + ", " + std::to_string(p.y) + ") exceeds bound " +
                        std::to_string(kCoordinateBound));
}

int orientation(const Point& a, const Point& b, const Point& c) {
  const std::int64_t det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return (det > 0) - (det < 0);
}

namespace {

// c lies in the bounding box of segment ab; with collinearity this means on it.
bool within_box(const Point& a, const Point& b, const Point& c) {
  return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= c.y &&
         c.y <= std::max(a.y, b.y);
}

struct Box {
  std::int64_t x0, y0, x1, y1;

  static Box of(const Polyline& line) {
    Box box{line.front().x, line.front().y, line.front().x, line.front().y};
    for (const auto& p : line) {
      box.x0 = std::min(box.x0, p.x);
      box.y0 = std::min(box.y0, p.y);
      box.x1 = std::max(box.x1, p.x);
      box.y1 = std::max(box.y1, p.y);
    }
    return box;
  }

  bool overlaps(const Box& o) const { return x0 <= o.x1 && o.x0 <= x1 && y0 <= o.y1 && o.y0 <= y1; }
};

bool curves_intersect(const Polyline& p, const Polyline& q) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    for (std::size_t j = 0; j + 1 < q.size(); ++j)
      if (segments_intersect({p[i], p[i + 1]}, {q[j], q[j + 1]})) return true;
  return false;
}

}  // namespace

bool segments_intersect(const Segment& s1, const Segment& s2) {
  for (const auto* p : {&s1.a, &s1.b, &s2.a, &s2.b}) check_coordinates(*p);
  const int o1 = orientation(s1.a, s1.b, s2.a);
  const int o2 = orientation(s1.a, s1.b, s2.b);
  const int o3 = orientation(s2.a, s2.b, s1.a);
  const int o4 = orientation(s2.a, s2.b, s1.b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && within_box(s1.a, s1.b, s2.a)) return true;
  if (o2 == 0 && within_box(s1.a, s1.b, s2.b)) return true;
  if (o3 == 0 && within_box(s2.a, s2.b, s1.a)) return true;
  if (o4 == 0 && within_box(s2.a, s2.b, s1.b)) return true;
  return false;
}

CurveFamily::CurveFamily(std::vector<Polyline> curves) : curves_(std::move(curves)) {
  for (std::size_t i = 0; i < curves_.size(); ++i) {
    if (curves_[i].size() < 2) throw invalid_input("curve " + std::to_string(i) + " has fewer than two points");
    for (const auto& p : curves_[i]) check_coordinates(p);
  }
}

Graph intersection_graph(const CurveFamily& family) {
  const auto n = static_cast<int>(family.size());
  std::vector<Box> boxes;
  boxes.reserve(family.size());
  for (const auto& line : family.curves()) boxes.push_back(Box::of(line));
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (boxes[static_cast<std::size_t>(i)].overlaps(boxes[static_cast<std::size_t>(j)]) &&
          curves_intersect(family[static_cast<std::size_t>(i)], family[static_cast<std::size_t>(j)]))
        edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

PermutationRealization permutation_to_segments(std::span<const int> pi) {
  const auto n = static_cast<int>(pi.size());
  std::vector<int> identity(pi.size());
  std::iota(identity.begin(), identity.end(), 0);
  if (!std::is_permutation(pi.begin(), pi.end(), identity.begin())) throw invalid_input("not a permutation");
  if (n > 0 && static_cast<std::int64_t>(n - 1) * kPermutationSpacing > kCoordinateBound)
    throw invalid_input("permutation too long for the coordinate bound");

  std::vector<Polyline> curves;
  curves.reserve(pi.size());
  for (int i = 0; i < n; ++i)
    curves.push_back({{i * kPermutationSpacing, 0}, {pi[static_cast<std::size_t>(i)] * kPermutationSpacing,
                                                     kPermutationHeight}});
  // Order pi^-1 lists elements by their position along the upper line.
  std::vector<Vertex> upper(pi.size());
  for (int i = 0; i < n; ++i) upper[static_cast<std::size_t>(pi[static_cast<std::size_t>(i)])] = i;
  const std::vector<std::vector<Vertex>> orders{identity, upper};
  return {CurveFamily(std::move(curves)), Poset::from_linear_orders(n, orders)};
}

std::optional<Poset> two_line_witness(const CurveFamily& family) {
  const auto n = static_cast<int>(family.size());
  if (n == 0) return std::nullopt;
  std::vector<std::int64_t> low(family.size()), high(family.size());
  std::int64_t y_low = 0, y_high = 0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& line = family[i];
    if (line.size() != 2) return std::nullopt;
    auto [p, q] = std::pair{line[0], line[1]};
    if (p.y > q.y) std::swap(p, q);
    if (i == 0) {
      y_low = p.y;
      y_high = q.y;
      if (y_low == y_high) return std::nullopt;
    }
    if (p.y != y_low || q.y != y_high) return std::nullopt;
    low[i] = p.x;
    high[i] = q.x;
  }
  auto order_by = [&](const std::vector<std::int64_t>& key) {
    std::vector<Vertex> order(family.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
      return key[static_cast<std::size_t>(a)] < key[static_cast<std::size_t>(b)];
    });
    return order;
  };
  auto distinct = [](std::vector<std::int64_t> key) {
    std::sort(key.begin(), key.end());
    return std::adjacent_find(key.begin(), key.end()) == key.end();
  };
  if (!distinct(low) || !distinct(high)) return std::nullopt;
  const std::vector<std::vector<Vertex>> orders{order_by(low), order_by(high)};
  return Poset::from_linear_orders(n, orders);
}

}  // namespace ehs
