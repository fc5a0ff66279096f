#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ehs/graph.hpp"
#include "ehs/poset.hpp"

namespace ehs {

/// |coordinate| bound that keeps every orientation determinant inside int64.
inline constexpr std::int64_t kCoordinateBound = std::int64_t{1} << 20;

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
  bool operator==(const Point&) const = default;
};

struct Segment {
  Point a;
  Point b;
};

/// Throws invalid_input when a coordinate exceeds kCoordinateBound.
void check_coordinates(const Point& p);

/// Sign of the cross product (b - a) x (c - a): +1 left turn, -1 right, 0 collinear.
int orientation(const Point& a, const Point& b, const Point& c);

/// Closed segments share at least one point; touching counts.
bool segments_intersect(const Segment& s1, const Segment& s2);

using Polyline = std::vector<Point>;

/// Integer polylines with at least two points each, coordinates in bound.
class CurveFamily {
 public:
  CurveFamily() = default;
  explicit CurveFamily(std::vector<Polyline> curves);

  std::size_t size() const noexcept { return curves_.size(); }
  const std::vector<Polyline>& curves() const noexcept { return curves_; }
  const Polyline& operator[](std::size_t i) const { return curves_[i]; }

 private:
  std::vector<Polyline> curves_;
};

/// One vertex per curve, adjacent iff the curves share a point.
Graph intersection_graph(const CurveFamily& family);

struct PermutationRealization {
  CurveFamily curves;
  Poset witness;  // i < j iff i < j and pi(i) < pi(j)
};

inline constexpr std::int64_t kPermutationSpacing = 2;
inline constexpr std::int64_t kPermutationHeight = 2;

/// Segment i joins (i*K, 0) to (pi(i)*K, H); the intersection graph is the
/// inversion graph of pi, i.e. the incomparability graph of the witness.
PermutationRealization permutation_to_segments(std::span<const int> pi);

/// Witness for families of single segments spanning two common horizontal
/// lines with pairwise distinct endpoints on each line; nullopt otherwise.
std::optional<Poset> two_line_witness(const CurveFamily& family);

}  // namespace ehs
