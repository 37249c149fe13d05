#pragma once

#include "khtrans/braid.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

namespace khtrans {

/// Vertex of the resolution cube; bit j is the smoothing chosen at crossing j.
struct Vertex {
  std::uint32_t bits = 0;

  bool bit(int j) const noexcept { return (bits >> j) & 1u; }
  Vertex with(int j) const noexcept { return {bits | (1u << j)}; }
  Vertex without(int j) const noexcept { return {bits & ~(1u << j)}; }
  int weight() const noexcept { return std::popcount(bits); }

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// Most crossings a vertex bitmask can address.
inline constexpr int kMaxCubeDimension = 30;

/// Circles of one complete resolution. Circle ids are ordered by the
/// smallest arc id they contain.
class Resolution {
public:
  Resolution() = default;
  Resolution(int circle_count, std::vector<std::uint16_t> arc_to_circle)
      : circle_count_(circle_count), arc_to_circle_(std::move(arc_to_circle)) {}

  int circle_count() const noexcept { return circle_count_; }
  int circle_of(int arc) const noexcept { return arc_to_circle_[arc]; }
  const std::vector<std::uint16_t>& arc_to_circle() const noexcept { return arc_to_circle_; }

  friend bool operator==(const Resolution&, const Resolution&) = default;

private:
  int circle_count_ = 0;
  std::vector<std::uint16_t> arc_to_circle_;
};

/// The four arcs meeting at a crossing.
struct CrossingArcs {
  int top_left, top_right, bottom_left, bottom_right;
};

CrossingArcs crossing_arcs(const Diagram& d, int j);

/// True when crossing j, smoothed by `bit`, joins its arcs vertically
/// (strands pass straight through). Positive crossings do this on 0, negative
/// crossings on 1.
inline bool smooths_parallel(const Crossing& c, bool bit) noexcept { return (c.sign > 0) == !bit; }

Resolution resolve_vertex(const Diagram& d, Vertex v);

/// The two circles of `r` that touch crossing j. Equal when both local
/// pairs of the smoothing lie on one circle.
std::array<int, 2> incident_circles(const Diagram& d, const Resolution& r, Vertex v, int j);

/// How the circles change along the cube edge v -> v + e_j.
struct EdgeTransition {
  enum class Kind { Merge, Split };
  Kind kind;
  /// Merge: the two source circles (first < second). Split: source circle in
  /// `source[0]`, `source[1]` unused (-1).
  std::array<int, 2> source;
  /// Merge: the merged circle in `target[0]`, `target[1]` unused (-1).
  /// Split: the two new circles (first < second).
  std::array<int, 2> target;
  /// Target id of every source circle not consumed by the move, -1 otherwise.
  std::vector<int> carry;
};

EdgeTransition edge_transition(const Diagram& d, Vertex v, int j);
EdgeTransition edge_transition(const Diagram& d, const Resolution& from, const Resolution& to,
                               Vertex v, int j);

/// 0 at positive crossings, 1 at negative ones: the b parallel strands.
Vertex oriented_vertex(const Diagram& d);

} // namespace khtrans
