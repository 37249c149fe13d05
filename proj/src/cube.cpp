#include "khtrans/cube.hpp"

#include "khtrans/errors.hpp"

#include <numeric>

namespace khtrans {

namespace {

class DisjointSets {
public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b)
      parent_[std::max(a, b)] = std::min(a, b);
  }

private:
  std::vector<int> parent_;
};

} // namespace

CrossingArcs crossing_arcs(const Diagram& d, int j) {
  const int i = d.crossings()[j].position;
  return {d.arc_id(j, i - 1), d.arc_id(j, i), d.arc_id(j + 1, i - 1), d.arc_id(j + 1, i)};
}

Resolution resolve_vertex(const Diagram& d, Vertex v) {
  const int b = d.strands();
  DisjointSets sets(d.arc_count());
  for (int j = 0; j < d.crossing_count(); ++j) {
    const Crossing& c = d.crossings()[j];
    for (int p = 0; p < b; ++p) {
      if (p != c.position - 1 && p != c.position)
        sets.unite(d.arc_id(j, p), d.arc_id(j + 1, p));
    }
    auto a = crossing_arcs(d, j);
    if (smooths_parallel(c, v.bit(j))) {
      sets.unite(a.top_left, a.bottom_left);
      sets.unite(a.top_right, a.bottom_right);
    } else {
      sets.unite(a.top_left, a.top_right);
      sets.unite(a.bottom_left, a.bottom_right);
    }
  }

  // Visiting arcs in id order numbers circles by their smallest arc.
  std::vector<int> root_to_circle(d.arc_count(), -1);
  std::vector<std::uint16_t> arc_to_circle(d.arc_count());
  int circles = 0;
  for (int arc = 0; arc < d.arc_count(); ++arc) {
    int root = sets.find(arc);
    if (root_to_circle[root] < 0)
      root_to_circle[root] = circles++;
    arc_to_circle[arc] = static_cast<std::uint16_t>(root_to_circle[root]);
  }
  return Resolution(circles, std::move(arc_to_circle));
}

std::array<int, 2> incident_circles(const Diagram& d, const Resolution& r, Vertex v, int j) {
  auto a = crossing_arcs(d, j);
  if (smooths_parallel(d.crossings()[j], v.bit(j)))
    return {r.circle_of(a.top_left), r.circle_of(a.top_right)};
  return {r.circle_of(a.top_left), r.circle_of(a.bottom_left)};
}

EdgeTransition edge_transition(const Diagram& d, Vertex v, int j) {
  if (v.bit(j))
    throw PreconditionError("edge_transition needs bit j of v to be 0");
  return edge_transition(d, resolve_vertex(d, v), resolve_vertex(d, v.with(j)), v, j);
}

EdgeTransition edge_transition(const Diagram& d, const Resolution& from, const Resolution& to,
                               Vertex v, int j) {
  auto [a, b] = incident_circles(d, from, v, j);
  auto [c, e] = incident_circles(d, to, v.with(j), j);

  EdgeTransition t;
  t.carry.assign(from.circle_count(), -1);
  // Untouched circles keep their arcs, so any arc identifies the target.
  std::vector<int> representative(from.circle_count(), -1);
  for (int arc = 0; arc < d.arc_count(); ++arc) {
    if (representative[from.circle_of(arc)] < 0)
      representative[from.circle_of(arc)] = arc;
  }

  if (a != b) {
    if (c != e)
      throw InternalError("cube edge neither merges nor splits");
    t.kind = EdgeTransition::Kind::Merge;
    t.source = {std::min(a, b), std::max(a, b)};
    t.target = {c, -1};
  } else {
    if (c == e)
      throw InternalError("cube edge neither merges nor splits");
    t.kind = EdgeTransition::Kind::Split;
    t.source = {a, -1};
    t.target = {std::min(c, e), std::max(c, e)};
  }
  for (int circle = 0; circle < from.circle_count(); ++circle) {
    if (circle == t.source[0] || circle == t.source[1])
      continue;
    t.carry[circle] = to.circle_of(representative[circle]);
  }
  return t;
}

Vertex oriented_vertex(const Diagram& d) {
  Vertex v;
  for (int j = 0; j < d.crossing_count(); ++j) {
    if (d.crossings()[j].sign < 0)
      v = v.with(j);
  }
  return v;
}

} // namespace khtrans
