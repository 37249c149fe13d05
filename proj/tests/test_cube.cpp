#include <doctest.h>

#include "khtrans/cube.hpp"
#include "khtrans/errors.hpp"
#include "support/oracles.hpp"

#include <set>

using namespace khtrans;

TEST_CASE("trefoil resolutions") {
  const Diagram d = closure_diagram(BraidWord(2, {1, 1, 1}));
  CHECK(resolve_vertex(d, {0b000}).circle_count() == 2);
  CHECK(resolve_vertex(d, {0b111}).circle_count() == 3);
  CHECK(resolve_vertex(d, {0b001}).circle_count() == 1);
  CHECK(resolve_vertex(d, {0b011}).circle_count() == 2);
  CHECK(oriented_vertex(d).bits == 0);
}

TEST_CASE("circles are numbered by their smallest arc") {
  const Diagram d = closure_diagram(BraidWord(3, {1, -2, 1}));
  for (std::uint32_t bits = 0; bits < 8; ++bits) {
    const Resolution r = resolve_vertex(d, {bits});
    int next = 0;
    for (int arc = 0; arc < d.arc_count(); ++arc) {
      const int c = r.circle_of(arc);
      CHECK(c <= next);
      if (c == next)
        ++next;
    }
    CHECK(next == r.circle_count());
  }
}

TEST_CASE("oriented resolution has one circle per strand") {
  std::mt19937 rng(11);
  for (int k = 0; k < 100; ++k) {
    const BraidWord w = oracle::random_word(rng, 5, 10);
    const Diagram d = closure_diagram(w);
    const Resolution r = resolve_vertex(d, oriented_vertex(d));
    CHECK(r.circle_count() == w.strands());
    std::set<int> circles;
    for (int p = 0; p < w.strands(); ++p)
      circles.insert(r.circle_of(d.arc_id(0, p)));
    CHECK(static_cast<int>(circles.size()) == w.strands());
  }
}

TEST_CASE("union-find circle counts agree with a walk around the diagram") {
  std::mt19937 rng(3);
  for (int k = 0; k < 60; ++k) {
    const BraidWord w = oracle::random_word(rng, 4, 8);
    const Diagram d = closure_diagram(w);
    for (std::uint32_t bits = 0; bits < (1u << d.crossing_count()); ++bits)
      REQUIRE(resolve_vertex(d, {bits}).circle_count() == oracle::walk_circle_count(d, bits));
  }
}

TEST_CASE("every cube edge merges or splits") {
  std::mt19937 rng(5);
  for (int k = 0; k < 40; ++k) {
    const Diagram d = closure_diagram(oracle::random_word(rng, 4, 7));
    for (std::uint32_t bits = 0; bits < (1u << d.crossing_count()); ++bits) {
      for (int j = 0; j < d.crossing_count(); ++j) {
        if ((bits >> j) & 1u)
          continue;
        const auto t = edge_transition(d, {bits}, j);
        const int before = resolve_vertex(d, {bits}).circle_count();
        const int after = resolve_vertex(d, {bits | (1u << j)}).circle_count();
        CHECK(after - before == (t.kind == EdgeTransition::Kind::Merge ? -1 : 1));
        int carried = 0;
        for (int c : t.carry)
          carried += c >= 0;
        CHECK(carried == before - (t.kind == EdgeTransition::Kind::Merge ? 2 : 1));
      }
    }
  }
}

TEST_CASE("parallel smoothing rule") {
  CHECK(smooths_parallel({1, 1}, false));
  CHECK_FALSE(smooths_parallel({1, 1}, true));
  CHECK(smooths_parallel({1, -1}, true));
  CHECK_FALSE(smooths_parallel({1, -1}, false));
}
