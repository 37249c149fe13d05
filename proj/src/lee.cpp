#include "khtrans/lee.hpp"

#include "khtrans/elimination.hpp"
#include "khtrans/errors.hpp"

#include <algorithm>
#include <unordered_map>

namespace khtrans {

namespace {

// Is target_{q < k} in the span of the columns d(y), y in C_{-1}, each
// restricted to rows with q < k? Over Q.
bool solvable_below(const KhComplex& c, const std::vector<CubeGenerator>& sources, const Chain& target,
                    int k) {
  std::vector<CubeGenerator> rows;
  std::unordered_map<CubeGenerator, int, CubeGeneratorHash> row_of;
  auto row_index = [&](const CubeGenerator& g) {
    auto [it, inserted] = row_of.emplace(g, static_cast<int>(rows.size()));
    if (inserted)
      rows.push_back(g);
    return it->second;
  };

  SparseBlock block;
  block.cols = static_cast<int>(sources.size());
  for (int col = 0; col < block.cols; ++col) {
    for (const auto& [g, coeff] : c.differential(sources[col])) {
      if (c.quantum_degree(g) < k)
        block.entries.push_back({row_index(g), col, coeff});
    }
  }
  std::vector<std::pair<int, std::int64_t>> rhs_terms;
  for (const auto& [g, coeff] : target) {
    if (c.quantum_degree(g) < k)
      rhs_terms.emplace_back(row_index(g), coeff);
  }
  if (rhs_terms.empty())
    return true;
  block.rows = static_cast<int>(rows.size());
  std::vector<std::int64_t> rhs(rows.size(), 0);
  for (auto [r, coeff] : rhs_terms)
    rhs[r] = coeff;
  return eliminate_integer(block, &rhs).residual_rhs.empty();
}

} // namespace

KhComplex lee_complex(const BraidWord& w, int max_crossings) {
  ComplexOptions options;
  options.variant = Variant::Lee;
  options.ring = CoeffRing::Rationals;
  options.max_crossings = max_crossings;
  return KhComplex(closure_diagram(w), options);
}

Chain lee_canonical_cycle(const KhComplex& lee) {
  if (lee.variant() != Variant::Lee)
    throw PreconditionError("the canonical cycle lives in the Lee complex");
  const Diagram& d = lee.diagram();
  const Vertex o = oriented_vertex(d);
  const Resolution r = lee.resolution(o);
  Chain out({o, 0});
  for (int p = 0; p < d.strands(); ++p) {
    const int circle = r.circle_of(d.arc_id(0, p));
    const std::int64_t plus_sign = p % 2 == 0 ? 1 : -1;
    Chain next;
    for (const auto& [g, coeff] : out) {
      next.add(g, coeff);
      next.add({o, g.labels | (std::uint64_t{1} << circle)}, coeff * plus_sign);
    }
    out = std::move(next);
  }
  return out;
}

std::size_t lee_homology_dimension(const BraidWord& w, int max_crossings) {
  const KhComplex c = lee_complex(w, max_crossings);
  std::vector<std::size_t> ranks;
  for (int i = c.min_degree(); i < c.max_degree(); ++i) {
    const auto from = c.generators(i);
    const auto to = c.generators(i + 1);
    ranks.push_back(eliminate_integer(c.differential_matrix(from, to)).rank);
  }
  std::size_t total = 0;
  for (int i = c.min_degree(); i <= c.max_degree(); ++i) {
    const std::size_t idx = static_cast<std::size_t>(i - c.min_degree());
    std::size_t dim = c.rank(i);
    if (idx < ranks.size())
      dim -= ranks[idx];
    if (idx > 0)
      dim -= ranks[idx - 1];
    total += dim;
  }
  return total;
}

int psi_filtration_level(const BraidWord& w, int max_crossings) {
  const KhComplex c = lee_complex(w, max_crossings);
  const Chain cycle = lee_canonical_cycle(c);
  if (!c.apply_differential(cycle).is_zero())
    throw InternalError("canonical Lee chain is not a cycle");

  const std::vector<CubeGenerator> sources = c.min_degree() < 0 ? c.generators(-1) : std::vector<CubeGenerator>{};
  const auto degrees = c.quantum_degrees(0);
  const int top = degrees.back() + 1;
  if (solvable_below(c, sources, cycle, top))
    throw InternalError("Lee class of psi vanishes");

  const int sl = self_linking(w);
  int level = sl;
  for (int k : degrees) {
    if (k <= sl)
      continue;
    if (!solvable_below(c, sources, cycle, k))
      break;
    level = k;
  }
  return level;
}

int s_invariant(const BraidWord& w, int max_crossings) {
  if (link_components(w) != 1)
    throw PreconditionError("the s-invariant is computed for knots only");
  return psi_filtration_level(w, max_crossings) + 1;
}

} // namespace khtrans
