#include "khtrans/complex.hpp"

#include "khtrans/errors.hpp"
#include "khtrans/frobenius.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>
#include <unordered_map>

namespace khtrans {

std::string_view to_string(CoeffRing ring) {
  switch (ring) {
  case CoeffRing::Integers: return "z";
  case CoeffRing::Rationals: return "q";
  case CoeffRing::FieldTwo: return "f2";
  }
  return "?";
}

std::string_view to_string(Variant variant) {
  switch (variant) {
  case Variant::Standard: return "standard";
  case Variant::Lee: return "lee";
  case Variant::Reduced: return "reduced";
  }
  return "?";
}

// ---------------------------------------------------------------- Chain

void Chain::add(const CubeGenerator& g, std::int64_t coeff) {
  if (coeff == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(g, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0)
      terms_.erase(it);
  }
}

std::int64_t Chain::coefficient(const CubeGenerator& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? 0 : it->second;
}

Chain& Chain::operator+=(const Chain& other) {
  for (const auto& [g, c] : other.terms_)
    add(g, c);
  return *this;
}

Chain& Chain::operator-=(const Chain& other) {
  for (const auto& [g, c] : other.terms_)
    add(g, -c);
  return *this;
}

Chain& Chain::operator*=(std::int64_t scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [g, c] : terms_)
    c *= scalar;
  return *this;
}

Chain Chain::filtered(const std::function<bool(const CubeGenerator&)>& keep) const {
  Chain out;
  for (const auto& [g, c] : terms_) {
    if (keep(g))
      out.terms_.emplace(g, c);
  }
  return out;
}

// ------------------------------------------------------------ KhComplex

namespace {

constexpr std::size_t kArcTableBudget = std::size_t{1} << 26;

// Masks over `width` bits with exactly `ones` bits set, ascending.
template <class F>
void for_each_mask(int width, int ones, F&& f) {
  if (ones < 0 || ones > width)
    return;
  if (ones == 0) {
    f(std::uint64_t{0});
    return;
  }
  if (ones == 64) {
    f(~std::uint64_t{0});
    return;
  }
  // Gosper's hack: next larger mask with the same popcount.
  std::uint64_t m = (std::uint64_t{1} << ones) - 1;
  while (true) {
    f(m);
    const std::uint64_t c = m & (~m + 1);
    const std::uint64_t r = m + c;
    if (r == 0)
      break;
    m = (((r ^ m) >> 2) / c) | r;
    if (width < 64 && (m >> width) != 0)
      break;
  }
}

} // namespace

KhComplex::KhComplex(Diagram d, ComplexOptions options)
    : diagram_(std::move(d)), options_(options) {
  const int n = diagram_.crossing_count();
  if (n > options_.max_crossings || n > kMaxCubeDimension)
    throw ResourceLimitError(std::to_string(n) + " crossings exceed the limit of " +
                             std::to_string(std::min(options_.max_crossings, kMaxCubeDimension)));
  if (options_.variant == Variant::Lee && options_.ring != CoeffRing::Rationals)
    throw PreconditionError("the Lee complex is only defined over the rationals");
  if (options_.variant == Variant::Reduced &&
      (options_.marked_arc < 0 || options_.marked_arc >= diagram_.arc_count()))
    throw PreconditionError("marked arc " + std::to_string(options_.marked_arc) +
                            " does not exist in the diagram");

  const std::size_t vertex_count = std::size_t{1} << n;
  const std::size_t arcs = static_cast<std::size_t>(diagram_.arc_count());
  circle_counts_.resize(vertex_count);
  const bool cache_arcs = vertex_count * arcs <= kArcTableBudget;
  if (cache_arcs)
    arc_table_.resize(vertex_count * arcs);
  by_degree_.assign(n + 1, {});

  for (std::size_t bits = 0; bits < vertex_count; ++bits) {
    Vertex v{static_cast<std::uint32_t>(bits)};
    Resolution r = resolve_vertex(diagram_, v);
    if (r.circle_count() > 64)
      throw ResourceLimitError("resolution with more than 64 circles");
    circle_counts_[bits] = static_cast<std::uint8_t>(r.circle_count());
    if (cache_arcs) {
      std::copy(r.arc_to_circle().begin(), r.arc_to_circle().end(), arc_table_.begin() + bits * arcs);
    }
    by_degree_[v.weight()].push_back(v);
  }
}

int KhComplex::quantum_degree(const CubeGenerator& g) const {
  const int k = circle_count(g.vertex);
  const int p = 2 * std::popcount(g.labels) - k;
  return p + homological_degree(g.vertex) + diagram_.positive_count() - diagram_.negative_count();
}

Resolution KhComplex::resolution(Vertex v) const {
  if (arc_table_.empty())
    return resolve_vertex(diagram_, v);
  const std::size_t arcs = static_cast<std::size_t>(diagram_.arc_count());
  auto first = arc_table_.begin() + v.bits * arcs;
  return Resolution(circle_counts_[v.bits], std::vector<std::uint16_t>(first, first + arcs));
}

int KhComplex::marked_circle(Vertex v) const {
  if (!arc_table_.empty())
    return arc_table_[v.bits * diagram_.arc_count() + options_.marked_arc];
  return resolve_vertex(diagram_, v).circle_of(options_.marked_arc);
}

const std::vector<Vertex>& KhComplex::vertices_in_degree(int i) const {
  static const std::vector<Vertex> empty;
  const int w = i + diagram_.negative_count();
  if (w < 0 || w >= static_cast<int>(by_degree_.size()))
    return empty;
  return by_degree_[w];
}

bool KhComplex::contains(const CubeGenerator& g) const {
  const int n = diagram_.crossing_count();
  if (n < 32 && (g.vertex.bits >> n) != 0)
    return false;
  const int k = circle_count(g.vertex);
  if (k < 64 && (g.labels >> k) != 0)
    return false;
  if (options_.variant == Variant::Reduced)
    return g.plus(marked_circle(g.vertex));
  return true;
}

std::size_t KhComplex::rank(int i) const {
  std::size_t total = 0;
  const int shift = options_.variant == Variant::Reduced ? 1 : 0;
  for (Vertex v : vertices_in_degree(i))
    total += std::size_t{1} << (circle_count(v) - shift);
  return total;
}

std::vector<CubeGenerator> KhComplex::generators(int i) const {
  std::vector<CubeGenerator> out;
  out.reserve(rank(i));
  for (Vertex v : vertices_in_degree(i)) {
    const int k = circle_count(v);
    const int marked = options_.variant == Variant::Reduced ? marked_circle(v) : -1;
    for (std::uint64_t labels = 0; labels < (std::uint64_t{1} << k); ++labels) {
      if (marked >= 0 && !((labels >> marked) & 1u))
        continue;
      out.push_back({v, labels});
    }
  }
  return out;
}

std::vector<CubeGenerator> KhComplex::generators(int i, int q) const {
  std::vector<CubeGenerator> out;
  const int p = q - i - diagram_.positive_count() + diagram_.negative_count();
  for (Vertex v : vertices_in_degree(i)) {
    const int k = circle_count(v);
    if ((k + p) % 2 != 0)
      continue;
    const int plus = (k + p) / 2;
    const int marked = options_.variant == Variant::Reduced ? marked_circle(v) : -1;
    for_each_mask(k, plus, [&](std::uint64_t labels) {
      if (marked < 0 || ((labels >> marked) & 1u))
        out.push_back({v, labels});
    });
  }
  return out;
}

std::vector<int> KhComplex::quantum_degrees(int i) const {
  std::set<int> qs;
  const int shift = i + diagram_.positive_count() - diagram_.negative_count();
  const int lowest_plus = options_.variant == Variant::Reduced ? 1 : 0;
  for (Vertex v : vertices_in_degree(i)) {
    const int k = circle_count(v);
    for (int plus = lowest_plus; plus <= k; ++plus)
      qs.insert(2 * plus - k + shift);
  }
  return {qs.begin(), qs.end()};
}

std::vector<KhComplex::Edge> KhComplex::edges_from(Vertex v) const {
  std::vector<Edge> edges;
  const int n = diagram_.crossing_count();
  Resolution from = resolution(v);
  for (int j = 0; j < n; ++j) {
    if (v.bit(j))
      continue;
    Vertex w = v.with(j);
    Resolution to = resolution(w);
    const int below = std::popcount(v.bits & ((1u << j) - 1u));
    Edge e{j, below % 2 == 0 ? 1 : -1, edge_transition(diagram_, from, to, v, j), -1};
    if (options_.variant == Variant::Reduced)
      e.target_marked = to.circle_of(options_.marked_arc);
    edges.push_back(std::move(e));
  }
  return edges;
}

void KhComplex::apply_edge(const Edge& e, Vertex v, std::uint64_t labels, std::int64_t coeff,
                           const std::function<void(const CubeGenerator&, std::int64_t)>& emit) const {
  const auto& t = e.transition;
  const bool lee = options_.variant == Variant::Lee;
  std::uint64_t base = 0;
  for (std::size_t c = 0; c < t.carry.size(); ++c) {
    if (t.carry[c] >= 0 && ((labels >> c) & 1u))
      base |= std::uint64_t{1} << t.carry[c];
  }
  const Vertex w = v.with(e.crossing);
  const std::int64_t signed_coeff = coeff * e.sign;
  auto push = [&](std::uint64_t target_labels) {
    if (e.target_marked >= 0 && !((target_labels >> e.target_marked) & 1u))
      return;
    emit({w, target_labels}, signed_coeff);
  };

  if (t.kind == EdgeTransition::Kind::Merge) {
    const bool x = (labels >> t.source[0]) & 1u;
    const bool y = (labels >> t.source[1]) & 1u;
    if (auto r = frobenius::multiply(x, y, lee))
      push(base | (std::uint64_t{*r} << t.target[0]));
  } else {
    const bool x = (labels >> t.source[0]) & 1u;
    auto cop = frobenius::comultiply(x, lee);
    for (int s = 0; s < cop.count; ++s) {
      const auto [first, second] = cop.terms[s];
      push(base | (std::uint64_t{first} << t.target[0]) | (std::uint64_t{second} << t.target[1]));
    }
  }
}

Chain KhComplex::differential(const CubeGenerator& g) const {
  return apply_differential(Chain(g));
}

Chain KhComplex::apply_differential(const Chain& x) const {
  Chain out;
  std::vector<Edge> edges;
  Vertex current{~0u};
  auto emit = [&](const CubeGenerator& g, std::int64_t c) { out.add(g, c); };
  for (const auto& [g, coeff] : x) {
    if (!contains(g))
      throw PreconditionError("chain has a generator outside the complex");
    if (g.vertex != current) {
      current = g.vertex;
      edges = edges_from(current);
    }
    for (const auto& e : edges)
      apply_edge(e, g.vertex, g.labels, coeff, emit);
  }
  return normalized(out);
}

SparseBlock KhComplex::differential_matrix(std::span<const CubeGenerator> from,
                                           std::span<const CubeGenerator> to) const {
  SparseBlock block;
  block.rows = static_cast<int>(to.size());
  block.cols = static_cast<int>(from.size());
  std::unordered_map<CubeGenerator, int, CubeGeneratorHash> row_of;
  row_of.reserve(to.size());
  for (std::size_t r = 0; r < to.size(); ++r)
    row_of.emplace(to[r], static_cast<int>(r));

  std::vector<Edge> edges;
  Vertex current{~0u};
  int col = 0;
  std::map<int, std::int64_t> column;
  auto emit = [&](const CubeGenerator& g, std::int64_t c) {
    auto it = row_of.find(g);
    if (it == row_of.end())
      throw InternalError("differential leaves the requested target block");
    column[it->second] += c;
  };
  for (; col < block.cols; ++col) {
    const CubeGenerator& g = from[col];
    if (g.vertex != current) {
      current = g.vertex;
      edges = edges_from(current);
    }
    column.clear();
    for (const auto& e : edges)
      apply_edge(e, g.vertex, g.labels, 1, emit);
    for (const auto& [row, value] : column) {
      std::int64_t v = options_.ring == CoeffRing::FieldTwo ? (value & 1) : value;
      if (v != 0)
        block.entries.push_back({row, col, v});
    }
  }
  return block;
}

Chain KhComplex::normalized(const Chain& x) const {
  if (options_.ring != CoeffRing::FieldTwo)
    return x;
  Chain out;
  for (const auto& [g, c] : x) {
    if (c % 2 != 0)
      out.add(g, 1);
  }
  return out;
}

} // namespace khtrans
