#include "khtrans/transverse.hpp"

#include "khtrans/errors.hpp"

#include <bit>

namespace khtrans {

namespace {

std::uint32_t insert_bit(std::uint32_t mask, int position, bool value) {
  const std::uint32_t low = mask & ((1u << position) - 1u);
  const std::uint32_t high = position >= 31 ? 0u : (mask >> position) << (position + 1);
  return high | low | (std::uint32_t{value} << position);
}

std::uint32_t remove_bit(std::uint32_t mask, int position) {
  const std::uint32_t low = mask & ((1u << position) - 1u);
  return ((mask >> (position + 1)) << position) | low;
}

std::uint64_t relabel(std::uint64_t labels, const std::vector<int>& circle_map) {
  std::uint64_t out = 0;
  for (std::size_t c = 0; c < circle_map.size(); ++c) {
    if ((labels >> c) & 1u)
      out |= std::uint64_t{1} << circle_map[c];
  }
  return out;
}

void require_standard(const KhComplex& c, const char* what) {
  if (c.variant() != Variant::Standard)
    throw PreconditionError(std::string(what) + " is defined on the standard complex only");
}

// Arc map for a word that gains `inserted` letters at index `position`: the
// segment above `position` keeps its index, later segments shift down.
std::vector<int> insertion_arc_map(const Diagram& from, const Diagram& to, int position, int inserted) {
  std::vector<int> map(from.arc_count());
  for (int t = 0; t < from.segment_count(); ++t) {
    const int shifted = t <= position ? t : t + inserted;
    for (int p = 0; p < from.strands(); ++p)
      map[from.arc_id(t, p)] = to.arc_id(shifted, p);
  }
  return map;
}

Diagram with_letters(const Diagram& d, int position, std::initializer_list<Crossing> letters, int strands) {
  std::vector<Crossing> crossings = d.crossings();
  crossings.insert(crossings.begin() + position, letters);
  return Diagram(strands, std::move(crossings));
}

} // namespace

std::vector<int> transport_circles(const Resolution& from, const Resolution& to,
                                   const std::vector<int>& arc_map) {
  std::vector<int> out(from.circle_count(), -1);
  for (std::size_t arc = 0; arc < arc_map.size(); ++arc) {
    if (arc_map[arc] < 0)
      continue;
    const int source = from.circle_of(static_cast<int>(arc));
    const int target = to.circle_of(arc_map[arc]);
    if (out[source] < 0)
      out[source] = target;
    else if (out[source] != target)
      throw InternalError("circle correspondence is not well defined");
  }
  for (int t : out) {
    if (t < 0)
      throw InternalError("circle without a mapped arc");
  }
  return out;
}

Chain ChainMap::operator()(const Chain& x) const {
  Chain out;
  for (const auto& [g, coeff] : x)
    out += coeff * on_generator_(g);
  return target_->normalized(out);
}

Chain psi_chain(const KhComplex& c) {
  const Vertex o = oriented_vertex(c.diagram());
  std::uint64_t labels = 0;
  if (c.variant() == Variant::Reduced)
    labels = std::uint64_t{1} << c.marked_circle(o);
  return Chain({o, labels});
}

PsiReport psi_report(const BraidWord& w, const ComplexOptions& options) {
  if (options.variant == Variant::Lee)
    throw PreconditionError("psi status is reported for the standard or reduced theory");
  KhComplex c(closure_diagram(w), options);
  const Chain psi = psi_chain(c);
  if (!c.apply_differential(psi).is_zero())
    throw InternalError("psi is not a cycle");
  const CubeGenerator& g = psi.begin()->first;
  PsiReport r;
  r.sl = self_linking(w);
  r.gr = c.homological_degree(g.vertex);
  r.q = c.quantum_degree(g);
  r.variant = options.variant;
  r.cls = cycle_class_info(c, psi);
  return r;
}

Chain stabilization_primitive(const KhComplex& c, int crossing) {
  require_standard(c, "stabilization_primitive");
  const Diagram& d = c.diagram();
  if (crossing < 0 || crossing >= d.crossing_count())
    throw PreconditionError("crossing index out of range");
  if (d.crossings()[crossing].sign > 0)
    throw PreconditionError("stabilization crossing must be negative");
  const Vertex v = oriented_vertex(d).without(crossing);
  if (c.circle_count(v) != d.strands() - 1)
    throw PreconditionError("0-smoothing of the crossing does not merge two oriented strands");
  Chain phi({v, 0});
  const Chain boundary = c.apply_differential(phi);
  const Chain psi = psi_chain(c);
  if (boundary != psi && boundary != -psi)
    throw PreconditionError("d(phi) is not +-psi; crossing is not a stabilization kink");
  return phi;
}

ChainMap positive_resolution_map(const KhComplex& c, int letter) {
  require_standard(c, "positive_resolution_map");
  const Diagram& d = c.diagram();
  if (letter < 0 || letter >= d.crossing_count())
    throw PreconditionError("letter index out of range");
  if (d.crossings()[letter].sign < 0)
    throw PreconditionError("only positive crossings can be resolved this way");

  std::vector<Crossing> crossings = d.crossings();
  crossings.erase(crossings.begin() + letter);
  auto target = std::make_shared<const KhComplex>(Diagram(d.strands(), std::move(crossings)), c.options());
  const Diagram& d2 = target->diagram();
  std::vector<int> arc_map(d.arc_count());
  for (int t = 0; t < d.segment_count(); ++t) {
    const int shifted = t <= letter ? t : t - 1;
    for (int p = 0; p < d.strands(); ++p)
      arc_map[d.arc_id(t, p)] = d2.arc_id(shifted, p);
  }

  const KhComplex* source = &c;
  return ChainMap(target, [source, target, arc_map, letter](const CubeGenerator& g) {
    if (g.vertex.bit(letter))
      return Chain();
    const Vertex v2{remove_bit(g.vertex.bits, letter)};
    auto circles = transport_circles(source->resolution(g.vertex), target->resolution(v2), arc_map);
    return Chain({v2, relabel(g.labels, circles)});
  });
}

ChainMap rho1_chain_map(const KhComplex& c, int position) {
  require_standard(c, "rho1_chain_map");
  const Diagram& d = c.diagram();
  if (position < 0 || position > d.crossing_count())
    throw PreconditionError("kink position out of range");
  const int b = d.strands();
  auto target = std::make_shared<const KhComplex>(with_letters(d, position, {{b, 1}}, b + 1), c.options());
  const Diagram& d2 = target->diagram();
  const auto arc_map = insertion_arc_map(d, d2, position, 1);
  const int kink_arc = d2.arc_id(position, b - 1);
  const int small_arc = d2.arc_id(position, b);

  const KhComplex* source = &c;
  return ChainMap(target, [=](const CubeGenerator& g) {
    const Vertex v2{insert_bit(g.vertex.bits, position, false)};
    const Resolution r2 = target->resolution(v2);
    auto circles = transport_circles(source->resolution(g.vertex), r2, arc_map);
    const std::uint64_t base = relabel(g.labels, circles);
    const int kink = r2.circle_of(kink_arc);
    const int small = r2.circle_of(small_arc);
    const std::uint64_t kink_bit = std::uint64_t{1} << kink;
    Chain out({v2, base});
    if (base & kink_bit)
      out.add({v2, (base & ~kink_bit) | (std::uint64_t{1} << small)}, -1);
    return out;
  });
}

ChainMap rho2_chain_map(const KhComplex& c, int position, int generator, int first_sign) {
  require_standard(c, "rho2_chain_map");
  const Diagram& d = c.diagram();
  const int b = d.strands();
  if (b < 2)
    throw PreconditionError("a Reidemeister II insertion needs at least two strands");
  if (generator < 1 || generator >= b)
    throw PreconditionError("generator index out of range");
  if (position < 0 || position > d.crossing_count())
    throw PreconditionError("insertion position out of range");
  if (first_sign != 1 && first_sign != -1)
    throw PreconditionError("first_sign must be +1 or -1");

  auto target = std::make_shared<const KhComplex>(
      with_letters(d, position, {{generator, first_sign}, {generator, -first_sign}}, b), c.options());
  const Diagram& d2 = target->diagram();
  const auto arc_map = insertion_arc_map(d, d2, position, 2);

  // Both new crossings smoothed parallel: that resolution matches the source.
  const bool first_home = first_sign < 0;
  const bool second_home = first_sign > 0;
  const int pos_bit = first_sign > 0 ? position : position + 1;
  const int neg_bit = first_sign > 0 ? position + 1 : position;

  // The small circle between the pair when both are smoothed horizontally.
  const int small_left = d2.arc_id(position + 1, generator - 1);
  const int small_right = d2.arc_id(position + 1, generator);
  std::vector<int> birth_map(d2.arc_count());
  for (int arc = 0; arc < d2.arc_count(); ++arc)
    birth_map[arc] = (arc == small_left || arc == small_right) ? -1 : arc;

  const KhComplex* source = &c;
  return ChainMap(target, [=](const CubeGenerator& g) {
    const std::uint32_t widened = insert_bit(insert_bit(g.vertex.bits, position, first_home), position + 1,
                                             second_home);
    const Vertex home{widened};
    auto circles = transport_circles(source->resolution(g.vertex), target->resolution(home), arc_map);
    const CubeGenerator lifted{home, relabel(g.labels, circles)};
    Chain out(lifted);

    // iota(d_e(x)): the unsigned edge map along the positive crossing, then
    // a u+ birth on the small circle.
    const Vertex horizontal = home.with(pos_bit);
    const Vertex both_merged = horizontal.without(neg_bit);
    const Resolution merged_res = target->resolution(both_merged);
    const auto to_merged = transport_circles(target->resolution(horizontal), merged_res, birth_map);
    const std::uint64_t small_bit = std::uint64_t{1} << merged_res.circle_of(small_left);
    for (auto e : target->edges_from(home)) {
      if (e.crossing != pos_bit)
        continue;
      e.sign = 1;
      target->apply_edge(e, home, lifted.labels, 1, [&](const CubeGenerator& y, std::int64_t coeff) {
        out.add({both_merged, relabel(y.labels, to_merged) | small_bit}, coeff);
      });
    }

    const int later_ones = std::popcount(g.vertex.bits >> position);
    if (later_ones % 2 != 0)
      out *= -1;
    return out;
  });
}

} // namespace khtrans
