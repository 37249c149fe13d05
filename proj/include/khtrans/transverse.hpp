#pragma once

#include "khtrans/braid.hpp"
#include "khtrans/complex.hpp"
#include "khtrans/homology.hpp"

#include <functional>
#include <memory>

namespace khtrans {

/// The distinguished cycle of a braid closure: u- on every circle of the
/// oriented resolution. In the reduced complex the marked circle carries u+.
Chain psi_chain(const KhComplex& c);

struct PsiReport {
  int sl = 0;
  int gr = 0;
  int q = 0;
  ClassInfo cls;
  Variant variant = Variant::Standard;
};

/// Builds the complex, checks that psi is a cycle and classifies its class.
PsiReport psi_report(const BraidWord& w, const ComplexOptions& options = {});

/// Given a negative crossing, returns phi: u- everywhere on the resolution
/// that agrees with the oriented one except for a 0-smoothing at that
/// crossing. Throws unless d(phi) = +-psi.
Chain stabilization_primitive(const KhComplex& c, int crossing);

/// Linear map between Khovanov complexes, defined on generators.
class ChainMap {
public:
  ChainMap(std::shared_ptr<const KhComplex> target,
           std::function<Chain(const CubeGenerator&)> on_generator)
      : target_(std::move(target)), on_generator_(std::move(on_generator)) {}

  const KhComplex& target() const noexcept { return *target_; }
  std::shared_ptr<const KhComplex> target_ptr() const noexcept { return target_; }
  Chain operator()(const CubeGenerator& g) const { return on_generator_(g); }
  Chain operator()(const Chain& x) const;

private:
  std::shared_ptr<const KhComplex> target_;
  std::function<Chain(const CubeGenerator&)> on_generator_;
};

/// Projection of the cube onto the face where positive crossing `letter` is
/// 0-smoothed, into the complex of the word with that letter deleted.
/// Generators with a 1 at that crossing go to zero.
ChainMap positive_resolution_map(const KhComplex& c, int letter);

/// Inserts a positive kink sigma_b on a new last strand before letter
/// `position` (position = word length appends: a positive stabilization).
/// On the circle through the kink: u- -> u- (x) u-, u+ -> u+ (x) u- - u- (x) u+,
/// the second factor being the new small circle.
ChainMap rho1_chain_map(const KhComplex& c, int position);

/// Inserts sigma_i^e sigma_i^-e before letter `position` (e = +1 or -1).
/// x -> (-1)^k (x + iota(d_e x)), where d_e resolves the positive crossing
/// of the pair, iota births the small circle between the two crossings and
/// k counts the 1-smoothings of x at or after `position`.
ChainMap rho2_chain_map(const KhComplex& c, int position, int generator, int first_sign = 1);

/// For each circle of `from`, the circle of `to` containing the image of its
/// arcs under `arc_map`. Arcs mapped to -1 are ignored. Throws if a circle's
/// arcs land on different target circles.
std::vector<int> transport_circles(const Resolution& from, const Resolution& to,
                                   const std::vector<int>& arc_map);

} // namespace khtrans
