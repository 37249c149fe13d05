#pragma once

#include "khtrans/braid.hpp"
#include "khtrans/complex.hpp"

#include <cstddef>

namespace khtrans {

/// Lee complex over Q for the closure of w.
KhComplex lee_complex(const BraidWord& w, int max_crossings = 20);

/// Canonical Lee cycle of the braid orientation: on the oriented resolution
/// the circle of strand position p carries u- + u+ (p even) or u- - u+
/// (p odd). Its lowest quantum component is psi.
Chain lee_canonical_cycle(const KhComplex& lee);

/// Total dimension over Q of Lee homology.
std::size_t lee_homology_dimension(const BraidWord& w, int max_crossings = 20);

/// Largest k such that the Lee class of psi has a representative whose
/// homogeneous components all have q >= k.
int psi_filtration_level(const BraidWord& w, int max_crossings = 20);

/// s = filtration level + 1. Knots only.
int s_invariant(const BraidWord& w, int max_crossings = 20);

} // namespace khtrans
