#pragma once

#include "khtrans/bigint.hpp"
#include "khtrans/complex.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace khtrans {

/// Outcome of diagonalizing a sparse matrix A by unimodular row and column
/// operations, U A V = diag(p_1, ..., p_r, 0, ...). When a right-hand side x
/// is supplied, the row operations are applied to it too, giving U x.
struct EliminationResult {
  std::size_t rank = 0;
  /// Diagonal entries with |p| > 1. Not normalized into a divisibility chain.
  std::vector<BigInt> nonunit_pivots;
  /// (U x) at the row of each entry of `nonunit_pivots`.
  std::vector<BigInt> nonunit_pivot_rhs;
  /// Nonzero (U x) coordinates on rows outside the pivots. x lies in the
  /// column span over a field exactly when this is empty.
  std::vector<BigInt> residual_rhs;
};

/// Integer elimination. Pivots prefer units, then the entry of least
/// absolute value. Runs in 64-bit arithmetic and restarts with arbitrary
/// precision if any intermediate overflows.
EliminationResult eliminate_integer(const SparseBlock& a,
                                    const std::vector<std::int64_t>* rhs = nullptr);

/// Elimination over F2; entries and rhs are read mod 2.
EliminationResult eliminate_mod2(const SparseBlock& a, const std::vector<std::int64_t>* rhs = nullptr);

/// Turns nonzero diagonal entries into invariant factors d_1 | d_2 | ...,
/// all positive, units dropped.
std::vector<BigInt> invariant_factors(std::vector<BigInt> diagonal);

} // namespace khtrans
