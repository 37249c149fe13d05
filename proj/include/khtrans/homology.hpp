#pragma once

#include "khtrans/bigint.hpp"
#include "khtrans/complex.hpp"
#include "khtrans/polynomial.hpp"

#include <map>
#include <utility>
#include <vector>

namespace khtrans {

using DenseMatrix = std::vector<std::vector<BigInt>>;

/// Integer matrix in triplet form; (row, col) pairs are unique.
struct IntMatrix {
  struct Entry {
    int row;
    int col;
    BigInt value;
  };
  int rows = 0;
  int cols = 0;
  std::vector<Entry> entries;

  static IntMatrix from_dense(const DenseMatrix& m, int cols = -1);
  DenseMatrix dense() const;
};

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix identity_matrix(int n);

/// U * A * V = D with D diagonal, d_1 | d_2 | ..., d_i >= 0, and U, V unimodular.
struct SmithForm {
  std::vector<BigInt> diagonal; // length min(rows, cols)
  DenseMatrix U;
  DenseMatrix V;
};

/// Dense Smith normal form, pivoting on the entry of least absolute value.
SmithForm smith_normal_form(const IntMatrix& a);

/// One bigraded piece of homology: Z^free_rank plus cyclic torsion. Over a
/// field only `free_rank` (the dimension) is used.
struct HomologyGroup {
  int free_rank = 0;
  std::vector<BigInt> torsion; // invariant factors, each >= 2, d_1 | d_2 | ...

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// (homological degree i, quantum degree q) -> group. Zero groups are omitted.
class BigradedHomology {
public:
  using Key = std::pair<int, int>;

  void set(int i, int q, HomologyGroup g);
  HomologyGroup at(int i, int q) const;
  const std::map<Key, HomologyGroup>& groups() const noexcept { return groups_; }
  int total_free_rank() const;

  friend bool operator==(const BigradedHomology&, const BigradedHomology&) = default;

private:
  std::map<Key, HomologyGroup> groups_;
};

/// Homology of a Standard or Reduced complex over its coefficient ring.
/// Each (i, q) block is independent; `threads` bounds the workers used.
BigradedHomology bigraded_homology(const KhComplex& c, int threads = 1);

/// Homology at a single bidegree; builds only the three blocks it needs.
HomologyGroup homology_at(const KhComplex& c, int i, int q);

/// Status of the homology class of a cycle.
struct ClassInfo {
  bool is_zero = true;
  bool is_torsion = true;
  /// 0 for infinite order, else the order of the class.
  BigInt order = 1;
  /// Largest m with [x] = m[y] modulo torsion. 0 when the class is torsion,
  /// since every m works then.
  BigInt divisibility = 0;
  bool is_primitive = false;
};

ClassInfo cycle_class_info(const KhComplex& c, const Chain& x);

/// sum (-1)^i rank q^j over the free parts.
LaurentPolynomial graded_euler_characteristic(const BigradedHomology& h);

} // namespace khtrans
