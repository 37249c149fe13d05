#pragma once

#include "khtrans/braid.hpp"
#include "khtrans/cube.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string_view>
#include <vector>

namespace khtrans {

enum class CoeffRing { Integers, Rationals, FieldTwo };
enum class Variant { Standard, Lee, Reduced };

std::string_view to_string(CoeffRing ring);
std::string_view to_string(Variant variant);

struct ComplexOptions {
  Variant variant = Variant::Standard;
  CoeffRing ring = CoeffRing::Integers;
  /// Arc carrying the base point of the reduced theory. Arc 0 is the closure
  /// arc of the first strand at the top of the braid.
  int marked_arc = 0;
  int max_crossings = 20;
};

/// Basis element of the chain group: a cube vertex plus a u+/u- label on each
/// circle of its resolution (bit c set means u+ on circle c).
struct CubeGenerator {
  Vertex vertex;
  std::uint64_t labels = 0;

  bool plus(int circle) const noexcept { return (labels >> circle) & 1u; }

  friend auto operator<=>(const CubeGenerator&, const CubeGenerator&) = default;
};

struct CubeGeneratorHash {
  std::size_t operator()(const CubeGenerator& g) const noexcept {
    std::uint64_t h = g.labels * 0x9E3779B97F4A7C15ull;
    h ^= (std::uint64_t{g.vertex.bits} + 0x7F4A7C15ull) + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

/// Finite integer combination of generators; zero coefficients are never stored.
class Chain {
public:
  using Terms = std::map<CubeGenerator, std::int64_t>;

  Chain() = default;
  explicit Chain(CubeGenerator g, std::int64_t coeff = 1) { add(g, coeff); }

  void add(const CubeGenerator& g, std::int64_t coeff);
  std::int64_t coefficient(const CubeGenerator& g) const;

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Terms::const_iterator begin() const noexcept { return terms_.begin(); }
  Terms::const_iterator end() const noexcept { return terms_.end(); }

  Chain& operator+=(const Chain& other);
  Chain& operator-=(const Chain& other);
  Chain& operator*=(std::int64_t scalar);
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator*(std::int64_t s, Chain a) { return a *= s; }
  Chain operator-() const { return -1 * *this; }

  /// Keeps only the terms accepted by `keep`.
  Chain filtered(const std::function<bool(const CubeGenerator&)>& keep) const;

  friend bool operator==(const Chain&, const Chain&) = default;

private:
  Terms terms_;
};

struct Triplet {
  int row;
  int col;
  std::int64_t value;
};

/// Sparse integer matrix of one differential block; rows index the target
/// generators and columns the source generators.
struct SparseBlock {
  int rows = 0;
  int cols = 0;
  std::vector<Triplet> entries;
};

/// Khovanov complex of a closed-braid diagram. Immutable once built; all
/// queries are const and safe to call concurrently.
class KhComplex {
public:
  explicit KhComplex(Diagram d, ComplexOptions options = {});

  const Diagram& diagram() const noexcept { return diagram_; }
  const ComplexOptions& options() const noexcept { return options_; }
  Variant variant() const noexcept { return options_.variant; }
  CoeffRing ring() const noexcept { return options_.ring; }
  int marked_arc() const noexcept { return options_.marked_arc; }

  int min_degree() const noexcept { return -diagram_.negative_count(); }
  int max_degree() const noexcept { return diagram_.positive_count(); }

  int homological_degree(Vertex v) const noexcept { return v.weight() - diagram_.negative_count(); }
  int quantum_degree(const CubeGenerator& g) const;

  int circle_count(Vertex v) const { return circle_counts_[v.bits]; }
  Resolution resolution(Vertex v) const;
  /// Circle holding the marked arc at `v`.
  int marked_circle(Vertex v) const;

  /// Vertices of homological degree i, ascending by bitmask.
  const std::vector<Vertex>& vertices_in_degree(int i) const;

  /// Whether g is a basis element of this complex (for the reduced variant:
  /// u+ on the marked circle).
  bool contains(const CubeGenerator& g) const;

  std::size_t rank(int i) const;
  std::vector<CubeGenerator> generators(int i) const;
  std::vector<CubeGenerator> generators(int i, int q) const;
  /// Quantum degrees present in homological degree i, ascending.
  std::vector<int> quantum_degrees(int i) const;

  Chain differential(const CubeGenerator& g) const;
  Chain apply_differential(const Chain& x) const;

  /// Matrix of d restricted to span(from) -> span(to). Every image term must
  /// lie in `to`.
  SparseBlock differential_matrix(std::span<const CubeGenerator> from,
                                  std::span<const CubeGenerator> to) const;

  /// Coefficients reduced into the ring (mod 2 over F2).
  Chain normalized(const Chain& x) const;

  struct Edge {
    int crossing;
    int sign;
    EdgeTransition transition;
    int target_marked = -1;
  };
  /// All outgoing cube edges of v with their signs.
  std::vector<Edge> edges_from(Vertex v) const;

  /// Applies one edge map to a labeling at its source vertex.
  void apply_edge(const Edge& e, Vertex v, std::uint64_t labels, std::int64_t coeff,
                  const std::function<void(const CubeGenerator&, std::int64_t)>& emit) const;

private:
  Diagram diagram_;
  ComplexOptions options_;
  std::vector<std::uint8_t> circle_counts_;
  std::vector<std::uint8_t> arc_table_; // empty when too large to cache
  std::vector<std::vector<Vertex>> by_degree_;
};

} // namespace khtrans
