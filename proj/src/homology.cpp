#include "khtrans/homology.hpp"

#include "khtrans/elimination.hpp"
#include "khtrans/errors.hpp"
#include "khtrans/parallel.hpp"

#include <algorithm>
#include <mutex>
#include <set>

namespace khtrans {

// ------------------------------------------------------------- matrices

IntMatrix IntMatrix::from_dense(const DenseMatrix& m, int cols) {
  IntMatrix out;
  out.rows = static_cast<int>(m.size());
  out.cols = cols >= 0 ? cols : (m.empty() ? 0 : static_cast<int>(m[0].size()));
  for (int r = 0; r < out.rows; ++r)
    for (int c = 0; c < out.cols; ++c)
      if (!m[r][c].is_zero())
        out.entries.push_back({r, c, m[r][c]});
  return out;
}

DenseMatrix IntMatrix::dense() const {
  DenseMatrix m(rows, std::vector<BigInt>(cols));
  for (const auto& e : entries)
    m[e.row][e.col] = e.value;
  return m;
}

DenseMatrix identity_matrix(int n) {
  DenseMatrix m(n, std::vector<BigInt>(n));
  for (int i = 0; i < n; ++i)
    m[i][i] = 1;
  return m;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t inner = b.size();
  const std::size_t m = b.empty() ? 0 : b[0].size();
  DenseMatrix out(n, std::vector<BigInt>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero())
        continue;
      for (std::size_t j = 0; j < m; ++j)
        out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

namespace {

class DenseSmith {
public:
  explicit DenseSmith(DenseMatrix a, int rows, int cols)
      : a_(std::move(a)), rows_(rows), cols_(cols), u_(identity_matrix(rows)), v_(identity_matrix(cols)) {}

  SmithForm run() {
    const int steps = std::min(rows_, cols_);
    for (int t = 0; t < steps; ++t) {
      if (!reduce_step(t))
        break;
    }
    SmithForm out;
    out.diagonal.resize(steps);
    for (int t = 0; t < steps; ++t)
      out.diagonal[t] = a_[t][t];
    out.U = std::move(u_);
    out.V = std::move(v_);
    return out;
  }

private:
  DenseMatrix a_;
  int rows_, cols_;
  DenseMatrix u_, v_;

  void swap_rows(int i, int j) {
    std::swap(a_[i], a_[j]);
    std::swap(u_[i], u_[j]);
  }
  void swap_cols(int i, int j) {
    for (auto& row : a_)
      std::swap(row[i], row[j]);
    for (auto& row : v_)
      std::swap(row[i], row[j]);
  }
  // row i += f * row j
  void add_row(int i, int j, const BigInt& f) {
    for (int c = 0; c < cols_; ++c)
      a_[i][c] += f * a_[j][c];
    for (int c = 0; c < rows_; ++c)
      u_[i][c] += f * u_[j][c];
  }
  // col i += f * col j
  void add_col(int i, int j, const BigInt& f) {
    for (int r = 0; r < rows_; ++r)
      a_[r][i] += f * a_[r][j];
    for (int r = 0; r < cols_; ++r)
      v_[r][i] += f * v_[r][j];
  }
  void negate_row(int i) {
    for (auto& x : a_[i])
      x = -x;
    for (auto& x : u_[i])
      x = -x;
  }

  // Moves the smallest nonzero entry of the trailing submatrix to (t, t) and
  // diagonalizes around it. Returns false when the submatrix is zero.
  bool reduce_step(int t) {
    while (true) {
      int br = -1, bc = -1;
      for (int r = t; r < rows_; ++r)
        for (int c = t; c < cols_; ++c)
          if (!a_[r][c].is_zero() && (br < 0 || abs(a_[r][c]) < abs(a_[br][bc]))) {
            br = r;
            bc = c;
          }
      if (br < 0)
        return false;
      swap_rows(t, br);
      swap_cols(t, bc);

      bool clean = true;
      for (int r = t + 1; r < rows_; ++r) {
        if (a_[r][t].is_zero())
          continue;
        add_row(r, t, -(a_[r][t] / a_[t][t]));
        if (!a_[r][t].is_zero())
          clean = false;
      }
      for (int c = t + 1; c < cols_; ++c) {
        if (a_[t][c].is_zero())
          continue;
        add_col(c, t, -(a_[t][c] / a_[t][t]));
        if (!a_[t][c].is_zero())
          clean = false;
      }
      if (!clean)
        continue; // a smaller remainder now exists; pivot on it
      int bad = -1;
      for (int r = t + 1; r < rows_ && bad < 0; ++r)
        for (int c = t + 1; c < cols_; ++c)
          if (a_[r][c] % a_[t][t] != 0) {
            bad = r;
            break;
          }
      if (bad >= 0) {
        add_row(t, bad, 1);
        continue;
      }
      if (a_[t][t] < 0)
        negate_row(t);
      return true;
    }
  }
};

} // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  DenseSmith s(a.dense(), a.rows, a.cols);
  return s.run();
}

// ------------------------------------------------------------- homology

void BigradedHomology::set(int i, int q, HomologyGroup g) {
  if (g.is_zero())
    groups_.erase({i, q});
  else
    groups_[{i, q}] = std::move(g);
}

HomologyGroup BigradedHomology::at(int i, int q) const {
  auto it = groups_.find({i, q});
  return it == groups_.end() ? HomologyGroup{} : it->second;
}

int BigradedHomology::total_free_rank() const {
  int total = 0;
  for (const auto& [key, g] : groups_)
    total += g.free_rank;
  return total;
}

namespace {

void require_graded(const KhComplex& c) {
  if (c.variant() == Variant::Lee)
    throw PreconditionError("Lee differential is filtered, not graded; use the lee module");
}

EliminationResult eliminate(const KhComplex& c, const SparseBlock& block,
                            const std::vector<std::int64_t>* rhs = nullptr) {
  if (c.ring() == CoeffRing::FieldTwo)
    return eliminate_mod2(block, rhs);
  return eliminate_integer(block, rhs);
}

struct BlockSummary {
  std::size_t dim = 0;
  std::size_t out_rank = 0;          // rank of d leaving the block
  std::vector<BigInt> out_pivots;     // nonunit pivots of d leaving the block
};

BlockSummary summarize_block(const KhComplex& c, int i, int q) {
  auto source = c.generators(i, q);
  BlockSummary s;
  s.dim = source.size();
  if (source.empty())
    return s;
  auto target = c.generators(i + 1, q);
  if (target.empty())
    return s;
  auto result = eliminate(c, c.differential_matrix(source, target));
  s.out_rank = result.rank;
  s.out_pivots = std::move(result.nonunit_pivots);
  return s;
}

HomologyGroup assemble(const KhComplex& c, const BlockSummary& here, const BlockSummary& below) {
  HomologyGroup g;
  g.free_rank = static_cast<int>(here.dim - here.out_rank - below.out_rank);
  if (c.ring() == CoeffRing::Integers)
    g.torsion = invariant_factors(below.out_pivots);
  return g;
}

} // namespace

BigradedHomology bigraded_homology(const KhComplex& c, int threads) {
  require_graded(c);
  std::vector<std::pair<int, int>> keys;
  for (int i = c.min_degree(); i <= c.max_degree(); ++i)
    for (int q : c.quantum_degrees(i))
      keys.emplace_back(i, q);

  std::map<std::pair<int, int>, BlockSummary> summaries;
  std::mutex mutex;
  parallel_for(keys.size(), threads, [&](std::size_t k) {
    auto s = summarize_block(c, keys[k].first, keys[k].second);
    std::lock_guard lock(mutex);
    summaries.emplace(keys[k], std::move(s));
  });

  BigradedHomology h;
  const BlockSummary empty;
  for (const auto& [key, here] : summaries) {
    auto below = summaries.find({key.first - 1, key.second});
    h.set(key.first, key.second, assemble(c, here, below == summaries.end() ? empty : below->second));
  }
  return h;
}

HomologyGroup homology_at(const KhComplex& c, int i, int q) {
  require_graded(c);
  return assemble(c, summarize_block(c, i, q), summarize_block(c, i - 1, q));
}

ClassInfo cycle_class_info(const KhComplex& c, const Chain& raw) {
  require_graded(c);
  const Chain x = c.normalized(raw);
  if (!c.apply_differential(x).is_zero())
    throw PreconditionError("cycle_class_info needs a cycle");
  ClassInfo info;
  if (x.is_zero())
    return info;

  std::map<std::pair<int, int>, std::vector<std::pair<CubeGenerator, std::int64_t>>> by_block;
  for (const auto& [g, coeff] : x)
    by_block[{c.homological_degree(g.vertex), c.quantum_degree(g)}].emplace_back(g, coeff);

  bool in_saturation = true; // every residual coordinate vanishes
  BigInt order = 1;
  BigInt divisibility = 0;
  for (const auto& [key, terms] : by_block) {
    const auto [i, q] = key;
    auto rows = c.generators(i, q);
    std::vector<std::int64_t> rhs(rows.size(), 0);
    for (const auto& [g, coeff] : terms) {
      auto it = std::lower_bound(rows.begin(), rows.end(), g);
      rhs[it - rows.begin()] = coeff;
    }
    auto cols = c.generators(i - 1, q);
    auto result = eliminate(c, c.differential_matrix(cols, rows), &rhs);
    for (const auto& r : result.residual_rhs) {
      in_saturation = false;
      divisibility = gcd(divisibility, abs(r));
    }
    if (c.ring() == CoeffRing::Integers) {
      for (std::size_t k = 0; k < result.nonunit_pivots.size(); ++k) {
        const BigInt p = abs(result.nonunit_pivots[k]);
        const BigInt need = p / gcd(p, abs(result.nonunit_pivot_rhs[k]));
        order = order / gcd(order, need) * need;
      }
    }
  }

  if (c.ring() == CoeffRing::FieldTwo) {
    info.is_zero = in_saturation;
    info.order = in_saturation ? 1 : 2;
    info.divisibility = in_saturation ? 0 : 1;
  } else if (c.ring() == CoeffRing::Rationals) {
    info.is_zero = in_saturation;
    info.order = in_saturation ? 1 : 0;
    info.divisibility = in_saturation ? 0 : 1;
  } else {
    info.order = in_saturation ? order : BigInt(0);
    info.is_zero = in_saturation && order == 1;
    info.divisibility = divisibility;
  }
  info.is_torsion = info.order != 0;
  info.is_primitive = info.order == 0 && info.divisibility == 1;
  return info;
}

LaurentPolynomial graded_euler_characteristic(const BigradedHomology& h) {
  LaurentPolynomial p;
  for (const auto& [key, g] : h.groups())
    p.add(key.second, (key.first % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(g.free_rank));
  return p;
}

} // namespace khtrans
