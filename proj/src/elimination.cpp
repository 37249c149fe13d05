#include "khtrans/elimination.hpp"

#include "khtrans/errors.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace khtrans {

namespace {

struct Overflow {};

// Scalar policies. Each provides: conversion, ring operations, unit test,
// magnitude comparison, truncating division and extended gcd.

struct Checked64 {
  using T = std::int64_t;
  static T from(std::int64_t v) { return v; }
  static BigInt to_big(T v) { return BigInt(v); }
  static bool is_zero(T v) { return v == 0; }
  static bool is_unit(T v) { return v == 1 || v == -1; }
  static T add(T a, T b) {
    T r;
    if (__builtin_add_overflow(a, b, &r))
      throw Overflow{};
    return r;
  }
  static T sub(T a, T b) {
    T r;
    if (__builtin_sub_overflow(a, b, &r))
      throw Overflow{};
    return r;
  }
  static T mul(T a, T b) {
    T r;
    if (__builtin_mul_overflow(a, b, &r))
      throw Overflow{};
    return r;
  }
  static T magnitude(T v) {
    if (v == std::numeric_limits<T>::min())
      throw Overflow{};
    return v < 0 ? -v : v;
  }
  static T quotient(T a, T b) { return a / b; }
  static T remainder(T a, T b) { return a % b; }
};

struct Arbitrary {
  using T = BigInt;
  static T from(std::int64_t v) { return T(v); }
  static BigInt to_big(const T& v) { return v; }
  static bool is_zero(const T& v) { return v.is_zero(); }
  static bool is_unit(const T& v) { return v == 1 || v == -1; }
  static T add(const T& a, const T& b) { return a + b; }
  static T sub(const T& a, const T& b) { return a - b; }
  static T mul(const T& a, const T& b) { return a * b; }
  static T magnitude(const T& v) { return abs(v); }
  static T quotient(const T& a, const T& b) { return a / b; }
  static T remainder(const T& a, const T& b) { return a % b; }
};

struct Mod2 {
  using T = std::uint8_t;
  static T from(std::int64_t v) { return static_cast<T>(v & 1); }
  static BigInt to_big(T v) { return BigInt(v); }
  static bool is_zero(T v) { return v == 0; }
  static bool is_unit(T v) { return v == 1; }
  static T add(T a, T b) { return a ^ b; }
  static T sub(T a, T b) { return a ^ b; }
  static T mul(T a, T b) { return a & b; }
  static T magnitude(T v) { return v; }
  static T quotient(T a, T) { return a; }
  static T remainder(T, T) { return 0; }
};

template <class Ops>
struct GcdResult {
  typename Ops::T g, s, t;
};

// s*a + t*b = g, g = gcd(a, b) up to sign.
template <class Ops>
GcdResult<Ops> extended_gcd(typename Ops::T a, typename Ops::T b) {
  using T = typename Ops::T;
  T old_r = a, r = b;
  T old_s = Ops::from(1), s = Ops::from(0);
  T old_t = Ops::from(0), t = Ops::from(1);
  while (!Ops::is_zero(r)) {
    T q = Ops::quotient(old_r, r);
    T next_r = Ops::sub(old_r, Ops::mul(q, r));
    old_r = r;
    r = next_r;
    T next_s = Ops::sub(old_s, Ops::mul(q, s));
    old_s = s;
    s = next_s;
    T next_t = Ops::sub(old_t, Ops::mul(q, t));
    old_t = t;
    t = next_t;
  }
  return {old_r, old_s, old_t};
}

template <class Ops>
class SparseEliminator {
public:
  using T = typename Ops::T;

  SparseEliminator(const SparseBlock& a, const std::vector<std::int64_t>* rhs)
      : rows_(a.rows), col_rows_(a.cols), col_count_(a.cols, 0), has_rhs_(rhs != nullptr) {
    std::vector<std::vector<std::pair<int, std::int64_t>>> raw(a.rows);
    for (const auto& e : a.entries) {
      if (e.row < 0 || e.row >= a.rows || e.col < 0 || e.col >= a.cols)
        throw PreconditionError("matrix entry out of range");
      raw[e.row].emplace_back(e.col, e.value);
    }
    for (int r = 0; r < a.rows; ++r) {
      auto& entries = raw[r];
      std::sort(entries.begin(), entries.end());
      Row& row = rows_[r];
      for (std::size_t k = 0; k < entries.size(); ++k) {
        if (k + 1 < entries.size() && entries[k].first == entries[k + 1].first)
          throw PreconditionError("duplicate matrix entry");
        T v = Ops::from(entries[k].second);
        if (Ops::is_zero(v))
          continue;
        row.cols.push_back(entries[k].first);
        row.vals.push_back(v);
        col_rows_[entries[k].first].push_back(r);
        ++col_count_[entries[k].first];
      }
    }
    if (has_rhs_) {
      if (static_cast<int>(rhs->size()) != a.rows)
        throw PreconditionError("right-hand side has the wrong length");
      rhs_.reserve(a.rows);
      for (auto v : *rhs)
        rhs_.push_back(Ops::from(v));
    }
  }

  EliminationResult run() {
    unit_phase();
    general_phase();
    EliminationResult out;
    out.rank = rank_;
    out.nonunit_pivots = std::move(nonunit_pivots_);
    out.nonunit_pivot_rhs = std::move(nonunit_pivot_rhs_);
    if (has_rhs_) {
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (!rows_[r].pivot && !Ops::is_zero(rhs_[r]))
          out.residual_rhs.push_back(Ops::to_big(rhs_[r]));
      }
    }
    return out;
  }

private:
  struct Row {
    std::vector<int> cols;
    std::vector<T> vals;
    bool pivot = false;
    bool hard = false;
  };

  std::vector<Row> rows_;
  std::vector<std::vector<int>> col_rows_; // may hold stale or repeated rows
  std::vector<int> col_count_;
  bool has_rhs_;
  std::vector<T> rhs_;
  std::size_t rank_ = 0;
  std::vector<BigInt> nonunit_pivots_;
  std::vector<BigInt> nonunit_pivot_rhs_;
  using QueueEntry = std::pair<std::size_t, int>;
  std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>> queue_;

  const T* find(const Row& row, int col) const {
    auto it = std::lower_bound(row.cols.begin(), row.cols.end(), col);
    if (it == row.cols.end() || *it != col)
      return nullptr;
    return &row.vals[it - row.cols.begin()];
  }

  // Replaces row `r` by s*row(r) + t*other, keeping the column index in sync.
  // `other` must not alias row `r`.
  void combine_into(int r, const T& s, const T& t, const Row& other) {
    Row& row = rows_[r];
    std::vector<int> cols;
    std::vector<T> vals;
    cols.reserve(row.cols.size() + other.cols.size());
    vals.reserve(row.cols.size() + other.cols.size());
    std::size_t i = 0, k = 0;
    const bool s_is_one = s == Ops::from(1);
    while (i < row.cols.size() || k < other.cols.size()) {
      int col;
      T v;
      bool was_present = false;
      if (k >= other.cols.size() || (i < row.cols.size() && row.cols[i] < other.cols[k])) {
        col = row.cols[i];
        v = s_is_one ? row.vals[i] : Ops::mul(s, row.vals[i]);
        was_present = true;
        ++i;
      } else if (i >= row.cols.size() || other.cols[k] < row.cols[i]) {
        col = other.cols[k];
        v = Ops::mul(t, other.vals[k]);
        ++k;
      } else {
        col = row.cols[i];
        v = Ops::add(s_is_one ? row.vals[i] : Ops::mul(s, row.vals[i]), Ops::mul(t, other.vals[k]));
        was_present = true;
        ++i;
        ++k;
      }
      if (Ops::is_zero(v)) {
        if (was_present)
          --col_count_[col];
        continue;
      }
      if (!was_present) {
        ++col_count_[col];
        col_rows_[col].push_back(r);
      }
      cols.push_back(col);
      vals.push_back(std::move(v));
    }
    row.cols = std::move(cols);
    row.vals = std::move(vals);
  }

  void row_axpy(int target, const T& factor, int source) {
    // row(target) -= factor * row(source)
    combine_into(target, Ops::from(1), Ops::sub(Ops::from(0), factor), rows_[source]);
    if (has_rhs_)
      rhs_[target] = Ops::sub(rhs_[target], Ops::mul(factor, rhs_[source]));
  }

  // Live rows (other than `except`) with a nonzero entry in `col`.
  std::vector<int> rows_in_column(int col, int except) {
    auto& list = col_rows_[col];
    std::vector<int> live;
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    std::vector<int> kept;
    for (int r : list) {
      if (rows_[r].pivot || !find(rows_[r], col))
        continue;
      kept.push_back(r);
      if (r != except)
        live.push_back(r);
    }
    list = std::move(kept);
    return live;
  }

  void retire_pivot_row(int r, const T& pivot) {
    Row& row = rows_[r];
    for (int col : row.cols)
      --col_count_[col];
    row.cols.clear();
    row.vals.clear();
    row.pivot = true;
    ++rank_;
    if (!Ops::is_unit(pivot)) {
      nonunit_pivots_.push_back(Ops::to_big(pivot));
      nonunit_pivot_rhs_.push_back(has_rhs_ ? Ops::to_big(rhs_[r]) : BigInt(0));
    }
  }

  void requeue(int r) {
    rows_[r].hard = false;
    queue_.emplace(rows_[r].cols.size(), r);
  }

  void unit_phase() {
    for (int r = 0; r < static_cast<int>(rows_.size()); ++r) {
      if (!rows_[r].cols.empty())
        queue_.emplace(rows_[r].cols.size(), r);
    }
    while (!queue_.empty()) {
      auto [size, r] = queue_.top();
      queue_.pop();
      Row& row = rows_[r];
      if (row.pivot || row.hard || row.cols.size() != size || row.cols.empty())
        continue;
      int best = -1;
      for (std::size_t k = 0; k < row.cols.size(); ++k) {
        if (Ops::is_unit(row.vals[k]) &&
            (best < 0 || col_count_[row.cols[k]] < col_count_[row.cols[best]]))
          best = static_cast<int>(k);
      }
      if (best < 0) {
        row.hard = true;
        continue;
      }
      const int col = row.cols[best];
      const T pivot = row.vals[best];
      for (int other : rows_in_column(col, r)) {
        const T e = *find(rows_[other], col);
        // pivot is a unit, so e / pivot = e * pivot.
        row_axpy(other, Ops::mul(e, pivot), r);
        requeue(other);
      }
      retire_pivot_row(r, pivot);
    }
  }

  // Column operation on columns (c, c2):
  //   col c  <- s*col c + t*col c2
  //   col c2 <- u*col c + w*col c2
  void column_combine(int c, int c2, const T& s, const T& t, const T& u, const T& w) {
    std::vector<int> touched = rows_in_column(c, -1);
    for (int r : rows_in_column(c2, -1))
      touched.push_back(r);
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (int r : touched) {
      Row& row = rows_[r];
      const T* pa = find(row, c);
      const T* pb = find(row, c2);
      T a = pa ? *pa : Ops::from(0);
      T b = pb ? *pb : Ops::from(0);
      set_entry(r, c, Ops::add(Ops::mul(s, a), Ops::mul(t, b)));
      set_entry(r, c2, Ops::add(Ops::mul(u, a), Ops::mul(w, b)));
    }
  }

  void set_entry(int r, int col, T value) {
    Row& row = rows_[r];
    auto it = std::lower_bound(row.cols.begin(), row.cols.end(), col);
    const auto idx = it - row.cols.begin();
    const bool present = it != row.cols.end() && *it == col;
    if (Ops::is_zero(value)) {
      if (present) {
        row.cols.erase(it);
        row.vals.erase(row.vals.begin() + idx);
        --col_count_[col];
      }
      return;
    }
    if (present) {
      row.vals[idx] = std::move(value);
    } else {
      row.cols.insert(it, col);
      row.vals.insert(row.vals.begin() + idx, std::move(value));
      ++col_count_[col];
      col_rows_[col].push_back(r);
    }
  }

  void general_phase() {
    std::vector<int> active;
    for (int r = 0; r < static_cast<int>(rows_.size()); ++r) {
      if (!rows_[r].pivot && !rows_[r].cols.empty())
        active.push_back(r);
    }
    while (true) {
      int pr = -1, pc = -1;
      T best{};
      std::vector<int> still;
      for (int r : active) {
        const Row& row = rows_[r];
        if (row.pivot || row.cols.empty())
          continue;
        still.push_back(r);
        for (std::size_t k = 0; k < row.cols.size(); ++k) {
          T m = Ops::magnitude(row.vals[k]);
          if (pr < 0 || m < best) {
            best = m;
            pr = r;
            pc = row.cols[k];
          }
        }
      }
      active = std::move(still);
      if (pr < 0)
        return;
      reduce_at(pr, pc);
    }
  }

  // Diagonalizes around (r, c) until it is the only entry in its row and column.
  void reduce_at(int r, int c) {
    while (true) {
      for (int other : rows_in_column(c, r)) {
        const T p = *find(rows_[r], c);
        const T e = *find(rows_[other], c);
        if (Ops::is_zero(Ops::remainder(e, p))) {
          row_axpy(other, Ops::quotient(e, p), r);
          continue;
        }
        auto [g, s, t] = extended_gcd<Ops>(p, e);
        const T u = Ops::sub(Ops::from(0), Ops::quotient(e, g));
        const T w = Ops::quotient(p, g);
        Row old_r = rows_[r];
        Row old_other = rows_[other];
        T rhs_r = has_rhs_ ? rhs_[r] : T{};
        T rhs_o = has_rhs_ ? rhs_[other] : T{};
        // r <- s*r + t*other ; other <- u*r + w*other
        combine_into(r, s, t, old_other);
        combine_into(other, w, u, old_r);
        if (has_rhs_) {
          rhs_[r] = Ops::add(Ops::mul(s, rhs_r), Ops::mul(t, rhs_o));
          rhs_[other] = Ops::add(Ops::mul(u, rhs_r), Ops::mul(w, rhs_o));
        }
      }
      // Column c now lives only in row r; clear the rest of row r.
      bool column_dirty = false;
      while (rows_[r].cols.size() > 1 && !column_dirty) {
        Row& row = rows_[r];
        const T p = *find(row, c);
        std::size_t k = 0;
        while (k < row.cols.size() && row.cols[k] == c)
          ++k;
        const int c2 = row.cols[k];
        const T f = row.vals[k];
        if (Ops::is_zero(Ops::remainder(f, p))) {
          // Column c has no other rows, so this column operation only touches row r.
          set_entry(r, c2, Ops::from(0));
          continue;
        }
        auto [g, s, t] = extended_gcd<Ops>(p, f);
        column_combine(c, c2, s, t, Ops::sub(Ops::from(0), Ops::quotient(f, g)), Ops::quotient(p, g));
        column_dirty = true;
      }
      if (!column_dirty) {
        const T pivot = *find(rows_[r], c);
        retire_pivot_row(r, pivot);
        return;
      }
    }
  }
};

template <class Ops>
EliminationResult run_eliminator(const SparseBlock& a, const std::vector<std::int64_t>* rhs) {
  SparseEliminator<Ops> e(a, rhs);
  return e.run();
}

} // namespace

EliminationResult eliminate_integer(const SparseBlock& a, const std::vector<std::int64_t>* rhs) {
  try {
    return run_eliminator<Checked64>(a, rhs);
  } catch (const Overflow&) {
    return run_eliminator<Arbitrary>(a, rhs);
  }
}

EliminationResult eliminate_mod2(const SparseBlock& a, const std::vector<std::int64_t>* rhs) {
  return run_eliminator<Mod2>(a, rhs);
}

std::vector<BigInt> invariant_factors(std::vector<BigInt> diagonal) {
  std::vector<BigInt> d;
  for (auto& v : diagonal) {
    if (!v.is_zero())
      d.push_back(abs(v));
  }
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      BigInt g = gcd(d[i], d[j]);
      BigInt l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  }
  std::vector<BigInt> out;
  for (auto& v : d) {
    if (v != 1)
      out.push_back(v);
  }
  return out;
}

} // namespace khtrans
