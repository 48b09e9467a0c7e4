#pragma once

#include <utility>
#include <vector>

#include "bbk/errors.hpp"
#include "bbk/rings.hpp"

namespace bbk {

/// Dense row-major matrix over a coefficient ring R.
template <class R>
class Mat {
 public:
  using Elem = typename R::Elem;

  Mat(R ring, int rows, int cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimension");
    a_.assign(static_cast<size_t>(rows) * cols, ring_.zero());
  }

  static Mat identity(R ring, int n) {
    Mat m(std::move(ring), n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = m.ring().one();
    return m;
  }

  static Mat from_rows(R ring, std::vector<std::vector<Elem>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    Mat m(std::move(ring), r, c);
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(rows[i].size()) != c)
        throw DimensionMismatch("ragged row list");
      for (int j = 0; j < c; ++j) m.at(i, j) = std::move(rows[i][j]);
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const R& ring() const { return ring_; }

  Elem& at(int i, int j) { return a_[index(i, j)]; }
  const Elem& at(int i, int j) const { return a_[index(i, j)]; }

  std::vector<Elem> row(int i) const {
    std::vector<Elem> r;
    r.reserve(cols_);
    for (int j = 0; j < cols_; ++j) r.push_back(at(i, j));
    return r;
  }

  void append_row(std::vector<Elem> r) {
    if (rows_ == 0 && cols_ == 0) {
      cols_ = static_cast<int>(r.size());
    } else if (static_cast<int>(r.size()) != cols_) {
      throw DimensionMismatch("appended row has wrong length");
    }
    for (auto& v : r) a_.push_back(std::move(v));
    ++rows_;
  }

  bool is_zero() const {
    for (const auto& v : a_)
      if (!ring_.is_zero(v)) return false;
    return true;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (size_t k = 0; k < a.a_.size(); ++k)
      if (!a.ring_.eq(a.a_[k], b.a_[k])) return false;
    return true;
  }

 private:
  size_t index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
      throw DimensionMismatch("matrix index out of range");
    return static_cast<size_t>(i) * cols_ + j;
  }

  R ring_;
  int rows_, cols_;
  std::vector<Elem> a_;
};

template <class R>
Mat<R> mat_mul(const Mat<R>& a, const Mat<R>& b) {
  if (!a.ring().same_ring(b.ring())) throw MixedRings("matrix product across rings");
  if (a.cols() != b.rows())
    throw DimensionMismatch("matrix product shape mismatch");
  const R& ring = a.ring();
  Mat<R> c(ring, a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (ring.is_zero(a.at(i, k))) continue;
      for (int j = 0; j < b.cols(); ++j)
        c.at(i, j) = ring.add(c.at(i, j), ring.mul(a.at(i, k), b.at(k, j)));
    }
  return c;
}

template <class R>
Mat<R> mat_add(const Mat<R>& a, const Mat<R>& b) {
  if (!a.ring().same_ring(b.ring())) throw MixedRings("matrix sum across rings");
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("matrix sum shape mismatch");
  Mat<R> c(a.ring(), a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      c.at(i, j) = a.ring().add(a.at(i, j), b.at(i, j));
  return c;
}

template <class R>
Mat<R> mat_sub(const Mat<R>& a, const Mat<R>& b) {
  if (!a.ring().same_ring(b.ring())) throw MixedRings("matrix difference across rings");
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("matrix difference shape mismatch");
  Mat<R> c(a.ring(), a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      c.at(i, j) = a.ring().sub(a.at(i, j), b.at(i, j));
  return c;
}

/// Gauss-Jordan elimination pivoting on invertible entries only. Columns at
/// index >= lhs_cols (the augmented part, if any) are never pivoted on.
///
/// Over a field every nonzero entry is invertible and this is ordinary
/// exact Gaussian elimination, pivoting per column on the first nonzero
/// entry. Over the parametric ring only rational constants can be pivots;
/// the whole remaining submatrix is searched and elimination fails with
/// UnsupportedRing when nonzero entries survive without any invertible
/// pivot left.
///
/// Returns the pivots as (row, column) pairs, one per pivot row in order.
template <class R>
std::vector<std::pair<int, int>> reduce_in_place(Mat<R>& m, int lhs_cols) {
  const R& ring = m.ring();
  std::vector<std::pair<int, int>> pivots;
  std::vector<bool> col_used(lhs_cols, false);
  int r = 0;
  while (r < m.rows()) {
    int pr = -1, pc = -1;
    for (int j = 0; j < lhs_cols && pc == -1; ++j) {
      if (col_used[j]) continue;
      for (int i = r; i < m.rows(); ++i) {
        if (ring.is_unit(m.at(i, j))) {
          pr = i;
          pc = j;
          break;
        }
      }
    }
    if (pc == -1) {
      if constexpr (!R::is_field) {
        for (int j = 0; j < lhs_cols; ++j) {
          if (col_used[j]) continue;
          for (int i = r; i < m.rows(); ++i)
            if (!ring.is_zero(m.at(i, j)))
              throw UnsupportedRing(
                  "elimination is stuck: no invertible pivot left");
        }
      }
      break;
    }
    if (pr != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(r, j));
    auto piv_inv = ring.inv(m.at(r, pc));
    for (int j = 0; j < m.cols(); ++j) m.at(r, j) = ring.mul(piv_inv, m.at(r, j));
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || ring.is_zero(m.at(i, pc))) continue;
      auto f = m.at(i, pc);
      for (int j = 0; j < m.cols(); ++j)
        m.at(i, j) = ring.sub(m.at(i, j), ring.mul(f, m.at(r, j)));
    }
    col_used[pc] = true;
    pivots.emplace_back(r, pc);
    ++r;
  }
  return pivots;
}

/// Rank by exact elimination; defined over fields only.
template <class R>
int rank(const Mat<R>& a) {
  if constexpr (!R::is_field)
    throw UnsupportedRing("rank over " + a.ring().name() + " is unsupported");
  Mat<R> m = a;
  return static_cast<int>(reduce_in_place(m, m.cols()).size());
}

/// True when v lies in the row space of m. Fields only.
template <class R>
bool in_row_space(const Mat<R>& m, const std::vector<typename R::Elem>& v) {
  if (static_cast<int>(v.size()) != m.cols())
    throw DimensionMismatch("vector length does not match column count");
  Mat<R> stacked = m;
  stacked.append_row(v);
  return rank(stacked) == rank(m);
}

enum class SolveStatus { kUnique, kUnderdetermined, kInconsistent };

template <class R>
struct Solution {
  SolveStatus status = SolveStatus::kInconsistent;
  std::vector<typename R::Elem> x;                    // particular solution
  std::vector<std::vector<typename R::Elem>> kernel;  // nullspace basis
};

/// Solves A x = b exactly: reports a particular solution plus a nullspace
/// basis, or inconsistency.
template <class R>
Solution<R> solve(const Mat<R>& a, const std::vector<typename R::Elem>& b) {
  const R& ring = a.ring();
  if (static_cast<int>(b.size()) != a.rows())
    throw DimensionMismatch("right-hand side length does not match row count");
  Mat<R> m(ring, a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    m.at(i, a.cols()) = b[i];
  }
  auto pivots = reduce_in_place(m, a.cols());

  Solution<R> sol;
  int nrank = static_cast<int>(pivots.size());
  for (int i = nrank; i < m.rows(); ++i)
    if (!ring.is_zero(m.at(i, a.cols()))) {
      sol.status = SolveStatus::kInconsistent;
      return sol;
    }

  std::vector<int> pivot_of_col(a.cols(), -1);
  for (auto [pr, pc] : pivots) pivot_of_col[pc] = pr;

  sol.x.assign(a.cols(), ring.zero());
  for (auto [pr, pc] : pivots) sol.x[pc] = m.at(pr, a.cols());

  for (int f = 0; f < a.cols(); ++f) {
    if (pivot_of_col[f] != -1) continue;
    std::vector<typename R::Elem> v(a.cols(), ring.zero());
    v[f] = ring.one();
    for (auto [pr, pc] : pivots) v[pc] = ring.neg(m.at(pr, f));
    sol.kernel.push_back(std::move(v));
  }
  sol.status = sol.kernel.empty() ? SolveStatus::kUnique : SolveStatus::kUnderdetermined;
  return sol;
}

template <class R>
std::vector<std::vector<typename R::Elem>> nullspace(const Mat<R>& a) {
  std::vector<typename R::Elem> zero(a.rows(), a.ring().zero());
  return solve(a, zero).kernel;
}

}  // namespace bbk
